#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "quadgor/apolarity.hpp"
#include "quadgor/errors.hpp"
#include "quadgor/gorenstein.hpp"
#include "quadgor/lefschetz.hpp"
#include "quadgor/simplicial.hpp"
#include "quadgor/util.hpp"

using qg::BigInt;
using qg::Errc;
using qg::Error;
using qg::HilbertVector;
using qg::ProbeVerdict;

namespace {

HilbertVector hv(std::vector<long> vals) {
  HilbertVector h;
  for (long v : vals) h.h.emplace_back(v);
  return h;
}

// Turan Hilbert entries from scratch: elementary symmetric e_k of the order
// vector, h_k = e_k + e_(d-k).
BigInt turan_h(const std::vector<int>& orders, int k) {
  const int d = static_cast<int>(orders.size()) + 1;
  std::vector<BigInt> e(static_cast<std::size_t>(d) + 1, BigInt(0));
  e[0] = 1;
  for (int a : orders)
    for (int j = d; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * a;
  const auto at = [&](int i) { return i >= 0 && i <= d ? e[static_cast<std::size_t>(i)] : BigInt(0); };
  return at(k) + at(d - k);
}

}  // namespace

TEST_CASE("verdict names are stable strings") {
  CHECK(std::string(qg::verdict_name(ProbeVerdict::WitnessedHold)) == "WITNESSED_HOLD");
  CHECK(std::string(qg::verdict_name(ProbeVerdict::ProvenFail)) == "PROVEN_FAIL");
  CHECK(std::string(qg::verdict_name(ProbeVerdict::NotWitnessed)) == "NOT_WITNESSED");
}

TEST_CASE("unimodality certificate on pinned vectors") {
  const auto flat = qg::unimodality_certificate(hv({1, 14, 24, 14, 1}));
  CHECK(flat.unimodal);
  CHECK(!flat.totally_nonunimodal);
  CHECK(!flat.first_violation.has_value());

  const auto dip = qg::unimodality_certificate(hv({1, 234, 216, 234, 1}));
  CHECK(!dip.unimodal);
  CHECK(dip.totally_nonunimodal);
  REQUIRE(dip.first_violation.has_value());
  CHECK(*dip.first_violation == 2);  // h_2 < h_3 after the descent

  // d = 3 never counts as totally non-unimodal
  const auto low = qg::unimodality_certificate(hv({1, 8, 8, 1}));
  CHECK(low.unimodal);
  CHECK(!low.totally_nonunimodal);

  CHECK_THROWS_AS(qg::unimodality_certificate(hv({2, 5, 2})), Error);
}

TEST_CASE("totally non-unimodal implies not unimodal") {
  for (const auto& vals : std::vector<std::vector<long>>{
           {1, 10, 9, 10, 1}, {1, 50, 40, 30, 40, 50, 1}, {1, 5, 7, 5, 1},
           {1, 3, 3, 1}, {1, 6, 2, 6, 1}}) {
    const auto cert = qg::unimodality_certificate(hv(vals));
    if (cert.totally_nonunimodal) CHECK(!cert.unimodal);
  }
}

TEST_CASE("wlp probe finds a witness on the single edge") {
  const auto edge = qg::build_complex({{0, 1}}, 2, {});
  const auto report = qg::wlp_probe(edge, 5, 1, 10);
  CHECK(report.verdict == ProbeVerdict::WitnessedHold);
  REQUIRE(report.witness.has_value());
  REQUIRE(report.levels.size() == 3);
  CHECK(report.levels[1].expected == 3);
  CHECK(report.levels[1].achieved == 3);
  CHECK(report.dimension_obstructions == std::vector<int>{2});  // h_2=3 > h_3=1

  // spec invariant: the witness reproduces full rank at every level
  const auto basis = qg::combinatorial_basis(edge);
  for (const auto& lvl : report.levels) {
    const auto mat = qg::multiplication_matrix(edge, basis, *report.witness, lvl.k);
    CHECK(BigInt(qg::rank(mat)) == lvl.achieved);
  }
}

TEST_CASE("wlp probe proves failure without sampling on non-unimodal input") {
  const auto t666 = qg::turan_complex({6, 6, 6});
  const auto start = std::chrono::steady_clock::now();
  const auto report = qg::wlp_probe(t666, 5, 9, 10);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(report.verdict == ProbeVerdict::ProvenFail);
  CHECK(!report.witness.has_value());
  for (const auto& lvl : report.levels) CHECK(lvl.achieved == 0);  // nothing sampled
  CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 5);

  bool mentions_drop = false;
  for (const auto& line : report.obstructions)
    if (line.find("h1") != std::string::npos && line.find("h2") != std::string::npos)
      mentions_drop = true;
  CHECK(mentions_drop);
  CHECK(std::find(report.dimension_obstructions.begin(),
                  report.dimension_obstructions.end(),
                  1) != report.dimension_obstructions.end());
}

TEST_CASE("wlp reports are reproducible and monotone in trials") {
  const auto t222 = qg::turan_complex({2, 2, 2});
  const auto a = qg::wlp_probe(t222, 4, 77, 10);
  const auto b = qg::wlp_probe(t222, 4, 77, 10);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i)
    CHECK(a.levels[i].achieved == b.levels[i].achieved);
  CHECK(a.verdict == b.verdict);

  const auto fewer = qg::wlp_probe(t222, 2, 77, 10);
  for (std::size_t i = 0; i < fewer.levels.size(); ++i)
    CHECK(fewer.levels[i].achieved <= a.levels[i].achieved);
}

TEST_CASE("dimension obstructions block injectivity in every trial") {
  const auto t22 = qg::turan_complex({2, 2});
  const auto report = qg::wlp_probe(t22, 5, 13, 10);
  // h = (1,8,8,1): level 2 drops from 8 to 1
  CHECK(std::find(report.dimension_obstructions.begin(),
                  report.dimension_obstructions.end(),
                  2) != report.dimension_obstructions.end());
  CHECK(report.levels[2].achieved <= 1);
  CHECK(report.levels[2].achieved < 8);
  CHECK_THROWS_AS(qg::wlp_probe(t22, 0, 1, 10), Error);
}

TEST_CASE("injectivity probe is impossible exactly when h1 exceeds h2") {
  const auto bad = qg::injectivity_probe_degree1(qg::turan_complex({6, 6, 6}), 5, 1, 10);
  CHECK(bad.impossible);
  CHECK(!bad.witnessed);
  CHECK(bad.achieved.empty());
  CHECK(bad.h1 == BigInt(234));
  CHECK(bad.h2 == BigInt(216));

  const auto ok = qg::injectivity_probe_degree1(qg::turan_complex({2, 2, 2}), 5, 1, 10);
  CHECK(!ok.impossible);
  CHECK(ok.h1 == BigInt(14));
  CHECK(ok.h2 == BigInt(24));
  CHECK(ok.achieved.size() == 5);
  // an alternating combination of the facet representatives lies in the
  // kernel of every multiplication, so rank never reaches h1 = 14
  for (const auto& r : ok.achieved) {
    CHECK(r <= BigInt(13));
    CHECK(r >= BigInt(1));
  }
  CHECK(!ok.witnessed);

  const auto simplex = qg::injectivity_probe_degree1(
      qg::build_complex({{0, 1, 2}}, 3, {}), 5, 1, 10);
  CHECK(simplex.witnessed);
}

TEST_CASE("boundary of non-unimodality sits between orders 5 and 6") {
  CHECK(turan_h({5, 5, 5}, 1) == BigInt(140));
  CHECK(turan_h({5, 5, 5}, 2) == BigInt(150));
  CHECK(turan_h({5, 5, 5}, 1) < turan_h({5, 5, 5}, 2));
  CHECK(turan_h({6, 6, 6}, 1) == BigInt(234));
  CHECK(turan_h({6, 6, 6}, 2) == BigInt(216));
  CHECK(turan_h({6, 6, 6}, 1) > turan_h({6, 6, 6}, 2));
  // consistency with the built complexes
  CHECK(qg::hilbert_combinatorial(qg::turan_complex({5, 5, 5})).h[1] == BigInt(140));
  CHECK(qg::hilbert_combinatorial(qg::turan_complex({5, 5, 5})).h[2] == BigInt(150));
}

TEST_CASE("equal-order counterexample search reproduces the threshold") {
  const auto r4 = qg::counterexample_search(4, true);
  CHECK(r4.orders == std::vector<int>{6, 6, 6});
  CHECK(r4.codimension == BigInt(234));
  CHECK(r4.hilbert == std::vector<BigInt>{1, 234, 216, 234, 1});

  const auto r5 = qg::counterexample_search(5, true);
  CHECK(r5.orders == std::vector<int>{6, 6, 6, 6});

  // independent rederivation: equal orders a work iff a^3 + 3a > 6a^2
  for (int a = 2; a <= 10; ++a) {
    const bool formula = BigInt(a) * a * a + 3 * BigInt(a) > 6 * BigInt(a) * a;
    const bool scanned = turan_h({a, a, a}, 1) > turan_h({a, a, a}, 2);
    CHECK(formula == scanned);
    CHECK(scanned == (a >= 6));
  }
}

TEST_CASE("free search finds a smaller-sum instance first") {
  const auto r = qg::counterexample_search(4, false);
  // the scan orders vectors by sum, then lexicographically
  CHECK(r.orders == std::vector<int>{5, 5, 7});
  // verify it really is totally non-unimodal via the actual complex
  const auto h = qg::hilbert_combinatorial(qg::turan_complex(r.orders));
  CHECK(h.h[1] > h.h[2]);
  CHECK(h.h == r.hilbert);
  // and that nothing with smaller sum (or equal sum, lex smaller) works
  for (int a = 2; a <= 17; ++a)
    for (int b = a; a + b <= 15; ++b)
      for (int c2 = b; a + b + c2 <= 17; ++c2) {
        if (std::vector<int>{a, b, c2} >= r.orders &&
            a + b + c2 == 17)
          continue;
        if (a + b + c2 > 17) continue;
        if (std::vector<int>{a, b, c2} == r.orders) continue;
        CHECK(turan_h({a, b, c2}, 1) <= turan_h({a, b, c2}, 2));
      }
}

TEST_CASE("search rejects bad degrees and respects the cap") {
  CHECK_THROWS_AS(qg::counterexample_search(3, true), Error);
  try {
    qg::counterexample_search(3, true);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadDegree);
  }
  CHECK_THROWS_AS(qg::counterexample_search(4, true, 5), Error);
  try {
    qg::counterexample_search(4, true, 5);  // threshold 6 just out of reach
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFoundWithinBound);
  }
}

TEST_CASE("slp probe certifies the single edge") {
  const auto edge = qg::build_complex({{0, 1}}, 2, {});
  const auto report = qg::slp_probe(edge, 5, 1, 10);
  CHECK(report.verdict == ProbeVerdict::WitnessedHold);
  REQUIRE(report.witness.has_value());
  // levels cover all (k, t) with k + t <= d = 3
  CHECK(report.levels.size() == 6);
  for (const auto& lvl : report.levels) {
    CHECK(lvl.achieved == lvl.expected);
    CHECK(lvl.k + lvl.power <= 3);
    CHECK(lvl.power >= 1);
  }
}

TEST_CASE("slp composite ranks match the brute route") {
  const auto t22 = qg::turan_complex({2, 2});
  const auto f = qg::form_from_complex(t22);
  const auto basis = qg::combinatorial_basis(t22);
  qg::Rng rng(5);
  const int d = t22.d();
  for (int trial = 0; trial < 3; ++trial) {
    const auto L = qg::random_linear_form(t22.n(), t22.m, rng, 10);
    for (int k = 0; k < d; ++k)
      for (int t = 1; k + t <= d; ++t) {
        auto composite = qg::multiplication_matrix(t22, basis, L, k);
        for (int s = 1; s < t; ++s)
          composite = qg::multiplication_matrix(t22, basis, L, k + s).multiply(composite);
        CHECK(qg::rank(composite) == qg::brute_multiplication_rank(f, L, k, t));
      }
  }
}

TEST_CASE("slp probe inherits the unimodality short-circuit") {
  const auto report = qg::slp_probe(qg::turan_complex({6, 6, 6}), 5, 1, 10);
  CHECK(report.verdict == ProbeVerdict::ProvenFail);
  CHECK(!report.obstructions.empty());
}

TEST_CASE("slp guard rejects oversized levels") {
  CHECK_THROWS_AS(qg::slp_probe(qg::turan_complex({2, 2, 2}), 3, 1, 10, 10), Error);
  try {
    qg::slp_probe(qg::turan_complex({2, 2, 2}), 3, 1, 10, 10);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InstanceTooLarge);
  }
}

TEST_CASE("single-variable forms collapse under squaring") {
  // X1^2 lies in the ideal: the composite level (1,2) has rank 0 for L = X1.
  const auto t22 = qg::turan_complex({2, 2});
  const auto basis = qg::combinatorial_basis(t22);
  qg::LinearForm L;
  L.x_coeffs.assign(4, qg::Rational(0));
  L.u_coeffs.assign(4, qg::Rational(0));
  L.x_coeffs[0] = qg::Rational(1);
  const auto step1 = qg::multiplication_matrix(t22, basis, L, 1);
  const auto step2 = qg::multiplication_matrix(t22, basis, L, 2);
  CHECK(qg::rank(step2.multiply(step1)) == 0);
  CHECK(qg::rank(step1) >= 1);
}
