#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "quadgor/errors.hpp"
#include "quadgor/simplicial.hpp"
#include "quadgor/util.hpp"

using qg::Errc;
using qg::Error;
using qg::Face;
using qg::SimplicialComplex;

namespace {

// Independent face test: a subset is a face iff some facet contains it.
bool brute_is_face(const SimplicialComplex& c, const std::vector<int>& vs) {
  for (const auto& g : c.facets) {
    bool inside = true;
    for (int v : vs)
      if (!g.has(v)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

// All cardinality-k faces by scanning every k-subset of the vertex set.
std::set<std::vector<int>> brute_faces(const SimplicialComplex& c, int k) {
  std::set<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(c.m), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> vs;
    for (int v = 0; v < c.m; ++v)
      if (pick[static_cast<std::size_t>(v)]) vs.push_back(v);
    if (brute_is_face(c, vs)) out.insert(vs);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Elementary symmetric polynomial e_k of the order vector, by direct DP.
unsigned long long sym_poly(const std::vector<int>& orders, int k) {
  std::vector<unsigned long long> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (int a : orders)
    for (int j = k; j >= 1; --j)
      e[static_cast<std::size_t>(j)] +=
          e[static_cast<std::size_t>(j - 1)] * static_cast<unsigned long long>(a);
  return e[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("face primitive operations") {
  const Face f = Face::from_vertices({5, 0, 2});
  CHECK(f.cardinality() == 3);
  CHECK(f.has(0));
  CHECK(f.has(2));
  CHECK(f.has(5));
  CHECK(!f.has(1));
  CHECK(f.to_string() == "{0,2,5}");
  CHECK(f.vertices() == std::vector<int>{0, 2, 5});
  const Face g = Face::from_vertices({0, 2});
  CHECK(f.contains(g));
  CHECK(!g.contains(f));
  CHECK(f.minus(g) == Face::singleton(5));
  CHECK(f.intersect(g) == g);
  CHECK(g.united(Face::singleton(5)) == f);
  CHECK(f.without(5) == g);
  CHECK(g.with(5) == f);
  CHECK(Face().empty());
  CHECK(g < f);
}

TEST_CASE("build_complex validates input") {
  CHECK_THROWS_AS(qg::build_complex({}, 0, {}), Error);
  CHECK_THROWS_AS(qg::build_complex({{0, 1}, {1, 2, 3}}, 4, {}), Error);  // not pure
  CHECK_THROWS_AS(qg::build_complex({{0, 1}, {1, 0}}, 2, {}), Error);  // duplicate
  CHECK_THROWS_AS(qg::build_complex({{0, 1}}, 3, {}), Error);  // vertex 2 unused
  CHECK_THROWS_AS(qg::build_complex({{0}, {1}}, 2, {}), Error);  // cardinality 1
  CHECK_THROWS_AS(qg::build_complex({{0, 5}}, 2, {}), Error);  // out of range

  try {
    qg::build_complex({{0, 1}, {1, 2, 3}}, 4, {});
    FAIL("expected NonPure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPure);
  }

  const auto c = qg::build_complex({{1, 0}, {2, 1}}, 3, {});
  CHECK(c.n() == 2);
  CHECK(c.m == 3);
  CHECK(c.d() == 3);
  CHECK(c.facets[0] == Face::from_vertices({0, 1}));  // canonical order
}

TEST_CASE("enumerate_faces matches subset scan") {
  const auto hollow = qg::build_complex({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}, 6, {});
  for (int k = 0; k <= hollow.d() - 1; ++k) {
    const auto fast = qg::enumerate_faces(hollow, k);
    const auto slow = brute_faces(hollow, k);
    REQUIRE(fast.size() == slow.size());
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    for (const auto& f : fast) CHECK(slow.count(f.vertices()) == 1);
  }
  CHECK(qg::enumerate_faces(hollow, 0).size() == 1);
  CHECK(qg::enumerate_faces(hollow, 0)[0].empty());
  CHECK_THROWS_AS(qg::enumerate_faces(hollow, -1), Error);
  CHECK_THROWS_AS(qg::enumerate_faces(hollow, hollow.d()), Error);
}

TEST_CASE("f_vector counts faces by cardinality") {
  const auto hollow = qg::build_complex({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}, 6, {});
  const auto fv = qg::f_vector(hollow);
  REQUIRE(fv.e.size() == static_cast<std::size_t>(hollow.d()));
  CHECK(fv.e[0] == 1);
  for (int k = 0; k < hollow.d(); ++k)
    CHECK(fv.at(k) == brute_faces(hollow, k).size());
  CHECK(fv.at(hollow.d()) == 0);  // beyond the facets
  CHECK(fv.at(-1) == 0);
}

TEST_CASE("minimal nonfaces by definition") {
  const auto hollow = qg::build_complex({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}, 6, {});
  const auto mnf = qg::minimal_nonfaces(hollow, hollow.d());
  // a minimal nonface: not a face, every proper subset is a face
  for (const auto& f : mnf) {
    CHECK(!brute_is_face(hollow, f.vertices()));
    for (int v : f.vertices())
      CHECK(brute_is_face(hollow, f.without(v).vertices()));
  }
  // {0,1,2} is the pairwise-adjacent hole
  const Face hole = Face::from_vertices({0, 1, 2});
  CHECK(std::find(mnf.begin(), mnf.end(), hole) != mnf.end());
  // ascending cardinality, lex within
  for (std::size_t i = 1; i < mnf.size(); ++i) {
    const bool card_ok = mnf[i - 1].cardinality() < mnf[i].cardinality() ||
                         (mnf[i - 1].cardinality() == mnf[i].cardinality() &&
                          mnf[i - 1] < mnf[i]);
    CHECK(card_ok);
  }
}

TEST_CASE("flag detection") {
  const auto hollow = qg::build_complex({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}, 6, {});
  const auto flag_h = qg::is_flag(hollow);
  CHECK(!flag_h.flag);
  REQUIRE(flag_h.witness.has_value());
  CHECK(*flag_h.witness == Face::from_vertices({0, 1, 2}));

  CHECK(qg::is_flag(qg::turan_complex({2, 2, 2})).flag);
  CHECK(qg::is_flag(qg::build_complex({{0, 1, 2}}, 3, {})).flag);
  CHECK(qg::is_flag(qg::build_complex({{0, 1}, {2, 3}}, 4, {})).flag);
}

TEST_CASE("facet connectivity") {
  CHECK(qg::is_facet_connected(qg::turan_complex({2, 2})).connected);
  CHECK(qg::is_facet_connected(qg::turan_complex({2, 2, 2})).connected);
  const auto disjoint = qg::build_complex({{0, 1}, {2, 3}}, 4, {});
  const auto conn = qg::is_facet_connected(disjoint);
  CHECK(!conn.connected);
  REQUIRE(conn.witness.has_value());
  CHECK(conn.witness->first == 0);
  CHECK(conn.witness->second == 1);
  // hollow triangle facets meet only in single vertices: never adjacent
  const auto hollow = qg::build_complex({{0, 1, 3}, {1, 2, 4}, {0, 2, 5}}, 6, {});
  CHECK(!qg::is_facet_connected(hollow).connected);
}

TEST_CASE("turan complexes have transversal facets") {
  const auto t = qg::turan_complex({2, 3});
  CHECK(t.n() == 6);
  CHECK(t.m == 5);
  CHECK(t.d() == 3);
  for (const auto& g : t.facets) {
    CHECK(g.cardinality() == 2);
    // one vertex per block: blocks are {0,1} and {2,3,4}
    int lo = 0, hi = 0;
    for (int v : g.vertices()) (v < 2 ? lo : hi) += 1;
    CHECK(lo == 1);
    CHECK(hi == 1);
  }
  CHECK_THROWS_AS(qg::turan_complex({1, 2}), Error);
  CHECK_THROWS_AS(qg::turan_complex({3}), Error);
  CHECK_THROWS_AS(qg::turan_complex({}), Error);
  try {
    qg::turan_complex({1, 2});
    FAIL("expected OrderTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderTooSmall);
  }
}

TEST_CASE("turan f-vector equals elementary symmetric polynomials") {
  // sweep all order vectors with 2..3 parts, entries 2..6, product <= 1000
  std::vector<std::vector<int>> sweeps;
  for (int a = 2; a <= 6; ++a)
    for (int b = a; b <= 6; ++b) {
      sweeps.push_back({a, b});
      for (int c = b; c <= 6; ++c) sweeps.push_back({a, b, c});
    }
  for (const auto& orders : sweeps) {
    long long prod = 1;
    for (int a : orders) prod *= a;
    if (prod > 1000) continue;
    const auto t = qg::turan_complex(orders);
    const auto fv = qg::f_vector(t);
    for (std::size_t k = 0; k < fv.e.size(); ++k)
      CHECK(fv.e[k] == sym_poly(orders, static_cast<int>(k)));
  }
}

TEST_CASE("random pure complexes are valid and reproducible") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int d = 3 + static_cast<int>(seed % 2);
    const int m = 5 + static_cast<int>(seed % 3);
    const auto c = qg::random_pure_complex(d, m, 2 * m, seed);
    CHECK(c.d() == d);
    CHECK(c.m == m);
    for (const auto& g : c.facets)
      CHECK(g.cardinality() == static_cast<std::size_t>(d - 1));
    const auto again = qg::random_pure_complex(d, m, 2 * m, seed);
    CHECK(again.facets == c.facets);
  }
}
