#include "quadgor/lefschetz.hpp"

#include <algorithm>
#include <sstream>

#include "quadgor/errors.hpp"
#include "quadgor/util.hpp"

namespace qg {

const char* verdict_name(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::WitnessedHold: return "WITNESSED_HOLD";
    case ProbeVerdict::ProvenFail: return "PROVEN_FAIL";
    case ProbeVerdict::NotWitnessed: return "NOT_WITNESSED";
  }
  return "NOT_WITNESSED";
}

UnimodalityCertificate unimodality_certificate(const HilbertVector& h) {
  if (h.h.empty() || h.h.front() != 1) fail(Errc::BadArgument, "Hilbert vector must start at 1");
  UnimodalityCertificate cert;
  cert.hilbert = h.h;
  const int d = h.d();

  cert.unimodal = true;
  bool descended = false;
  for (int k = 0; k + 1 <= d; ++k) {
    const BigInt& cur = h.h[static_cast<std::size_t>(k)];
    const BigInt& nxt = h.h[static_cast<std::size_t>(k) + 1];
    if (nxt < cur) descended = true;
    if (nxt > cur && descended) {
      cert.unimodal = false;
      cert.first_violation = k;
      break;
    }
  }

  if (d >= 4) {
    cert.totally_nonunimodal = true;
    for (int k = 1; k + 1 <= d / 2; ++k)
      if (!(h.h[static_cast<std::size_t>(k)] > h.h[static_cast<std::size_t>(k) + 1])) {
        cert.totally_nonunimodal = false;
        break;
      }
  }
  return cert;
}

namespace {

std::vector<LinearForm> draw_forms(int n, int m, int trials, std::uint64_t seed,
                                   int coeff_bound) {
  if (trials < 1) fail(Errc::BadArgument, "trials must be positive");
  Rng rng(seed);
  std::vector<LinearForm> forms;
  forms.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) forms.push_back(random_linear_form(n, m, rng, coeff_bound));
  return forms;
}

std::string level_drop_note(int k, const BigInt& hk, const BigInt& hk1) {
  std::ostringstream os;
  os << "h" << k << " = " << hk.str() << " > " << hk1.str() << " = h" << (k + 1)
     << ", multiplication cannot be injective at level " << k;
  return os.str();
}

}  // namespace

WlpReport wlp_probe(const SimplicialComplex& c, int trials, std::uint64_t seed,
                    int coeff_bound) {
  if (trials < 1) fail(Errc::BadArgument, "trials must be positive");
  WlpReport report;
  report.trials = trials;
  report.seed = seed;
  report.coeff_bound = coeff_bound;
  report.hilbert = hilbert_combinatorial(c);
  const int d = c.d();
  const auto& h = report.hilbert.h;

  for (int k = 0; k + 1 <= d; ++k) {
    LevelOutcome lvl;
    lvl.k = k;
    lvl.expected = std::min(h[static_cast<std::size_t>(k)], h[static_cast<std::size_t>(k) + 1]);
    lvl.achieved = 0;
    report.levels.push_back(std::move(lvl));
    if (h[static_cast<std::size_t>(k)] > h[static_cast<std::size_t>(k) + 1])
      report.dimension_obstructions.push_back(k);
  }

  const UnimodalityCertificate cert = unimodality_certificate(report.hilbert);
  if (!cert.unimodal) {
    report.verdict = ProbeVerdict::ProvenFail;
    report.obstructions.push_back(
        "hilbert vector is not unimodal, which the property would force");
    for (int k : report.dimension_obstructions)
      report.obstructions.push_back(level_drop_note(k, h[static_cast<std::size_t>(k)],
                                                    h[static_cast<std::size_t>(k) + 1]));
    return report;  // no trials: the verdict is already proven
  }

  const auto forms = draw_forms(c.n(), c.m, trials, seed, coeff_bound);
  const CombinatorialBasis basis = combinatorial_basis(c);
  std::vector<std::vector<BigInt>> ranks(forms.size());
  parallel_for_index(forms.size(), [&](std::size_t t) {
    ranks[t].reserve(static_cast<std::size_t>(d));
    for (int k = 0; k + 1 <= d; ++k)
      ranks[t].push_back(rank(multiplication_matrix(c, basis, forms[t], k)));
  });

  std::optional<std::size_t> witness_trial;
  for (std::size_t t = 0; t < forms.size(); ++t) {
    bool full = true;
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
      report.levels[k].achieved = std::max(report.levels[k].achieved, ranks[t][k]);
      if (ranks[t][k] != report.levels[k].expected) full = false;
    }
    if (full && !witness_trial) witness_trial = t;
  }
  if (witness_trial) {
    report.verdict = ProbeVerdict::WitnessedHold;
    report.witness = forms[*witness_trial];
  } else {
    report.verdict = ProbeVerdict::NotWitnessed;
  }
  return report;
}

InjectivityReport injectivity_probe_degree1(const SimplicialComplex& c, int trials,
                                            std::uint64_t seed, int coeff_bound) {
  if (trials < 1) fail(Errc::BadArgument, "trials must be positive");
  InjectivityReport report;
  report.trials = trials;
  report.seed = seed;
  report.coeff_bound = coeff_bound;
  const HilbertVector h = hilbert_combinatorial(c);
  report.h1 = h.h[1];
  report.h2 = h.h[2];
  if (report.h1 > report.h2) {
    report.impossible = true;  // rank is at most dim A_2 < dim A_1
    return report;
  }
  const auto forms = draw_forms(c.n(), c.m, trials, seed, coeff_bound);
  const CombinatorialBasis basis = combinatorial_basis(c);
  report.achieved.resize(forms.size());
  parallel_for_index(forms.size(), [&](std::size_t t) {
    report.achieved[t] = rank(multiplication_matrix(c, basis, forms[t], 1));
  });
  for (std::size_t t = 0; t < forms.size(); ++t)
    if (report.achieved[t] == report.h1) {
      report.witnessed = true;
      report.witness = forms[t];
      break;
    }
  return report;
}

namespace {

std::vector<BigInt> elementary_symmetric(const std::vector<int>& orders) {
  std::vector<BigInt> s(orders.size() + 1, 0);
  s[0] = 1;
  for (int a : orders)
    for (std::size_t k = s.size() - 1; k >= 1; --k) s[k] += s[k - 1] * a;
  return s;
}

// Hilbert vector of the Turan instance, from the symmetric values alone.
std::vector<BigInt> turan_hilbert(const std::vector<BigInt>& s, int d) {
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, 0);
  const auto at = [&](int k) {
    return (k < 0 || k >= static_cast<int>(s.size())) ? BigInt(0) : s[static_cast<std::size_t>(k)];
  };
  for (int k = 0; k <= d; ++k) h[static_cast<std::size_t>(k)] = at(k) + at(d - k);
  return h;
}

bool strictly_descending_front(const std::vector<BigInt>& h, int d) {
  for (int k = 1; k + 1 <= d / 2; ++k)
    if (!(h[static_cast<std::size_t>(k)] > h[static_cast<std::size_t>(k) + 1])) return false;
  return d / 2 >= 2;
}

CounterexampleResult package(const std::vector<int>& orders, int d) {
  const std::vector<BigInt> s = elementary_symmetric(orders);
  CounterexampleResult r;
  r.d = d;
  r.orders = orders;
  r.hilbert = turan_hilbert(s, d);
  BigInt facets = 1, vertices = 0;
  for (int a : orders) {
    facets *= a;
    vertices += a;
  }
  r.codimension = facets + vertices;
  return r;
}

// Non-decreasing vectors with the given sum, entries in [2, cap],
// lexicographic within a sum. Returns false when the shape is infeasible.
bool next_composition(std::vector<int>& v, int cap);

bool first_composition(std::vector<int>& v, int len, int sum, int cap, int minimum) {
  // smallest lexicographic non-decreasing filling
  v.assign(static_cast<std::size_t>(len), 0);
  int lo = minimum;
  for (int p = 0; p < len; ++p) {
    // leave room for the suffix at value >= current
    int value = lo;
    while (true) {
      const long long rest = static_cast<long long>(sum) - value;
      const long long slots = len - p - 1;
      if (value > cap) return false;
      if (rest >= slots * value && rest <= slots * static_cast<long long>(cap)) break;
      ++value;
    }
    v[static_cast<std::size_t>(p)] = value;
    sum -= value;
    lo = value;
  }
  return sum == 0;
}

bool next_composition(std::vector<int>& v, int cap) {
  // bump the rightmost position that can absorb from the tail
  const int len = static_cast<int>(v.size());
  int total = 0;
  for (int x : v) total += x;
  for (int p = len - 2; p >= 0; --p) {
    int prefix = 0;
    for (int q = 0; q < p; ++q) prefix += v[static_cast<std::size_t>(q)];
    std::vector<int> tail;
    const int bumped = v[static_cast<std::size_t>(p)] + 1;
    if (bumped > cap) continue;
    if (first_composition(tail, len - p, total - prefix, cap, bumped)) {
      // re-fill from p with the bumped minimum, but position p itself must
      // start exactly at bumped to move lexicographically forward
      if (tail[0] < bumped) continue;
      for (int q = p; q < len; ++q) v[static_cast<std::size_t>(q)] = tail[static_cast<std::size_t>(q - p)];
      return true;
    }
  }
  return false;
}

}  // namespace

CounterexampleResult counterexample_search(int d, bool equal_orders, int order_cap) {
  if (d < 4)
    fail(Errc::BadDegree, "socle degree below 4 leaves no room for a strict descent");
  if (order_cap < 2) fail(Errc::BadArgument, "order cap below the smallest valid order");
  const int parts = d - 1;

  if (equal_orders) {
    for (int a = 2; a <= order_cap; ++a) {
      const std::vector<int> orders(static_cast<std::size_t>(parts), a);
      const std::vector<BigInt> h = turan_hilbert(elementary_symmetric(orders), d);
      if (strictly_descending_front(h, d)) return package(orders, d);
    }
    fail(Errc::NotFoundWithinBound,
         "no equal-order instance up to " + std::to_string(order_cap));
  }

  for (int sum = 2 * parts; sum <= order_cap * parts; ++sum) {
    std::vector<int> v;
    if (!first_composition(v, parts, sum, order_cap, 2)) continue;
    while (true) {
      const std::vector<BigInt> h = turan_hilbert(elementary_symmetric(v), d);
      if (strictly_descending_front(h, d)) return package(v, d);
      if (!next_composition(v, order_cap)) break;
    }
  }
  fail(Errc::NotFoundWithinBound,
       "no order vector with entries up to " + std::to_string(order_cap));
}

SlpReport slp_probe(const SimplicialComplex& c, int trials, std::uint64_t seed, int coeff_bound,
                    std::size_t max_dim) {
  if (trials < 1) fail(Errc::BadArgument, "trials must be positive");
  SlpReport report;
  report.trials = trials;
  report.seed = seed;
  report.coeff_bound = coeff_bound;
  report.hilbert = hilbert_combinatorial(c);
  const int d = c.d();
  const auto& h = report.hilbert.h;
  for (const BigInt& hk : h)
    if (hk > BigInt(max_dim))
      fail(Errc::InstanceTooLarge, "level dimension " + hk.str() + " over the cap of " +
                                       std::to_string(max_dim));

  for (int k = 0; k <= d; ++k)
    for (int t = 1; k + t <= d; ++t) {
      SlpLevel lvl;
      lvl.k = k;
      lvl.power = t;
      lvl.expected =
          std::min(h[static_cast<std::size_t>(k)], h[static_cast<std::size_t>(k + t)]);
      lvl.achieved = 0;
      report.levels.push_back(std::move(lvl));
    }

  const UnimodalityCertificate cert = unimodality_certificate(report.hilbert);
  if (!cert.unimodal) {
    report.verdict = ProbeVerdict::ProvenFail;
    report.obstructions.push_back(
        "hilbert vector is not unimodal, which already refutes the weak form");
    return report;
  }

  const auto forms = draw_forms(c.n(), c.m, trials, seed, coeff_bound);
  const CombinatorialBasis basis = combinatorial_basis(c);
  std::vector<std::vector<BigInt>> ranks(forms.size());
  parallel_for_index(forms.size(), [&](std::size_t t) {
    // consecutive matrices once per form, then composites by level pair
    std::vector<SparseRationalMatrix> step;
    step.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k + 1 <= d; ++k) step.push_back(multiplication_matrix(c, basis, forms[t], k));
    for (const SlpLevel& lvl : report.levels) {
      SparseRationalMatrix composite = step[static_cast<std::size_t>(lvl.k)];
      for (int s = 1; s < lvl.power; ++s)
        composite = step[static_cast<std::size_t>(lvl.k + s)].multiply(composite);
      ranks[t].push_back(rank(composite));
    }
  });

  std::optional<std::size_t> witness_trial;
  for (std::size_t t = 0; t < forms.size(); ++t) {
    bool full = true;
    for (std::size_t idx = 0; idx < report.levels.size(); ++idx) {
      report.levels[idx].achieved = std::max(report.levels[idx].achieved, ranks[t][idx]);
      if (ranks[t][idx] != report.levels[idx].expected) full = false;
    }
    if (full && !witness_trial) witness_trial = t;
  }
  if (witness_trial) {
    report.verdict = ProbeVerdict::WitnessedHold;
    report.witness = forms[*witness_trial];
  } else {
    report.verdict = ProbeVerdict::NotWitnessed;
  }
  return report;
}

}  // namespace qg
