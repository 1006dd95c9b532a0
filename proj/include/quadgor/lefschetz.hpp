#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadgor/apolarity.hpp"
#include "quadgor/gorenstein.hpp"
#include "quadgor/hilbert.hpp"
#include "quadgor/simplicial.hpp"

namespace qg {

// Random probing cannot refute a Zariski-open property, so outcomes are
// three-valued: a proof of failure from dimensions, a concrete witness, or
// nothing found within the trial budget.
enum class ProbeVerdict { WitnessedHold, ProvenFail, NotWitnessed };

const char* verdict_name(ProbeVerdict v);

struct LevelOutcome {
  int k = 0;
  BigInt expected;  // min(h_k, h_(k+1))
  BigInt achieved;  // best rank over the trials, 0 when none ran
};

struct WlpReport {
  HilbertVector hilbert;
  std::vector<LevelOutcome> levels;  // k = 0..d-1
  ProbeVerdict verdict = ProbeVerdict::NotWitnessed;
  std::optional<LinearForm> witness;       // earliest trial topping every level
  std::vector<int> dimension_obstructions;  // levels with h_k > h_(k+1)
  std::vector<std::string> obstructions;    // proof lines when verdict is ProvenFail
  int trials = 0;
  int coeff_bound = 0;
  std::uint64_t seed = 0;
};

// Samples seeded integer forms and measures every consecutive multiplication
// rank combinatorially. Non-unimodal Hilbert vectors short-circuit to
// ProvenFail with no trials, since the property forces unimodality.
WlpReport wlp_probe(const SimplicialComplex& c, int trials, std::uint64_t seed, int coeff_bound);

struct InjectivityReport {
  BigInt h1, h2;
  bool impossible = false;  // h1 > h2, no form can work
  bool witnessed = false;
  std::optional<LinearForm> witness;
  std::vector<BigInt> achieved;  // rank per trial, empty when impossible
  int trials = 0;
  int coeff_bound = 0;
  std::uint64_t seed = 0;
};

// Degree-1 injectivity probe for the map A_1 -> A_2.
InjectivityReport injectivity_probe_degree1(const SimplicialComplex& c, int trials,
                                            std::uint64_t seed, int coeff_bound);

struct UnimodalityCertificate {
  std::vector<BigInt> hilbert;
  bool unimodal = false;
  bool totally_nonunimodal = false;       // h_1 > h_2 > ... > h_(d/2), d >= 4
  std::optional<int> first_violation;     // first k rising again after a descent
};

UnimodalityCertificate unimodality_certificate(const HilbertVector& h);

struct CounterexampleResult {
  int d = 0;
  std::vector<int> orders;
  BigInt codimension;           // facet count + vertex count
  std::vector<BigInt> hilbert;  // degrees 0..d
};

// Smallest Turan instance of socle degree d whose Hilbert vector is totally
// non-unimodal, computed symbolically from elementary symmetric values.
// Equal mode scans a = 2..order_cap; otherwise non-decreasing order vectors
// ordered by sum, then lexicographically. Requires d >= 4; throws
// NotFoundWithinBound past the cap.
CounterexampleResult counterexample_search(int d, bool equal_orders, int order_cap = 100);

struct SlpLevel {
  int k = 0;      // source level
  int power = 0;  // exponent t of the form
  BigInt expected;
  BigInt achieved;
};

struct SlpReport {
  HilbertVector hilbert;
  std::vector<SlpLevel> levels;  // all pairs k >= 0, t >= 1, k + t <= d
  ProbeVerdict verdict = ProbeVerdict::NotWitnessed;
  std::optional<LinearForm> witness;
  std::vector<std::string> obstructions;
  int trials = 0;
  int coeff_bound = 0;
  std::uint64_t seed = 0;
};

// Ranks of all L-power maps via composition of the consecutive
// multiplication matrices. Guarded by the largest Hilbert entry.
SlpReport slp_probe(const SimplicialComplex& c, int trials, std::uint64_t seed, int coeff_bound,
                    std::size_t max_dim = 50000);

}  // namespace qg
