#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadgor/apolarity.hpp"
#include "quadgor/hilbert.hpp"
#include "quadgor/simplicial.hpp"
#include "quadgor/sparse_matrix.hpp"

namespace qg {

// Generating set of Ann(f) read off the complex. Classes:
//   a: XiXj (i <= j) and Uj^2
//   b: minimal non-face monomials in the U variables
//   c: XiUj with vertex j outside facet i
//   d: one binomial per unordered facet pair {i, j}:
//      Xi * dual(gi minus gij) - Xj * dual(gj minus gij), gij = gi intersect gj
// Every element annihilates f; no minimality is claimed for the list.
struct GradedIdealGenerators {
  std::vector<OperatorPolynomial> class_a, class_b, class_c, class_d;

  std::vector<OperatorPolynomial> all() const;
  std::size_t size() const {
    return class_a.size() + class_b.size() + class_c.size() + class_d.size();
  }
};

GradedIdealGenerators combinatorial_generators(const SimplicialComplex& c);

// Basis of A level by level. Level k splits as
//   face_part: cardinality-k faces Omega, the monomials of bidegree (0, k)
//   rep_part:  one element per cardinality-(d-k) face omega, the monomial
//              X_p * dual(g_p minus omega) with p the smallest facet index
//              containing omega
// Both parts are sorted by their indexing face, so positions are found by
// binary search. Column order in matrices is face_part then rep_part.
struct BasisLevel {
  std::vector<Face> face_part;
  std::vector<Face> rep_faces;                 // indexing faces omega, ascending
  std::vector<std::pair<int, Face>> rep_part;  // (facet index, dual subface)

  std::size_t size() const { return face_part.size() + rep_part.size(); }
  // Position of a face in face_part, or of its rep in rep_part offset by
  // |face_part|; nullopt when absent.
  std::optional<std::size_t> face_index(const Face& f) const;
  std::optional<std::size_t> rep_index(const Face& omega) const;
};

struct CombinatorialBasis {
  int d = 0;
  std::vector<BasisLevel> levels;  // 0..d
};

CombinatorialBasis combinatorial_basis(const SimplicialComplex& c);

// h_k = e_k + e_(d-k) with the bigraded split (0,k) -> e_k and
// (1,k-1) -> e_(d-k). No matrices involved.
HilbertVector hilbert_combinatorial(const SimplicialComplex& c);

// Flag AND facet-connected, with the failing witness. Flag is checked
// first, so a complex failing both carries the non-face witness.
struct QuadraticPresentation {
  bool presented_by_quadrics = false;
  bool flag = false;
  bool facet_connected = false;
  std::optional<Face> nonflag_witness;
  std::optional<std::pair<int, int>> disconnected_witness;
};

QuadraticPresentation is_presented_by_quadrics(const SimplicialComplex& c);

struct AlgebraSummary {
  int n = 0, m = 0;
  int socle_degree = 0;
  int codimension = 0;  // n + m
  FVector faces;
  HilbertVector hilbert;
  QuadraticPresentation quadratic;
  std::size_t generators_a = 0, generators_b = 0, generators_c = 0, generators_d = 0;
};

AlgebraSummary analyze_complex(const SimplicialComplex& c);

// Matrix of multiplication by L from basis level k to level k+1, computed
// with the combinatorial product rules only:
//   Uj * face(Omega) = face(Omega + j) when that is a face, else 0
//   Xi * face(Omega) = rep(gi minus Omega) when Omega is inside gi, else 0
//   Uj * rep(p, dual) = rep(omega minus j) when j lies in omega, else 0
//   Xi * rep = 0
// Results land on basis elements with coefficient 1, re-canonicalized to the
// smallest containing facet. Requires 0 <= k <= d-1.
SparseRationalMatrix multiplication_matrix(const SimplicialComplex& c,
                                           const CombinatorialBasis& basis, const LinearForm& L,
                                           int k);
SparseRationalMatrix multiplication_matrix(const SimplicialComplex& c, const LinearForm& L,
                                           int k);

// One combinatorial-vs-brute comparison, with the degrees it covered.
struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs found, human readable
};

struct OracleConfig {
  int max_degree = -1;                   // -1 means socle degree + 1
  std::size_t max_oracle_dim = 50000;    // cap on dim Q_k per degree
  std::uint64_t seed = 1;                // linear forms for the rank check
  int trials = 5;
  int coeff_bound = 10;
};

struct OracleReport {
  int max_degree = 0;
  std::size_t max_oracle_dim = 0;
  std::vector<OracleCheck> checks;
  std::vector<int> skipped_degrees;  // degrees over the dim Q_k guard

  bool all_pass() const;
  bool partial() const { return !skipped_degrees.empty(); }
};

// Validates the combinatorial route against the operator-side computation:
//   hilbert: h and the bigraded split against catalecticant ranks
//   annihilation: every listed generator kills f
//   ideal_dimension: generator span equals dim I_k per degree
//   multiplication_rank: combinatorial matrix ranks against quotient ranks
//     for seeded random linear forms
// Degrees whose dim Q_k exceeds the guard are skipped and listed; throws
// InstanceTooLarge only when no degree at all is feasible.
OracleReport oracle_crosscheck(const SimplicialComplex& c, const OracleConfig& cfg = {});

}  // namespace qg
