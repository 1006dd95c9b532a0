#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quadgor/hilbert.hpp"
#include "quadgor/rational.hpp"
#include "quadgor/simplicial.hpp"
#include "quadgor/sparse_matrix.hpp"

namespace qg {

// Monomial in the operator variables X_1..X_n (duals of the facet variables)
// and U_1..U_m (duals of the vertex variables). The same shape indexes the
// polynomial side.
struct BiMonomial {
  std::vector<std::uint16_t> x_exp, u_exp;

  int x_degree() const;
  int u_degree() const;
  int degree() const { return x_degree() + u_degree(); }
  std::pair<int, int> bidegree() const { return {x_degree(), u_degree()}; }
  bool divides(const BiMonomial& other) const;
  BiMonomial times(const BiMonomial& other) const;  // exponent sum
  std::string to_string() const;

  bool operator==(const BiMonomial& other) const = default;
};

// Global enumeration order: lexicographic on the concatenated exponent
// vector, X block first, larger exponents earlier.
struct MonomialOrder {
  bool operator()(const BiMonomial& a, const BiMonomial& b) const;
};

// Monomials of bidegree (i, j) over n X-variables and m U-variables, listed
// in MonomialOrder.
std::vector<BiMonomial> monomials_of_bidegree(int n, int m, int i, int j);

// Sorted monomial list with binary-search lookup; used as row/column bases.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  explicit MonomialBasis(std::vector<BiMonomial> sorted) : list_(std::move(sorted)) {}
  std::size_t size() const { return list_.size(); }
  const BiMonomial& operator[](std::size_t i) const { return list_[i]; }
  const std::vector<BiMonomial>& list() const { return list_; }
  std::size_t index_of(const BiMonomial& mon) const;  // Errc::BadArgument if absent

 private:
  std::vector<BiMonomial> list_;
};

// Element of the operator ring, a rational combination of BiMonomials. The
// ideal generators are monomials and binomials; nothing here assumes that.
struct OperatorPolynomial {
  int n = 0, m = 0;
  std::map<BiMonomial, Rational, MonomialOrder> terms;

  static OperatorPolynomial monomial(int n, int m, BiMonomial mon, Rational coeff = 1);
  void add_term(const BiMonomial& mon, const Rational& coeff);
  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  // Total degree; requires homogeneity, else Errc::BadArgument.
  int degree() const;
  std::optional<std::pair<int, int>> bidegree() const;  // set iff bihomogeneous
  std::string to_string() const;
};

// Bigraded polynomial in x_1..x_n, u_1..u_m with all terms of one bidegree.
class BigradedForm {
 public:
  BigradedForm(int n, int m) : n_(n), m_(m) {}

  int n() const { return n_; }
  int m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<std::pair<int, int>> bidegree() const;
  const std::map<BiMonomial, Rational, MonomialOrder>& terms() const { return terms_; }

  // Accumulates; rejects a bidegree clash with the existing terms.
  void add_term(const BiMonomial& mon, const Rational& coeff);
  Rational coefficient(const BiMonomial& mon) const;
  std::string to_string() const;

 private:
  int n_, m_;
  std::map<BiMonomial, Rational, MonomialOrder> terms_;
};

// f = sum_i x_i * (square-free monomial of facet g_i).
BigradedForm form_from_complex(const SimplicialComplex& c);

// Differentiation action: X^a U^b sends x^c u^e to the falling-factorial
// multiple of x^(c-a) u^(e-b), zero when any exponent would go negative.
BigradedForm apply_operator(const BiMonomial& op, const BigradedForm& f);
BigradedForm apply_operator(const OperatorPolynomial& op, const BigradedForm& f);
bool annihilates(const OperatorPolynomial& op, const BigradedForm& f);

// Evaluation matrix of bidegree (i, j): columns indexed by operator
// monomials of that bidegree, rows by polynomial monomials of bidegree
// (d1-i, d2-j); entry(r, c) is the coefficient of monomial r in (c applied
// to f). Its rank is dim A_(i,j). Rows list only the monomials appearing in
// some image; the remaining rows of the full map are zero, so rank and
// kernel are unchanged by the omission.
struct CatalecticantMatrix {
  int i = 0, j = 0;
  MonomialBasis cols, rows;
  SparseRationalMatrix matrix;
};
CatalecticantMatrix catalecticant(const BigradedForm& f, int i, int j);

// Degree-k slice of Ann(f), one block per bidegree. Blocks beyond the
// bidegree of f are all of Q there, marked full with no kernel listed.
struct AnnihilatorSlice {
  int i = 0, j = 0;
  bool full = false;
  MonomialBasis basis;
  std::vector<SparseVector> kernel;  // empty when full

  std::size_t dimension() const { return full ? basis.size() : kernel.size(); }
};
struct AnnihilatorBasis {
  int k = 0;
  std::vector<AnnihilatorSlice> slices;

  std::size_t dimension() const;
  const AnnihilatorSlice* slice(int i, int j) const;
};
AnnihilatorBasis annihilator_basis(const BigradedForm& f, int k);

// Hilbert vector from catalecticant ranks alone, one exact rank per
// bidegree. The independent oracle for the combinatorial formula.
HilbertVector hilbert_brute(const BigradedForm& f);

// Dimension of the degree-k slice of the ideal generated by the given
// homogeneous elements. Generators of degree above k contribute nothing.
std::size_t ideal_span_dimension(const std::vector<OperatorPolynomial>& generators, int k,
                                 int n, int m);

// New minimal generators of Ann(f) per degree k = 2..d+1, counted as
// dim I_k minus the span of Q_1 * I_(k-1); the d+1 row closes the scan.
struct MinimalGeneratorProfile {
  std::map<int, std::size_t> by_degree;
  std::map<std::pair<int, int>, std::size_t> by_bidegree;  // nonzero entries only
};
MinimalGeneratorProfile minimal_generator_degrees(const BigradedForm& f);

// Rank of the pairing A_k x A_(d-k) -> A_d computed on monomial spanning
// sets via apply_operator; equals h_k exactly when the pairing is perfect.
std::size_t multiplication_pairing_rank(const BigradedForm& f, int k);

struct LinearForm {
  std::vector<Rational> x_coeffs, u_coeffs;
  bool is_zero() const;
  std::string to_string() const;
};

// Rank of multiplication A_k -> A_(k+t) by L^t, computed through evaluation
// into the polynomial side, no quotient bases involved.
std::size_t brute_multiplication_rank(const BigradedForm& f, const LinearForm& L, int k,
                                      int power = 1);

class Rng;

// Integer coefficients uniform in [-coeff_bound, coeff_bound], resampled
// until some coefficient is non-zero.
LinearForm random_linear_form(int n, int m, Rng& rng, int coeff_bound);

}  // namespace qg
