#include "quadgor/apolarity.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "quadgor/errors.hpp"
#include "quadgor/util.hpp"

namespace qg {

namespace {

int sum_of(const std::vector<std::uint16_t>& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

// Exponent vectors of the given total over `vars` slots, descending
// lexicographic, so (t,0,...,0) first and (0,...,0,t) last.
void exponents_descending(int vars, int total, std::vector<std::uint16_t>& scratch,
                          std::vector<std::vector<std::uint16_t>>& out) {
  const auto pos = scratch.size();
  if (static_cast<int>(pos) == vars - 1) {
    scratch.push_back(static_cast<std::uint16_t>(total));
    out.push_back(scratch);
    scratch.pop_back();
    return;
  }
  if (vars == 0) {
    if (total == 0) out.push_back(scratch);
    return;
  }
  for (int v = total; v >= 0; --v) {
    scratch.push_back(static_cast<std::uint16_t>(v));
    exponents_descending(vars, total - v, scratch, out);
    scratch.pop_back();
  }
}

std::vector<std::vector<std::uint16_t>> exponents(int vars, int total) {
  std::vector<std::vector<std::uint16_t>> out;
  if (vars == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<std::uint16_t> scratch;
  exponents_descending(vars, total, scratch, out);
  return out;
}

struct BiMonomialHash {
  std::size_t operator()(const BiMonomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::vector<std::uint16_t>& v) {
      for (auto e : v) {
        h ^= e;
        h *= 1099511628211ULL;
      }
    };
    mix(m.x_exp);
    mix(m.u_exp);
    return h;
  }
};

void append_var(std::ostringstream& os, const char* name, std::size_t idx, int exp, bool& first) {
  if (exp == 0) return;
  if (!first) os << "*";
  os << name << (idx + 1);
  if (exp > 1) os << "^" << exp;
  first = false;
}

std::string monomial_string(const BiMonomial& mon) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mon.x_exp.size(); ++i)
    append_var(os, "X", i, mon.x_exp[i], first);
  for (std::size_t j = 0; j < mon.u_exp.size(); ++j)
    append_var(os, "U", j, mon.u_exp[j], first);
  if (first) os << "1";
  return os.str();
}

}  // namespace

int BiMonomial::x_degree() const { return sum_of(x_exp); }
int BiMonomial::u_degree() const { return sum_of(u_exp); }

bool BiMonomial::divides(const BiMonomial& other) const {
  if (x_exp.size() != other.x_exp.size() || u_exp.size() != other.u_exp.size()) return false;
  for (std::size_t i = 0; i < x_exp.size(); ++i)
    if (x_exp[i] > other.x_exp[i]) return false;
  for (std::size_t j = 0; j < u_exp.size(); ++j)
    if (u_exp[j] > other.u_exp[j]) return false;
  return true;
}

BiMonomial BiMonomial::times(const BiMonomial& other) const {
  if (x_exp.size() != other.x_exp.size() || u_exp.size() != other.u_exp.size())
    fail(Errc::DimensionMismatch, "monomial variable counts differ");
  BiMonomial out = *this;
  for (std::size_t i = 0; i < x_exp.size(); ++i)
    out.x_exp[i] = static_cast<std::uint16_t>(out.x_exp[i] + other.x_exp[i]);
  for (std::size_t j = 0; j < u_exp.size(); ++j)
    out.u_exp[j] = static_cast<std::uint16_t>(out.u_exp[j] + other.u_exp[j]);
  return out;
}

std::string BiMonomial::to_string() const { return monomial_string(*this); }

bool MonomialOrder::operator()(const BiMonomial& a, const BiMonomial& b) const {
  for (std::size_t i = 0; i < a.x_exp.size() && i < b.x_exp.size(); ++i)
    if (a.x_exp[i] != b.x_exp[i]) return a.x_exp[i] > b.x_exp[i];
  if (a.x_exp.size() != b.x_exp.size()) return a.x_exp.size() < b.x_exp.size();
  for (std::size_t j = 0; j < a.u_exp.size() && j < b.u_exp.size(); ++j)
    if (a.u_exp[j] != b.u_exp[j]) return a.u_exp[j] > b.u_exp[j];
  return a.u_exp.size() < b.u_exp.size();
}

std::vector<BiMonomial> monomials_of_bidegree(int n, int m, int i, int j) {
  if (i < 0 || j < 0) fail(Errc::BidegreeOutOfRange, "negative bidegree");
  const BigInt count = binomial(n + i - 1, i) * binomial(m + j - 1, j);
  if (count > 5000000)
    fail(Errc::InstanceTooLarge, "bidegree slice holds " + count.str() + " monomials");
  std::vector<BiMonomial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (const auto& xe : exponents(n, i))
    for (const auto& ue : exponents(m, j)) out.push_back(BiMonomial{xe, ue});
  return out;
}

std::size_t MonomialBasis::index_of(const BiMonomial& mon) const {
  auto it = std::lower_bound(list_.begin(), list_.end(), mon, MonomialOrder{});
  if (it == list_.end() || !(*it == mon))
    fail(Errc::BadArgument, "monomial " + mon.to_string() + " not in basis");
  return static_cast<std::size_t>(it - list_.begin());
}

OperatorPolynomial OperatorPolynomial::monomial(int n, int m, BiMonomial mon, Rational coeff) {
  OperatorPolynomial p;
  p.n = n;
  p.m = m;
  p.add_term(mon, coeff);
  return p;
}

void OperatorPolynomial::add_term(const BiMonomial& mon, const Rational& coeff) {
  if (static_cast<int>(mon.x_exp.size()) != n || static_cast<int>(mon.u_exp.size()) != m)
    fail(Errc::DimensionMismatch, "monomial variable counts do not match polynomial");
  auto [it, inserted] = terms.try_emplace(mon, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  } else if (it->second == 0) {
    terms.erase(it);
  }
}

int OperatorPolynomial::degree() const {
  if (terms.empty()) fail(Errc::BadArgument, "degree of zero polynomial");
  const int deg = terms.begin()->first.degree();
  for (const auto& [mon, c] : terms)
    if (mon.degree() != deg) fail(Errc::BadArgument, "polynomial is not homogeneous");
  return deg;
}

std::optional<std::pair<int, int>> OperatorPolynomial::bidegree() const {
  if (terms.empty()) return std::nullopt;
  const auto bd = terms.begin()->first.bidegree();
  for (const auto& [mon, c] : terms)
    if (mon.bidegree() != bd) return std::nullopt;
  return bd;
}

std::string OperatorPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mon, c] : terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = c > 0 ? c : Rational(-c);
    if (a != 1) os << qg::to_string(a) << "*";
    os << mon.to_string();
    first = false;
  }
  return os.str();
}

std::optional<std::pair<int, int>> BigradedForm::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.bidegree();
}

void BigradedForm::add_term(const BiMonomial& mon, const Rational& coeff) {
  if (static_cast<int>(mon.x_exp.size()) != n_ || static_cast<int>(mon.u_exp.size()) != m_)
    fail(Errc::DimensionMismatch, "monomial variable counts do not match form");
  if (coeff == 0) return;
  if (!terms_.empty() && terms_.begin()->first.bidegree() != mon.bidegree())
    fail(Errc::BadArgument, "form terms must share one bidegree");
  auto [it, inserted] = terms_.try_emplace(mon, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BigradedForm::coefficient(const BiMonomial& mon) const {
  auto it = terms_.find(mon);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string BigradedForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mon, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = c > 0 ? c : Rational(-c);
    if (a != 1) os << qg::to_string(a) << "*";
    std::string s = mon.to_string();
    for (auto& ch : s)  // polynomial side in lowercase
      if (ch == 'X' || ch == 'U') ch = static_cast<char>(ch + ('a' - 'A'));
    os << s;
    first = false;
  }
  return os.str();
}

BigradedForm form_from_complex(const SimplicialComplex& c) {
  const int n = c.n(), m = c.m;
  BigradedForm f(n, m);
  for (int i = 0; i < n; ++i) {
    BiMonomial mon;
    mon.x_exp.assign(static_cast<std::size_t>(n), 0);
    mon.u_exp.assign(static_cast<std::size_t>(m), 0);
    mon.x_exp[static_cast<std::size_t>(i)] = 1;
    for (int v : c.facets[static_cast<std::size_t>(i)].vertices())
      mon.u_exp[static_cast<std::size_t>(v)] = 1;
    f.add_term(mon, 1);
  }
  return f;
}

namespace {

// c! / (c-a)! per variable; zero when a > c.
bool falling_factor(std::uint16_t c, std::uint16_t a, BigInt& mult) {
  if (a > c) return false;
  for (std::uint16_t s = 0; s < a; ++s) mult *= (c - s);
  return true;
}

}  // namespace

BigradedForm apply_operator(const BiMonomial& op, const BigradedForm& f) {
  BigradedForm out(f.n(), f.m());
  // Only the operator's non-zero slots matter; most slots are zero on the
  // instances that dominate runtime.
  std::vector<std::pair<std::size_t, std::uint16_t>> xs, us;
  for (std::size_t i = 0; i < op.x_exp.size(); ++i)
    if (op.x_exp[i]) xs.emplace_back(i, op.x_exp[i]);
  for (std::size_t j = 0; j < op.u_exp.size(); ++j)
    if (op.u_exp[j]) us.emplace_back(j, op.u_exp[j]);
  for (const auto& [mon, coeff] : f.terms()) {
    BigInt mult = 1;
    bool ok = true;
    for (const auto& [i, a] : xs)
      if (!(ok = falling_factor(mon.x_exp[i], a, mult))) break;
    if (!ok) continue;
    for (const auto& [j, a] : us)
      if (!(ok = falling_factor(mon.u_exp[j], a, mult))) break;
    if (!ok) continue;
    BiMonomial res = mon;
    for (const auto& [i, a] : xs) res.x_exp[i] = static_cast<std::uint16_t>(res.x_exp[i] - a);
    for (const auto& [j, a] : us) res.u_exp[j] = static_cast<std::uint16_t>(res.u_exp[j] - a);
    out.add_term(res, coeff * Rational(mult));
  }
  return out;
}

BigradedForm apply_operator(const OperatorPolynomial& op, const BigradedForm& f) {
  BigradedForm out(f.n(), f.m());
  for (const auto& [mon, coeff] : op.terms) {
    const BigradedForm part = apply_operator(mon, f);
    for (const auto& [pm, pc] : part.terms()) out.add_term(pm, coeff * pc);
  }
  return out;
}

bool annihilates(const OperatorPolynomial& op, const BigradedForm& f) {
  return apply_operator(op, f).is_zero();
}

CatalecticantMatrix catalecticant(const BigradedForm& f, int i, int j) {
  const auto bd = f.bidegree();
  if (!bd) fail(Errc::BadArgument, "catalecticant of the zero form");
  const auto [d1, d2] = *bd;
  if (i < 0 || j < 0 || i > d1 || j > d2)
    fail(Errc::BidegreeOutOfRange, "bidegree (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside [0," + std::to_string(d1) + "]x[0," +
                                       std::to_string(d2) + "]");
  CatalecticantMatrix cat;
  cat.i = i;
  cat.j = j;
  cat.cols = MonomialBasis(monomials_of_bidegree(f.n(), f.m(), i, j));

  // Rows hold only the monomials that appear in some image; the omitted rows
  // are identically zero, so rank and kernel are those of the full map.
  std::vector<std::vector<std::pair<BiMonomial, Rational>>> images(cat.cols.size());
  std::unordered_set<BiMonomial, BiMonomialHash> seen;
  for (std::size_t c = 0; c < cat.cols.size(); ++c) {
    const BigradedForm img = apply_operator(cat.cols[c], f);
    images[c].assign(img.terms().begin(), img.terms().end());
    for (const auto& [mon, coeff] : images[c]) seen.insert(mon);
  }
  std::vector<BiMonomial> support(seen.begin(), seen.end());
  std::sort(support.begin(), support.end(), MonomialOrder{});
  std::unordered_map<BiMonomial, std::size_t, BiMonomialHash> row_of;
  row_of.reserve(support.size());
  for (std::size_t r = 0; r < support.size(); ++r) row_of.emplace(support[r], r);
  cat.rows = MonomialBasis(std::move(support));

  SparseRationalMatrix::Builder b(cat.rows.size(), cat.cols.size());
  for (std::size_t c = 0; c < cat.cols.size(); ++c)
    for (const auto& [mon, coeff] : images[c]) b.add(row_of.at(mon), c, coeff);
  cat.matrix = b.build();
  return cat;
}

std::size_t AnnihilatorBasis::dimension() const {
  std::size_t total = 0;
  for (const auto& s : slices) total += s.dimension();
  return total;
}

const AnnihilatorSlice* AnnihilatorBasis::slice(int i, int j) const {
  for (const auto& s : slices)
    if (s.i == i && s.j == j) return &s;
  return nullptr;
}

AnnihilatorBasis annihilator_basis(const BigradedForm& f, int k) {
  const auto bd = f.bidegree();
  if (!bd) fail(Errc::BadArgument, "annihilator of the zero form");
  if (k < 0) fail(Errc::BadDegree, "negative degree");
  const auto [d1, d2] = *bd;
  AnnihilatorBasis out;
  out.k = k;
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    AnnihilatorSlice s;
    s.i = i;
    s.j = j;
    s.basis = MonomialBasis(monomials_of_bidegree(f.n(), f.m(), i, j));
    if (s.basis.size() == 0) continue;
    if (i > d1 || j > d2) {
      s.full = true;  // every operator of this bidegree kills f
    } else {
      s.kernel = kernel_basis(catalecticant(f, i, j).matrix);
    }
    out.slices.push_back(std::move(s));
  }
  return out;
}

HilbertVector hilbert_brute(const BigradedForm& f) {
  const auto bd = f.bidegree();
  if (!bd) fail(Errc::BadArgument, "Hilbert vector of the zero form");
  const auto [d1, d2] = *bd;
  const int d = d1 + d2;
  HilbertVector hv;
  hv.h.assign(static_cast<std::size_t>(d) + 1, 0);

  std::vector<std::pair<int, int>> jobs;
  for (int i = 0; i <= d1; ++i)
    for (int j = 0; j <= d2; ++j) jobs.emplace_back(i, j);
  std::vector<BigInt> ranks(jobs.size());
  parallel_for_index(jobs.size(), [&](std::size_t t) {
    ranks[t] = rank(catalecticant(f, jobs[t].first, jobs[t].second).matrix);
  });
  for (std::size_t t = 0; t < jobs.size(); ++t) {
    const auto [i, j] = jobs[t];
    hv.bigraded[{i, j}] = ranks[t];
    hv.h[static_cast<std::size_t>(i + j)] += ranks[t];
  }
  return hv;
}

namespace {

SparseVector shift_vector(const SparseVector& v, const MonomialBasis& from, const BiMonomial& by,
                          const MonomialBasis& to) {
  SparseVector out;
  out.size = to.size();
  out.entries.reserve(v.entries.size());
  for (const auto& [idx, val] : v.entries)
    out.entries.emplace_back(to.index_of(from[idx].times(by)), val);
  return out;  // shifting preserves MonomialOrder, entries stay sorted
}

BiMonomial unit_monomial(int n, int m) {
  BiMonomial mon;
  mon.x_exp.assign(static_cast<std::size_t>(n), 0);
  mon.u_exp.assign(static_cast<std::size_t>(m), 0);
  return mon;
}

BiMonomial x_variable(int n, int m, int i) {
  BiMonomial mon = unit_monomial(n, m);
  mon.x_exp[static_cast<std::size_t>(i)] = 1;
  return mon;
}

BiMonomial u_variable(int n, int m, int j) {
  BiMonomial mon = unit_monomial(n, m);
  mon.u_exp[static_cast<std::size_t>(j)] = 1;
  return mon;
}

SparseVector polynomial_vector(const OperatorPolynomial& p, const BiMonomial& shift,
                               const MonomialBasis& basis) {
  SparseVector out;
  out.size = basis.size();
  out.entries.reserve(p.terms.size());
  for (const auto& [mon, coeff] : p.terms)
    out.entries.emplace_back(basis.index_of(mon.times(shift)), coeff);
  return out;
}

}  // namespace

std::size_t ideal_span_dimension(const std::vector<OperatorPolynomial>& generators, int k,
                                 int n, int m) {
  if (k < 0) fail(Errc::BadDegree, "negative degree");
  std::vector<const OperatorPolynomial*> gens;
  bool all_bihomogeneous = true;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.n != n || g.m != m) fail(Errc::DimensionMismatch, "generator over wrong variable set");
    if (g.degree() > k) continue;  // cannot reach degree k
    if (!g.bidegree()) all_bihomogeneous = false;
    gens.push_back(&g);
  }
  if (gens.empty()) return 0;

  if (all_bihomogeneous) {
    std::size_t total = 0;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      const MonomialBasis basis(monomials_of_bidegree(n, m, i, j));
      if (basis.size() == 0) continue;
      std::vector<SparseVector> rows;
      for (const OperatorPolynomial* g : gens) {
        const auto [a, bdeg] = *g->bidegree();
        if (a > i || bdeg > j) continue;
        for (const auto& xe : exponents(n, i - a))
          for (const auto& ue : exponents(m, j - bdeg))
            rows.push_back(polynomial_vector(*g, BiMonomial{xe, ue}, basis));
      }
      total += span_dimension(rows);
    }
    return total;
  }

  // Mixed-bidegree generators: one matrix over the whole degree-k slice.
  std::vector<BiMonomial> all;
  for (int i = 0; i <= k; ++i)
    for (auto& mon : monomials_of_bidegree(n, m, i, k - i)) all.push_back(std::move(mon));
  std::sort(all.begin(), all.end(), MonomialOrder{});
  const MonomialBasis basis(std::move(all));
  std::vector<SparseVector> rows;
  for (const OperatorPolynomial* g : gens) {
    const int deg = g->degree();
    for (int i = 0; i <= k - deg; ++i)
      for (const auto& xe : exponents(n, i))
        for (const auto& ue : exponents(m, k - deg - i))
          rows.push_back(polynomial_vector(*g, BiMonomial{xe, ue}, basis));
  }
  return span_dimension(rows);
}

MinimalGeneratorProfile minimal_generator_degrees(const BigradedForm& f) {
  const auto bd = f.bidegree();
  if (!bd) fail(Errc::BadArgument, "zero form");
  const int d = bd->first + bd->second;
  MinimalGeneratorProfile out;
  AnnihilatorBasis prev = annihilator_basis(f, 1);
  for (int k = 2; k <= d + 1; ++k) {
    AnnihilatorBasis cur = annihilator_basis(f, k);
    std::size_t degree_total = 0;
    for (const auto& s : cur.slices) {
      const AnnihilatorSlice* left = s.i >= 1 ? prev.slice(s.i - 1, s.j) : nullptr;
      const AnnihilatorSlice* below = s.j >= 1 ? prev.slice(s.i, s.j - 1) : nullptr;
      // A full predecessor already generates the whole slice.
      if ((left && left->full) || (below && below->full)) continue;
      std::vector<SparseVector> rows;
      if (left)
        for (const auto& v : left->kernel)
          for (int a = 0; a < f.n(); ++a)
            rows.push_back(shift_vector(v, left->basis, x_variable(f.n(), f.m(), a), s.basis));
      if (below)
        for (const auto& v : below->kernel)
          for (int b = 0; b < f.m(); ++b)
            rows.push_back(shift_vector(v, below->basis, u_variable(f.n(), f.m(), b), s.basis));
      const std::size_t generated = span_dimension(rows);
      const std::size_t target = s.dimension();
      if (target > generated) {
        out.by_bidegree[{s.i, s.j}] = target - generated;
        degree_total += target - generated;
      }
    }
    out.by_degree[k] = degree_total;
    prev = std::move(cur);
  }
  return out;
}

namespace {

// Monomials of total degree deg that can act nontrivially on f, i.e. with
// bidegree componentwise at most (d1, d2). Sorted by MonomialOrder.
MonomialBasis effective_monomials(const BigradedForm& f, int deg) {
  const auto [d1, d2] = *f.bidegree();
  std::vector<BiMonomial> all;
  for (int i = 0; i <= std::min(deg, d1); ++i) {
    const int j = deg - i;
    if (j < 0 || j > d2) continue;
    for (auto& mon : monomials_of_bidegree(f.n(), f.m(), i, j)) all.push_back(std::move(mon));
  }
  std::sort(all.begin(), all.end(), MonomialOrder{});
  return MonomialBasis(std::move(all));
}

}  // namespace

std::size_t multiplication_pairing_rank(const BigradedForm& f, int k) {
  const auto bd = f.bidegree();
  if (!bd) fail(Errc::BadArgument, "zero form");
  const int d = bd->first + bd->second;
  if (k < 0 || k > d) fail(Errc::BadDegree, "pairing degree outside [0,d]");
  const MonomialBasis rows = effective_monomials(f, k);
  const MonomialBasis cols = effective_monomials(f, d - k);
  SparseRationalMatrix::Builder b(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const BigradedForm val = apply_operator(rows[r].times(cols[c]), f);
      if (!val.is_zero()) b.add(r, c, val.terms().begin()->second);
    }
  }
  return rank(b.build());
}

bool LinearForm::is_zero() const {
  for (const auto& a : x_coeffs)
    if (a != 0) return false;
  for (const auto& b : u_coeffs)
    if (b != 0) return false;
  return true;
}

std::string LinearForm::to_string() const {
  OperatorPolynomial p;
  p.n = static_cast<int>(x_coeffs.size());
  p.m = static_cast<int>(u_coeffs.size());
  for (std::size_t i = 0; i < x_coeffs.size(); ++i)
    if (x_coeffs[i] != 0)
      p.add_term(x_variable(p.n, p.m, static_cast<int>(i)), x_coeffs[i]);
  for (std::size_t j = 0; j < u_coeffs.size(); ++j)
    if (u_coeffs[j] != 0)
      p.add_term(u_variable(p.n, p.m, static_cast<int>(j)), u_coeffs[j]);
  return p.to_string();
}

std::size_t brute_multiplication_rank(const BigradedForm& f, const LinearForm& L, int k,
                                      int power) {
  const auto bd = f.bidegree();
  if (!bd) fail(Errc::BadArgument, "zero form");
  const int d = bd->first + bd->second;
  if (power < 1) fail(Errc::BadArgument, "power must be positive");
  if (k < 0 || k + power > d) fail(Errc::BadDegree, "levels outside the algebra");
  const int n = f.n(), m = f.m();
  if (static_cast<int>(L.x_coeffs.size()) != n || static_cast<int>(L.u_coeffs.size()) != m)
    fail(Errc::DimensionMismatch, "linear form over wrong variable set");

  // Expand L^power once.
  OperatorPolynomial lp;
  lp.n = n;
  lp.m = m;
  lp.add_term(unit_monomial(n, m), 1);
  for (int t = 0; t < power; ++t) {
    OperatorPolynomial next;
    next.n = n;
    next.m = m;
    for (const auto& [mon, c] : lp.terms) {
      for (int i = 0; i < n; ++i)
        if (L.x_coeffs[static_cast<std::size_t>(i)] != 0)
          next.add_term(mon.times(x_variable(n, m, i)),
                        c * L.x_coeffs[static_cast<std::size_t>(i)]);
      for (int j = 0; j < m; ++j)
        if (L.u_coeffs[static_cast<std::size_t>(j)] != 0)
          next.add_term(mon.times(u_variable(n, m, j)),
                        c * L.u_coeffs[static_cast<std::size_t>(j)]);
    }
    lp = std::move(next);
  }
  if (lp.is_zero()) return 0;

  // rank of A_k -> A_(k+power) equals the rank of alpha |-> (L^power
  // alpha)(f) on a monomial spanning set, since evaluation embeds the target.
  // Row ids are handed out on first sight; permuting rows leaves rank alone.
  const MonomialBasis cols = effective_monomials(f, k);
  std::unordered_map<BiMonomial, std::size_t, BiMonomialHash> row_of;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> cells;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [mon, coeff] : lp.terms) {
      const BigradedForm img = apply_operator(cols[c].times(mon), f);
      for (const auto& [rm, rc] : img.terms()) {
        const auto it = row_of.try_emplace(rm, row_of.size()).first;
        cells.emplace_back(it->second, c, coeff * rc);
      }
    }
  }
  SparseRationalMatrix::Builder b(row_of.size(), cols.size());
  for (const auto& [r, c, v] : cells) b.add(r, c, v);
  return rank(b.build());
}

LinearForm random_linear_form(int n, int m, Rng& rng, int coeff_bound) {
  if (n < 1 || m < 1) fail(Errc::BadArgument, "need at least one variable of each kind");
  if (coeff_bound < 1) fail(Errc::BadArgument, "coefficient bound must be positive");
  LinearForm L;
  L.x_coeffs.resize(static_cast<std::size_t>(n));
  L.u_coeffs.resize(static_cast<std::size_t>(m));
  do {
    for (auto& a : L.x_coeffs) a = Rational(rng.in_range(-coeff_bound, coeff_bound));
    for (auto& b : L.u_coeffs) b = Rational(rng.in_range(-coeff_bound, coeff_bound));
  } while (L.is_zero());
  return L;
}

}  // namespace qg
