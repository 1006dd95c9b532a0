#include "quadgor/gorenstein.hpp"

#include <algorithm>
#include <sstream>

#include "quadgor/errors.hpp"
#include "quadgor/util.hpp"

namespace qg {

namespace {

BiMonomial operator_monomial(int n, int m, int facet, const Face& dual) {
  BiMonomial mon;
  mon.x_exp.assign(static_cast<std::size_t>(n), 0);
  mon.u_exp.assign(static_cast<std::size_t>(m), 0);
  if (facet >= 0) mon.x_exp[static_cast<std::size_t>(facet)] = 1;
  for (int v : dual.vertices()) mon.u_exp[static_cast<std::size_t>(v)] = 1;
  return mon;
}

// Smallest facet index containing the face; every face of a pure complex
// lies in some facet.
int min_containing_facet(const SimplicialComplex& c, const Face& omega) {
  for (int i = 0; i < c.n(); ++i)
    if (c.facets[static_cast<std::size_t>(i)].contains(omega)) return i;
  fail(Errc::BadArgument, omega.to_string() + " is not a face");
}

}  // namespace

std::vector<OperatorPolynomial> GradedIdealGenerators::all() const {
  std::vector<OperatorPolynomial> out;
  out.reserve(size());
  for (const auto* cls : {&class_a, &class_b, &class_c, &class_d})
    out.insert(out.end(), cls->begin(), cls->end());
  return out;
}

GradedIdealGenerators combinatorial_generators(const SimplicialComplex& c) {
  const int n = c.n(), m = c.m, d = c.d();
  GradedIdealGenerators g;

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      BiMonomial mon = operator_monomial(n, m, -1, Face());
      mon.x_exp[static_cast<std::size_t>(i)] += 1;
      mon.x_exp[static_cast<std::size_t>(j)] += 1;
      g.class_a.push_back(OperatorPolynomial::monomial(n, m, std::move(mon)));
    }
  for (int j = 0; j < m; ++j) {
    BiMonomial mon = operator_monomial(n, m, -1, Face());
    mon.u_exp[static_cast<std::size_t>(j)] = 2;
    g.class_a.push_back(OperatorPolynomial::monomial(n, m, std::move(mon)));
  }

  for (const Face& nf : minimal_nonfaces(c, d))
    g.class_b.push_back(OperatorPolynomial::monomial(n, m, operator_monomial(n, m, -1, nf)));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!c.facets[static_cast<std::size_t>(i)].has(j))
        g.class_c.push_back(
            OperatorPolynomial::monomial(n, m, operator_monomial(n, m, i, Face::singleton(j))));

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Face& gi = c.facets[static_cast<std::size_t>(i)];
      const Face& gj = c.facets[static_cast<std::size_t>(j)];
      const Face gij = gi.intersect(gj);
      OperatorPolynomial p;
      p.n = n;
      p.m = m;
      p.add_term(operator_monomial(n, m, i, gi.minus(gij)), 1);
      p.add_term(operator_monomial(n, m, j, gj.minus(gij)), -1);
      g.class_d.push_back(std::move(p));
    }

  return g;
}

std::optional<std::size_t> BasisLevel::face_index(const Face& f) const {
  auto it = std::lower_bound(face_part.begin(), face_part.end(), f);
  if (it == face_part.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - face_part.begin());
}

std::optional<std::size_t> BasisLevel::rep_index(const Face& omega) const {
  auto it = std::lower_bound(rep_faces.begin(), rep_faces.end(), omega);
  if (it == rep_faces.end() || *it != omega) return std::nullopt;
  return face_part.size() + static_cast<std::size_t>(it - rep_faces.begin());
}

CombinatorialBasis combinatorial_basis(const SimplicialComplex& c) {
  const int d = c.d();
  CombinatorialBasis basis;
  basis.d = d;
  basis.levels.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    BasisLevel& level = basis.levels[static_cast<std::size_t>(k)];
    if (k <= d - 1) level.face_part = enumerate_faces(c, k);
    if (k >= 1) {
      level.rep_faces = enumerate_faces(c, d - k);
      level.rep_part.reserve(level.rep_faces.size());
      for (const Face& omega : level.rep_faces) {
        const int p = min_containing_facet(c, omega);
        level.rep_part.emplace_back(p, c.facets[static_cast<std::size_t>(p)].minus(omega));
      }
    }
  }
  return basis;
}

HilbertVector hilbert_combinatorial(const SimplicialComplex& c) {
  const int d = c.d();
  const FVector e = f_vector(c);
  HilbertVector hv;
  hv.h.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) hv.h[static_cast<std::size_t>(k)] = BigInt(e.at(k)) + e.at(d - k);
  for (int j = 0; j <= d - 1; ++j) {
    hv.bigraded[{0, j}] = e.at(j);
    hv.bigraded[{1, j}] = e.at(d - 1 - j);
  }
  return hv;
}

QuadraticPresentation is_presented_by_quadrics(const SimplicialComplex& c) {
  QuadraticPresentation out;
  const FlagResult fr = is_flag(c);
  out.flag = fr.flag;
  out.nonflag_witness = fr.witness;
  const ConnectivityResult cr = is_facet_connected(c);
  out.facet_connected = cr.connected;
  out.disconnected_witness = cr.witness;
  out.presented_by_quadrics = out.flag && out.facet_connected;
  return out;
}

AlgebraSummary analyze_complex(const SimplicialComplex& c) {
  AlgebraSummary s;
  s.n = c.n();
  s.m = c.m;
  s.socle_degree = c.d();
  s.codimension = s.n + s.m;
  s.faces = f_vector(c);
  s.hilbert = hilbert_combinatorial(c);
  s.quadratic = is_presented_by_quadrics(c);
  const GradedIdealGenerators g = combinatorial_generators(c);
  s.generators_a = g.class_a.size();
  s.generators_b = g.class_b.size();
  s.generators_c = g.class_c.size();
  s.generators_d = g.class_d.size();
  return s;
}

SparseRationalMatrix multiplication_matrix(const SimplicialComplex& c,
                                           const CombinatorialBasis& basis, const LinearForm& L,
                                           int k) {
  const int d = c.d(), n = c.n(), m = c.m;
  if (k < 0 || k > d - 1) fail(Errc::BadDegree, "level outside [0, d-1]");
  if (static_cast<int>(L.x_coeffs.size()) != n || static_cast<int>(L.u_coeffs.size()) != m)
    fail(Errc::DimensionMismatch, "linear form over wrong variable set");
  const BasisLevel& src = basis.levels[static_cast<std::size_t>(k)];
  const BasisLevel& dst = basis.levels[static_cast<std::size_t>(k) + 1];
  SparseRationalMatrix::Builder b(dst.size(), src.size());

  for (std::size_t col = 0; col < src.face_part.size(); ++col) {
    const Face& omega = src.face_part[col];
    for (int j = 0; j < m; ++j) {
      if (L.u_coeffs[static_cast<std::size_t>(j)] == 0 || omega.has(j)) continue;
      if (auto row = dst.face_index(omega.with(j)))
        b.add(*row, col, L.u_coeffs[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < n; ++i) {
      if (L.x_coeffs[static_cast<std::size_t>(i)] == 0) continue;
      const Face& gi = c.facets[static_cast<std::size_t>(i)];
      if (!gi.contains(omega)) continue;
      const auto row = dst.rep_index(gi.minus(omega));
      b.add(*row, col, L.x_coeffs[static_cast<std::size_t>(i)]);
    }
  }
  for (std::size_t r = 0; r < src.rep_part.size(); ++r) {
    const std::size_t col = src.face_part.size() + r;
    const Face& omega = src.rep_faces[r];
    for (int j : omega.vertices()) {
      if (L.u_coeffs[static_cast<std::size_t>(j)] == 0) continue;
      const auto row = dst.rep_index(omega.without(j));
      b.add(*row, col, L.u_coeffs[static_cast<std::size_t>(j)]);
    }
  }
  return b.build();
}

SparseRationalMatrix multiplication_matrix(const SimplicialComplex& c, const LinearForm& L,
                                           int k) {
  return multiplication_matrix(c, combinatorial_basis(c), L, k);
}

bool OracleReport::all_pass() const {
  for (const auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

namespace {

bool degree_feasible(int n, int m, int k, std::size_t cap) {
  return binomial(n + m + k - 1, k) <= BigInt(cap);
}

std::string join_degrees(const std::vector<int>& ks) {
  std::ostringstream os;
  for (std::size_t t = 0; t < ks.size(); ++t) os << (t ? "," : "") << ks[t];
  return os.str();
}

}  // namespace

OracleReport oracle_crosscheck(const SimplicialComplex& c, const OracleConfig& cfg) {
  const int n = c.n(), m = c.m, d = c.d();
  const int max_degree = cfg.max_degree < 0 ? d + 1 : cfg.max_degree;
  if (cfg.max_oracle_dim < 1) fail(Errc::BadArgument, "oracle dimension cap must be positive");
  if (cfg.trials < 1) fail(Errc::BadArgument, "trials must be positive");

  OracleReport report;
  report.max_degree = max_degree;
  report.max_oracle_dim = cfg.max_oracle_dim;
  std::vector<bool> feasible(static_cast<std::size_t>(max_degree) + 1, false);
  bool any = false;
  for (int k = 0; k <= max_degree; ++k) {
    feasible[static_cast<std::size_t>(k)] = degree_feasible(n, m, k, cfg.max_oracle_dim);
    if (feasible[static_cast<std::size_t>(k)] && k >= 1) any = true;
    if (!feasible[static_cast<std::size_t>(k)]) report.skipped_degrees.push_back(k);
  }
  if (!any)
    fail(Errc::InstanceTooLarge,
         "no degree within the dim Q cap of " + std::to_string(cfg.max_oracle_dim));
  const auto ok_at = [&](int k) {
    return k >= 0 && k <= max_degree && feasible[static_cast<std::size_t>(k)];
  };

  const BigradedForm f = form_from_complex(c);
  const HilbertVector comb = hilbert_combinatorial(c);
  const GradedIdealGenerators gens = combinatorial_generators(c);
  const std::vector<OperatorPolynomial> gen_list = gens.all();

  {
    OracleCheck check;
    check.name = "hilbert";
    check.pass = true;
    std::vector<int> covered;
    std::ostringstream bad;
    for (int k = 0; k <= std::min(d, max_degree); ++k) {
      if (!ok_at(k)) continue;
      covered.push_back(k);
      BigInt total = 0;
      for (int i = 0; i <= std::min(k, 1); ++i) {
        const int j = k - i;
        if (j > d - 1) continue;
        const BigInt r = rank(catalecticant(f, i, j).matrix);
        total += r;
        auto it = comb.bigraded.find({i, j});
        const BigInt expected = it == comb.bigraded.end() ? BigInt(0) : it->second;
        if (expected != r) {
          check.pass = false;
          bad << " bidegree(" << i << "," << j << "): formula " << expected.str() << ", rank "
              << r.str() << ";";
        }
      }
      if (total != comb.h[static_cast<std::size_t>(k)]) {
        check.pass = false;
        bad << " k=" << k << ": formula " << comb.h[static_cast<std::size_t>(k)].str()
            << ", ranks " << total.str() << ";";
      }
    }
    check.detail = "degrees " + join_degrees(covered) +
                   (check.pass ? ": formula matches catalecticant ranks" : ":" + bad.str());
    report.checks.push_back(std::move(check));
  }

  {
    OracleCheck check;
    check.name = "annihilation";
    check.pass = true;
    std::size_t bad = 0;
    std::string first;
    for (const auto& g : gen_list)
      if (!annihilates(g, f)) {
        ++bad;
        if (first.empty()) first = g.to_string();
        check.pass = false;
      }
    check.detail = check.pass
                       ? "all " + std::to_string(gen_list.size()) + " generators kill the form"
                       : std::to_string(bad) + " generators act non-trivially, first " + first;
    report.checks.push_back(std::move(check));
  }

  {
    OracleCheck check;
    check.name = "ideal_dimension";
    check.pass = true;
    std::vector<int> covered;
    std::ostringstream bad;
    for (int k = 0; k <= max_degree; ++k) {
      if (!ok_at(k)) continue;
      covered.push_back(k);
      const std::size_t span = ideal_span_dimension(gen_list, k, n, m);
      const std::size_t ideal = annihilator_basis(f, k).dimension();
      if (span != ideal) {
        check.pass = false;
        bad << " k=" << k << ": generated " << span << ", annihilator " << ideal << ";";
      }
    }
    check.detail = "degrees " + join_degrees(covered) +
                   (check.pass ? ": generators span the annihilator" : ":" + bad.str());
    report.checks.push_back(std::move(check));
  }

  {
    OracleCheck check;
    check.name = "multiplication_rank";
    check.pass = true;
    std::vector<int> covered;
    std::ostringstream bad;
    Rng rng(cfg.seed);
    std::vector<LinearForm> forms;
    forms.reserve(static_cast<std::size_t>(cfg.trials));
    for (int t = 0; t < cfg.trials; ++t)
      forms.push_back(random_linear_form(n, m, rng, cfg.coeff_bound));
    const CombinatorialBasis basis = combinatorial_basis(c);
    for (int k = 0; k + 1 <= d && k <= max_degree; ++k) {
      if (!ok_at(k) || !ok_at(d - 1 - k)) continue;
      covered.push_back(k);
      for (int t = 0; t < cfg.trials; ++t) {
        const std::size_t comb_rank = rank(multiplication_matrix(c, basis, forms[t], k));
        const std::size_t brute = brute_multiplication_rank(f, forms[t], k, 1);
        if (comb_rank != brute) {
          check.pass = false;
          bad << " k=" << k << " trial " << t << ": combinatorial " << comb_rank << ", quotient "
              << brute << ";";
        }
      }
    }
    check.detail = "levels " + join_degrees(covered) + ", " + std::to_string(cfg.trials) +
                   " forms" +
                   (check.pass ? ": ranks agree in both models" : ":" + bad.str());
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace qg
