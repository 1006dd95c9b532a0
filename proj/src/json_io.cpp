#include "quadgor/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "quadgor/errors.hpp"
#include "quadgor/lefschetz.hpp"

namespace qg {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& text, std::size_t byte, const std::string& what) {
  std::size_t line = 1;
  for (std::size_t p = 0; p < byte && p < text.size(); ++p)
    if (text[p] == '\n') ++line;
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

// int64 when it fits, decimal string otherwise; keeps files exact without
// relying on JSON readers handling big integers.
ordered_json big_to_json(const BigInt& v) {
  static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return ordered_json(static_cast<std::int64_t>(v));
  return ordered_json(v.str());
}

ordered_json hilbert_to_json(const std::vector<BigInt>& h) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : h) arr.push_back(big_to_json(v));
  return arr;
}

ordered_json bigraded_to_json(const HilbertVector& h) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, dim] : h.bigraded) {
    ordered_json entry;
    entry["x_degree"] = key.first;
    entry["u_degree"] = key.second;
    entry["dim"] = big_to_json(dim);
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json face_to_json(const Face& f) {
  ordered_json arr = ordered_json::array();
  for (int v : f.vertices()) arr.push_back(v);
  return arr;
}

ordered_json linear_form_to_json(const LinearForm& L) {
  ordered_json out;
  ordered_json xs = ordered_json::array(), us = ordered_json::array();
  for (const auto& a : L.x_coeffs) xs.push_back(to_string(a));
  for (const auto& b : L.u_coeffs) us.push_back(to_string(b));
  out["x"] = std::move(xs);
  out["u"] = std::move(us);
  return out;
}

ordered_json generator_to_json(const OperatorPolynomial& p) {
  ordered_json out;
  out["type"] = p.terms.size() == 1 ? "monomial" : "binomial";
  ordered_json terms = ordered_json::array();
  for (const auto& [mon, coeff] : p.terms) {
    ordered_json term;
    term["coeff"] = to_string(coeff);
    ordered_json xe = ordered_json::array(), ue = ordered_json::array();
    for (auto e : mon.x_exp) xe.push_back(static_cast<int>(e));
    for (auto e : mon.u_exp) ue.push_back(static_cast<int>(e));
    term["x_exp"] = std::move(xe);
    term["u_exp"] = std::move(ue);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

ordered_json generator_class_to_json(const std::vector<OperatorPolynomial>& cls) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : cls) arr.push_back(generator_to_json(p));
  return arr;
}

ordered_json generators_json(const GradedIdealGenerators& g) {
  ordered_json out;
  out["squares"] = generator_class_to_json(g.class_a);
  out["nonface_monomials"] = generator_class_to_json(g.class_b);
  out["mixed_quadrics"] = generator_class_to_json(g.class_c);
  out["representative_binomials"] = generator_class_to_json(g.class_d);
  return out;
}

ordered_json summary_json(const AlgebraSummary& s) {
  ordered_json out;
  out["n"] = s.n;
  out["m"] = s.m;
  out["socle_degree"] = s.socle_degree;
  out["codimension"] = s.codimension;
  ordered_json fv = ordered_json::array();
  for (auto e : s.faces.e) fv.push_back(e);
  out["f_vector"] = std::move(fv);
  out["hilbert"] = hilbert_to_json(s.hilbert.h);
  out["bigraded"] = bigraded_to_json(s.hilbert);
  const UnimodalityCertificate cert = unimodality_certificate(s.hilbert);
  out["unimodal"] = cert.unimodal;
  out["totally_nonunimodal"] = cert.totally_nonunimodal;
  out["presented_by_quadrics"] = s.quadratic.presented_by_quadrics;
  out["flag"] = s.quadratic.flag;
  out["facet_connected"] = s.quadratic.facet_connected;
  out["nonflag_witness"] =
      s.quadratic.nonflag_witness ? face_to_json(*s.quadratic.nonflag_witness) : ordered_json();
  if (s.quadratic.disconnected_witness) {
    out["disconnected_witness"] =
        ordered_json::array({s.quadratic.disconnected_witness->first,
                             s.quadratic.disconnected_witness->second});
  } else {
    out["disconnected_witness"] = ordered_json();
  }
  ordered_json counts;
  counts["squares"] = s.generators_a;
  counts["nonface_monomials"] = s.generators_b;
  counts["mixed_quadrics"] = s.generators_c;
  counts["representative_binomials"] = s.generators_d;
  counts["total"] = s.generators_a + s.generators_b + s.generators_c + s.generators_d;
  out["generator_counts"] = std::move(counts);
  return out;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

SimplicialComplex complex_from_json_text(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(text, e.byte, e.what());
  }
  if (!doc.is_object()) fail(Errc::ParseError, "top level must be an object");
  if (!doc.contains("m") || !doc["m"].is_number_integer())
    fail(Errc::ParseError, "missing integer field \"m\"");
  if (!doc.contains("facets") || !doc["facets"].is_array())
    fail(Errc::ParseError, "missing array field \"facets\"");
  const int m = doc["m"].get<int>();
  std::vector<std::vector<int>> facets;
  for (const auto& row : doc["facets"]) {
    if (!row.is_array()) fail(Errc::ParseError, "each facet must be an array of vertices");
    std::vector<int> f;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(Errc::ParseError, "vertices must be integers");
      f.push_back(v.get<int>());
    }
    facets.push_back(std::move(f));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) fail(Errc::ParseError, "\"labels\" must be an array");
    for (const auto& s : doc["labels"]) {
      if (!s.is_string()) fail(Errc::ParseError, "labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return build_complex(facets, m, labels);
}

SimplicialComplex load_complex_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return complex_from_json_text(buf.str());
}

std::string complex_to_json(const SimplicialComplex& c) {
  ordered_json out;
  out["m"] = c.m;
  ordered_json facets = ordered_json::array();
  for (const auto& f : c.facets) facets.push_back(face_to_json(f));
  out["facets"] = std::move(facets);
  if (!c.labels.empty()) out["labels"] = c.labels;
  return finish(out);
}

std::string generators_to_json(const GradedIdealGenerators& g) {
  return finish(generators_json(g));
}

std::string summary_to_json(const AlgebraSummary& s) { return finish(summary_json(s)); }

std::string summary_with_generators_to_json(const AlgebraSummary& s,
                                            const GradedIdealGenerators& g) {
  ordered_json out = summary_json(s);
  out["generators"] = generators_json(g);
  return finish(out);
}

std::string hilbert_csv(const HilbertVector& h) {
  std::ostringstream os;
  os << "k,h\n";
  for (std::size_t k = 0; k < h.h.size(); ++k) os << k << "," << h.h[k].str() << "\n";
  return os.str();
}

std::string oracle_report_to_json(const OracleReport& r) {
  ordered_json out;
  out["max_degree"] = r.max_degree;
  out["max_oracle_dim"] = r.max_oracle_dim;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["skipped_degrees"] = r.skipped_degrees;
  out["all_pass"] = r.all_pass();
  out["partial"] = r.partial();
  return finish(out);
}

namespace {

ordered_json probe_core(const HilbertVector& h, ProbeVerdict verdict,
                        const std::optional<LinearForm>& witness,
                        const std::vector<std::string>& obstructions) {
  ordered_json out;
  out["hilbert"] = hilbert_to_json(h.h);
  out["levels"] = ordered_json::array();
  out["verdict"] = verdict_name(verdict);
  out["witness"] = witness ? linear_form_to_json(*witness) : ordered_json();
  out["obstructions"] = obstructions;
  return out;
}

}  // namespace

std::string wlp_report_to_json(const WlpReport& r) {
  ordered_json out = probe_core(r.hilbert, r.verdict, r.witness, r.obstructions);
  for (const auto& lvl : r.levels) {
    ordered_json entry;
    entry["k"] = lvl.k;
    entry["expected"] = big_to_json(lvl.expected);
    entry["achieved"] = big_to_json(lvl.achieved);
    out["levels"].push_back(std::move(entry));
  }
  out["dimension_obstructions"] = r.dimension_obstructions;
  out["trials"] = r.trials;
  out["coeff_bound"] = r.coeff_bound;
  out["seed"] = r.seed;
  return finish(out);
}

std::string slp_report_to_json(const SlpReport& r) {
  ordered_json out = probe_core(r.hilbert, r.verdict, r.witness, r.obstructions);
  for (const auto& lvl : r.levels) {
    ordered_json entry;
    entry["k"] = lvl.k;
    entry["power"] = lvl.power;
    entry["expected"] = big_to_json(lvl.expected);
    entry["achieved"] = big_to_json(lvl.achieved);
    out["levels"].push_back(std::move(entry));
  }
  out["trials"] = r.trials;
  out["coeff_bound"] = r.coeff_bound;
  out["seed"] = r.seed;
  return finish(out);
}

std::string hunt_result_to_json(const CounterexampleResult& r) {
  ordered_json out;
  out["d"] = r.d;
  out["orders"] = r.orders;
  out["codimension"] = big_to_json(r.codimension);
  out["hilbert"] = hilbert_to_json(r.hilbert);
  out["totally_nonunimodal"] = true;
  return finish(out);
}

}  // namespace qg
