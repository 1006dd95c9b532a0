#pragma once

#include <string>

#include "quadgor/gorenstein.hpp"
#include "quadgor/lefschetz.hpp"
#include "quadgor/simplicial.hpp"

namespace qg {

// Complex file format:
//   {"m": <vertex count>, "facets": [[v, ...], ...], "labels": [s, ...]?}
// Facet vertex lists may arrive unsorted; they are canonicalized on load.
// Malformed input raises Errc::ParseError with a line diagnostic.
SimplicialComplex complex_from_json_text(const std::string& text);
SimplicialComplex load_complex_file(const std::string& path);
std::string complex_to_json(const SimplicialComplex& c);

// Generator serialization: each element is
//   {"type": "monomial"|"binomial", "terms": [{"coeff": str, "x_exp": [...],
//    "u_exp": [...]}]}
// grouped by class.
std::string generators_to_json(const GradedIdealGenerators& g);

// Reports. All serializers are deterministic byte for byte: no timestamps,
// no floats, fixed key order, two-space indentation, trailing newline.
// Integers that do not fit in 64 bits are emitted as decimal strings.
std::string summary_to_json(const AlgebraSummary& s);
std::string summary_with_generators_to_json(const AlgebraSummary& s,
                                            const GradedIdealGenerators& g);
std::string hilbert_csv(const HilbertVector& h);
std::string oracle_report_to_json(const OracleReport& r);
std::string wlp_report_to_json(const WlpReport& r);
std::string slp_report_to_json(const SlpReport& r);
std::string hunt_result_to_json(const CounterexampleResult& r);

}  // namespace qg
