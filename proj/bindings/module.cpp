#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "quadgor/apolarity.hpp"
#include "quadgor/errors.hpp"
#include "quadgor/gorenstein.hpp"
#include "quadgor/json_io.hpp"
#include "quadgor/lefschetz.hpp"
#include "quadgor/simplicial.hpp"

namespace py = pybind11;

namespace {

// Hilbert entries can exceed any fixed-width integer, so they cross the
// boundary as Python ints built from decimal strings.
py::object big_to_py(const qg::BigInt& v) {
  return py::int_(py::str(v.str()));
}

py::list big_vector(const std::vector<qg::BigInt>& vals) {
  py::list out;
  for (const auto& v : vals) out.append(big_to_py(v));
  return out;
}

py::dict hilbert_dict(const qg::HilbertVector& h) {
  py::dict out;
  out["h"] = big_vector(h.h);
  py::list parts;
  for (const auto& [key, dim] : h.bigraded) {
    py::dict cell;
    cell["x_degree"] = key.first;
    cell["u_degree"] = key.second;
    cell["dim"] = big_to_py(dim);
    parts.append(cell);
  }
  out["bigraded"] = parts;
  return out;
}

py::dict form_dict(const qg::LinearForm& L) {
  py::dict out;
  py::list xs, us;
  for (const auto& c : L.x_coeffs) xs.append(qg::to_string(c));
  for (const auto& c : L.u_coeffs) us.append(qg::to_string(c));
  out["x"] = xs;
  out["u"] = us;
  return out;
}

qg::SimplicialComplex make_complex(const std::vector<std::vector<int>>& facets, int m) {
  return qg::build_complex(facets, m, {});
}

py::dict summary_dict(const qg::SimplicialComplex& c) {
  const auto s = qg::analyze_complex(c);
  py::dict out;
  out["n"] = s.n;
  out["m"] = s.m;
  out["socle_degree"] = s.socle_degree;
  out["codimension"] = s.codimension;
  py::list fv;
  for (auto e : s.faces.e) fv.append(e);
  out["f_vector"] = fv;
  out["hilbert"] = big_vector(s.hilbert.h);
  out["presented_by_quadrics"] = s.quadratic.presented_by_quadrics;
  out["flag"] = s.quadratic.flag;
  out["facet_connected"] = s.quadratic.facet_connected;
  if (s.quadratic.nonflag_witness)
    out["nonflag_witness"] = s.quadratic.nonflag_witness->vertices();
  else
    out["nonflag_witness"] = py::none();
  out["generator_counts"] =
      py::make_tuple(s.generators_a, s.generators_b, s.generators_c, s.generators_d);
  return out;
}

py::dict wlp_dict(const qg::WlpReport& r) {
  py::dict out;
  out["hilbert"] = big_vector(r.hilbert.h);
  py::list levels;
  for (const auto& lvl : r.levels) {
    py::dict cell;
    cell["k"] = lvl.k;
    cell["expected"] = big_to_py(lvl.expected);
    cell["achieved"] = big_to_py(lvl.achieved);
    levels.append(cell);
  }
  out["levels"] = levels;
  out["verdict"] = qg::verdict_name(r.verdict);
  out["witness"] = r.witness ? py::object(form_dict(*r.witness)) : py::object(py::none());
  out["dimension_obstructions"] = r.dimension_obstructions;
  out["obstructions"] = r.obstructions;
  return out;
}

py::dict slp_dict(const qg::SlpReport& r) {
  py::dict out;
  out["hilbert"] = big_vector(r.hilbert.h);
  py::list levels;
  for (const auto& lvl : r.levels) {
    py::dict cell;
    cell["k"] = lvl.k;
    cell["power"] = lvl.power;
    cell["expected"] = big_to_py(lvl.expected);
    cell["achieved"] = big_to_py(lvl.achieved);
    levels.append(cell);
  }
  out["levels"] = levels;
  out["verdict"] = qg::verdict_name(r.verdict);
  out["witness"] = r.witness ? py::object(form_dict(*r.witness)) : py::object(py::none());
  out["obstructions"] = r.obstructions;
  return out;
}

py::dict oracle_dict(const qg::OracleReport& r) {
  py::dict out;
  out["max_degree"] = r.max_degree;
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict cell;
    cell["name"] = c.name;
    cell["pass"] = c.pass;
    cell["detail"] = c.detail;
    checks.append(cell);
  }
  out["checks"] = checks;
  out["skipped_degrees"] = r.skipped_degrees;
  out["all_pass"] = r.all_pass();
  out["partial"] = r.partial();
  return out;
}

py::dict hunt_dict(const qg::CounterexampleResult& r) {
  py::dict out;
  out["d"] = r.d;
  out["orders"] = r.orders;
  out["codimension"] = big_to_py(r.codimension);
  out["hilbert"] = big_vector(r.hilbert);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bigraded Gorenstein algebras from pure simplicial complexes";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qg::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<qg::SimplicialComplex>(m, "Complex")
      .def(py::init(&make_complex), py::arg("facets"), py::arg("m"))
      .def_property_readonly("n", &qg::SimplicialComplex::n)
      .def_property_readonly("m",
                             [](const qg::SimplicialComplex& c) { return c.m; })
      .def_property_readonly("socle_degree", &qg::SimplicialComplex::d)
      .def("facet_list",
           [](const qg::SimplicialComplex& c) {
             std::vector<std::vector<int>> out;
             for (const auto& g : c.facets) out.push_back(g.vertices());
             return out;
           })
      .def("__repr__", [](const qg::SimplicialComplex& c) {
        return "<Complex n=" + std::to_string(c.n()) + " m=" + std::to_string(c.m) +
               ">";
      });

  m.def("turan", &qg::turan_complex, py::arg("orders"),
        "complete multipartite complex with the given block sizes");
  m.def(
      "load_complex", [](const std::string& path) { return qg::load_complex_file(path); },
      py::arg("path"));
  m.def(
      "random_complex",
      [](int d, int m, int n, std::uint64_t seed) {
        return qg::random_pure_complex(d, m, n, seed);
      },
      py::arg("d"), py::arg("m"), py::arg("n"), py::arg("seed"));

  m.def(
      "hilbert", [](const qg::SimplicialComplex& c) { return big_vector(qg::hilbert_combinatorial(c).h); },
      py::arg("complex"), "Hilbert vector through the face-count formula");
  m.def(
      "hilbert_detail",
      [](const qg::SimplicialComplex& c) { return hilbert_dict(qg::hilbert_combinatorial(c)); },
      py::arg("complex"));
  m.def(
      "hilbert_oracle",
      [](const qg::SimplicialComplex& c) {
        return hilbert_dict(qg::hilbert_brute(qg::form_from_complex(c)));
      },
      py::arg("complex"), "Hilbert vector through exact catalecticant ranks");

  m.def("analyze", &summary_dict, py::arg("complex"));
  m.def(
      "presented_by_quadrics",
      [](const qg::SimplicialComplex& c) {
        return qg::is_presented_by_quadrics(c).presented_by_quadrics;
      },
      py::arg("complex"));
  m.def(
      "oracle",
      [](const qg::SimplicialComplex& c, int max_degree, std::size_t max_dim,
         std::uint64_t seed, int trials, int coeff_bound) {
        qg::OracleConfig cfg;
        cfg.max_degree = max_degree;
        cfg.max_oracle_dim = max_dim;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.coeff_bound = coeff_bound;
        return oracle_dict(qg::oracle_crosscheck(c, cfg));
      },
      py::arg("complex"), py::arg("max_degree") = -1, py::arg("max_oracle_dim") = 50000,
      py::arg("seed") = 1, py::arg("trials") = 5, py::arg("coeff_bound") = 10);

  m.def(
      "wlp",
      [](const qg::SimplicialComplex& c, int trials, std::uint64_t seed, int coeff_bound) {
        return wlp_dict(qg::wlp_probe(c, trials, seed, coeff_bound));
      },
      py::arg("complex"), py::arg("trials") = 5, py::arg("seed") = 1,
      py::arg("coeff_bound") = 10);
  m.def(
      "slp",
      [](const qg::SimplicialComplex& c, int trials, std::uint64_t seed, int coeff_bound,
         std::size_t max_dim) {
        return slp_dict(qg::slp_probe(c, trials, seed, coeff_bound, max_dim));
      },
      py::arg("complex"), py::arg("trials") = 5, py::arg("seed") = 1,
      py::arg("coeff_bound") = 10, py::arg("max_dim") = 50000);
  m.def(
      "hunt",
      [](int d, bool equal_orders, int cap) {
        return hunt_dict(qg::counterexample_search(d, equal_orders, cap));
      },
      py::arg("d"), py::arg("equal_orders") = true, py::arg("cap") = 100,
      "smallest product complex with a strictly dipping Hilbert vector");
}
