#include "quadgor/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "quadgor/errors.hpp"
#include "quadgor/gorenstein.hpp"
#include "quadgor/json_io.hpp"
#include "quadgor/lefschetz.hpp"
#include "quadgor/simplicial.hpp"

namespace qg {

namespace {

int exit_for(Errc code) {
  switch (code) {
    case Errc::InstanceTooLarge:
      return 3;
    case Errc::NotFoundWithinBound:
      return 4;
    default:
      return 2;
  }
}

// Writes `text` to cfg.out, or stdout when no path is set. Returns false
// (after printing to stderr) when the file cannot be created.
bool emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write " << cfg.out << "\n";
    return false;
  }
  file << text;
  return true;
}

bool check_format(const RunConfig& cfg, bool csv_allowed) {
  if (cfg.format == "json") return true;
  if (cfg.format == "csv" && csv_allowed) return true;
  std::cerr << "error: unsupported format '" << cfg.format << "'\n";
  return false;
}

// Resolves the complex argument shared by analyze/oracle/wlp/slp: exactly
// one of a JSON file path or a Turan order list.
SimplicialComplex resolve_complex(const std::string& complex_file,
                                  const std::vector<int>& orders) {
  const bool have_file = !complex_file.empty();
  const bool have_orders = !orders.empty();
  if (have_file == have_orders)
    fail(Errc::BadArgument, "exactly one of --complex and --orders is required");
  if (have_file) return load_complex_file(complex_file);
  return turan_complex(orders);
}

}  // namespace

int cmd_turan(const std::vector<int>& orders, const RunConfig& cfg) {
  if (!check_format(cfg, /*csv_allowed=*/true)) return 2;
  try {
    const SimplicialComplex c = turan_complex(orders);
    const AlgebraSummary summary = analyze_complex(c);
    const std::string text = cfg.format == "csv" ? hilbert_csv(summary.hilbert)
                                                 : summary_to_json(summary);
    return emit(cfg, text) ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

int cmd_analyze(const std::string& complex_file, const std::vector<int>& orders,
                const RunConfig& cfg) {
  if (!check_format(cfg, /*csv_allowed=*/false)) return 2;
  try {
    const SimplicialComplex c = resolve_complex(complex_file, orders);
    const AlgebraSummary summary = analyze_complex(c);
    const GradedIdealGenerators gens = combinatorial_generators(c);
    return emit(cfg, summary_with_generators_to_json(summary, gens)) ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

int cmd_oracle(const std::string& complex_file, const std::vector<int>& orders,
               const RunConfig& cfg) {
  if (!check_format(cfg, /*csv_allowed=*/false)) return 2;
  try {
    const SimplicialComplex c = resolve_complex(complex_file, orders);
    OracleConfig oracle_cfg;
    oracle_cfg.max_degree = cfg.max_degree;
    oracle_cfg.max_oracle_dim = cfg.max_oracle_dim;
    oracle_cfg.seed = cfg.seed.value_or(1);
    oracle_cfg.trials = cfg.trials;
    oracle_cfg.coeff_bound = cfg.coeff_bound;
    const OracleReport report = oracle_crosscheck(c, oracle_cfg);
    if (!emit(cfg, oracle_report_to_json(report))) return 2;
    if (!report.all_pass()) return 1;
    if (report.partial()) return 3;
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

int cmd_wlp(const std::string& complex_file, const std::vector<int>& orders,
            const RunConfig& cfg) {
  if (!check_format(cfg, /*csv_allowed=*/false)) return 2;
  if (!cfg.seed) {
    std::cerr << "error: --seed is required\n";
    return 2;
  }
  try {
    const SimplicialComplex c = resolve_complex(complex_file, orders);
    const WlpReport report = wlp_probe(c, cfg.trials, *cfg.seed, cfg.coeff_bound);
    if (!emit(cfg, wlp_report_to_json(report))) return 2;
    switch (report.verdict) {
      case ProbeVerdict::WitnessedHold:
        return 0;
      case ProbeVerdict::ProvenFail:
        return 1;
      case ProbeVerdict::NotWitnessed:
        return 4;
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

int cmd_slp(const std::string& complex_file, const std::vector<int>& orders,
            const RunConfig& cfg) {
  if (!check_format(cfg, /*csv_allowed=*/false)) return 2;
  if (!cfg.seed) {
    std::cerr << "error: --seed is required\n";
    return 2;
  }
  try {
    const SimplicialComplex c = resolve_complex(complex_file, orders);
    const SlpReport report =
        slp_probe(c, cfg.trials, *cfg.seed, cfg.coeff_bound, cfg.max_oracle_dim);
    if (!emit(cfg, slp_report_to_json(report))) return 2;
    switch (report.verdict) {
      case ProbeVerdict::WitnessedHold:
        return 0;
      case ProbeVerdict::ProvenFail:
        return 1;
      case ProbeVerdict::NotWitnessed:
        return 4;
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

int cmd_hunt(int d, const RunConfig& cfg) {
  if (!check_format(cfg, /*csv_allowed=*/false)) return 2;
  try {
    const CounterexampleResult result =
        counterexample_search(d, /*equal_orders=*/true);
    return emit(cfg, hunt_result_to_json(result)) ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

}  // namespace qg
