#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadgor/commands.hpp"

namespace {

struct CommonArgs {
  std::string complex_file;
  std::vector<int> orders;
  qg::RunConfig cfg;
};

// Wires the flag set shared by the complex-consuming subcommands. --seed is
// mandatory only for the probabilistic probes.
void add_common(CLI::App* sub, CommonArgs* args, bool seed_required) {
  sub->add_option("--complex", args->complex_file, "complex description file");
  sub->add_option("--orders", args->orders, "Turan part sizes")->delimiter(',');
  auto* seed = sub->add_option("--seed", args->cfg.seed, "RNG seed");
  if (seed_required) seed->required();
  sub->add_option("--trials", args->cfg.trials, "linear forms to try");
  sub->add_option("--coeff-bound", args->cfg.coeff_bound,
                  "coefficient magnitude bound");
  sub->add_option("--out", args->cfg.out, "output file (default stdout)");
  sub->add_option("--format", args->cfg.format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigraded Gorenstein algebras from pure simplicial complexes"};
  app.require_subcommand(1);

  CommonArgs turan_args;
  auto* turan = app.add_subcommand("turan", "analyze a Turan complex");
  turan->add_option("--orders", turan_args.orders, "part sizes")
      ->delimiter(',')
      ->required();
  turan->add_option("--out", turan_args.cfg.out, "output file (default stdout)");
  turan->add_option("--format", turan_args.cfg.format, "json or csv");

  CommonArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "full structural report");
  add_common(analyze, &analyze_args, /*seed_required=*/false);

  CommonArgs oracle_args;
  auto* oracle =
      app.add_subcommand("oracle", "cross-check formulas against linear algebra");
  add_common(oracle, &oracle_args, /*seed_required=*/false);
  oracle->add_option("--max-degree", oracle_args.cfg.max_degree,
                     "highest degree to verify");
  oracle->add_option("--max-oracle-dim", oracle_args.cfg.max_oracle_dim,
                     "largest polynomial space the oracle may build");

  CommonArgs wlp_args;
  auto* wlp = app.add_subcommand("wlp", "weak Lefschetz probe");
  add_common(wlp, &wlp_args, /*seed_required=*/true);

  CommonArgs slp_args;
  auto* slp = app.add_subcommand("slp", "strong Lefschetz probe");
  add_common(slp, &slp_args, /*seed_required=*/true);
  slp->add_option("--max-oracle-dim", slp_args.cfg.max_oracle_dim,
                  "largest level dimension the probe may handle");

  int hunt_degree = 0;
  qg::RunConfig hunt_cfg;
  auto* hunt = app.add_subcommand(
      "hunt", "smallest equal-order Turan complex with non-unimodal Hilbert vector");
  hunt->add_option("d", hunt_degree, "socle degree")->required();
  hunt->add_option("--out", hunt_cfg.out, "output file (default stdout)");
  hunt->add_option("--format", hunt_cfg.format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (turan->parsed()) return qg::cmd_turan(turan_args.orders, turan_args.cfg);
  if (analyze->parsed())
    return qg::cmd_analyze(analyze_args.complex_file, analyze_args.orders,
                           analyze_args.cfg);
  if (oracle->parsed())
    return qg::cmd_oracle(oracle_args.complex_file, oracle_args.orders,
                          oracle_args.cfg);
  if (wlp->parsed())
    return qg::cmd_wlp(wlp_args.complex_file, wlp_args.orders, wlp_args.cfg);
  if (slp->parsed())
    return qg::cmd_slp(slp_args.complex_file, slp_args.orders, slp_args.cfg);
  if (hunt->parsed()) return qg::cmd_hunt(hunt_degree, hunt_cfg);
  return 2;
}
