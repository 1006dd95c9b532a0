#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qg {

// Shared command configuration, mirroring the CLI flags. Reports go to
// `out` when set, stdout otherwise. `format` accepts "json" everywhere and
// "csv" only where the payload is a plain Hilbert table.
struct RunConfig {
  std::optional<std::uint64_t> seed;
  int trials = 5;
  int coeff_bound = 10;
  int max_degree = -1;  // -1: socle degree + 1
  std::size_t max_oracle_dim = 50000;
  std::string out;
  std::string format = "json";
};

// Exit codes: 0 success (or witnessed hold), 1 proven failure or oracle
// mismatch, 2 bad input, 3 instance too large (including partial oracle
// coverage), 4 not witnessed / nothing found within the search bound.
int cmd_turan(const std::vector<int>& orders, const RunConfig& cfg);
int cmd_analyze(const std::string& complex_file, const std::vector<int>& orders,
                const RunConfig& cfg);
int cmd_oracle(const std::string& complex_file, const std::vector<int>& orders,
               const RunConfig& cfg);
int cmd_wlp(const std::string& complex_file, const std::vector<int>& orders,
            const RunConfig& cfg);
int cmd_slp(const std::string& complex_file, const std::vector<int>& orders,
            const RunConfig& cfg);
int cmd_hunt(int d, const RunConfig& cfg);

}  // namespace qg
