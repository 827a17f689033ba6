#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ellip/conformal.hpp"
#include "ellip/types.hpp"

namespace ellip {

struct GridConfig {
  int J = 64;
  int M = 0;  ///< 0 = choose the smallest admissible power of two
  int K_max = 32;
};

struct OutputConfig {
  std::string solution_csv;  ///< empty = not written
  std::string report_json;
  std::string mapped_csv;
};

/// Parsed and validated solve configuration. Violations raise ConfigError
/// with the offending field's dotted path.
struct SolveConfig {
  ConformalMap map = ConformalMap::identity();
  BoundaryDataSpec boundary;
  double tau = 0.0;
  double tol = 1e-9;
  int n_max = 64;
  GridConfig grid;
  std::uint64_t seed = 1;
  double alpha = 0.75;  ///< declared boundary-smoothness metadata (echoed)
  bool validate_against_exact = false;
  OutputConfig output;
};

SolveConfig parse_solve_config(const std::string& json_text);

/// Exit codes: 0 success, 1 configuration problems, 2 non-contractive
/// series, 3 map validation (univalence) failure.
int cmd_solve(const std::string& config_path, std::ostream& out,
              std::ostream& err);

/// Runs all invariant suites, prints one line per suite; 0 iff all pass.
int cmd_validate(std::ostream& out);

/// Times the three operators and a full run at each size (K_max = J/2);
/// writes `op,J,Kmax,seconds` CSV to csv_path, or to `out` when empty.
int cmd_bench(const std::vector<int>& sizes, const std::string& csv_path,
              std::ostream& out, std::ostream& err);

/// Prints JSON {roots, elliptic, strongly_elliptic, ...}. Inconclusive
/// classifications are reported in the JSON (exit 0); degenerate input
/// exits 1.
int cmd_classify(Cx a, Cx b, Cx c, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace ellip
