#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sidkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct Options {
  int order = 64;
  int grid = 1024;
  int horizon = 200;
  std::vector<double> rgrid{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
  std::string mode = "factored";
  int threads = 1;

  int n = 2;                     // root
  int n_max = -1;                // reconstruct, fracpoisson, mixpoisson
  std::string method = "recursive";  // reconstruct
  bool csv = false;              // p.m.f. tables as CSV
  std::vector<double> lambda_grid;   // threshold
  std::string family = "both";   // classify
  int max_index = -1;            // fourier
  std::string params_out;        // fourier: factored IPCP parameters
  double nu = 1.0;
  double x = 0.0;
  double lambda = 1.0;
  double t = 1.0;
};

/// One of analyze, reconstruct, root, jorgensen, threshold, fourier,
/// classify, mittag, fracpoisson, mixpoisson.
struct Command {
  std::string name;
  std::string input_path;
  std::string output_path;
  Options options;
};

/// Runs one command. Output goes to `output_path` when set, otherwise to
/// `out`. Errors are written to `out` as {"error": {"name", "message"}} and
/// mapped to exit status 2 (validation) or 3 (numerical).
int run(const Command& cmd, std::ostream& out);

/// Parses argv (SIDKIT_* environment variables override defaults) and runs.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sidkit::cli
