#include "sidkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sidkit/divisibility.hpp"
#include "sidkit/dpcp.hpp"
#include "sidkit/error.hpp"
#include "sidkit/io.hpp"
#include "sidkit/ipcp.hpp"
#include "sidkit/parallel.hpp"
#include "sidkit/special.hpp"

namespace sidkit::cli {

namespace {

using io::json;

const std::vector<std::string> kCommands{"analyze", "reconstruct", "root",     "jorgensen",   "threshold",
                                         "fourier", "classify",    "mittag",   "fracpoisson", "mixpoisson"};

bool needs_input(const std::string& name) { return name != "mittag" && name != "fracpoisson"; }

json read_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw errors::validation("IOError", "cannot open input file " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw errors::validation("ParseError", e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw errors::validation("IOError", "cannot open output file " + path);
  out << text;
  if (!out) throw errors::validation("IOError", "failed writing " + path);
}

void validate(const Command& cmd) {
  const Options& o = cmd.options;
  auto bad = [](const std::string& msg) { throw errors::validation("InvalidArgument", msg); };
  if (std::find(kCommands.begin(), kCommands.end(), cmd.name) == kCommands.end()) bad("unknown command " + cmd.name);
  if (o.order < 1) bad("--order must be >= 1");
  if (o.grid < 2 || (o.grid & (o.grid - 1)) != 0) bad("--grid must be a power of two");
  if (o.horizon < 1) bad("--horizon must be >= 1");
  if (o.threads < 1) bad("--threads must be >= 1");
  if (o.mode != "raw" && o.mode != "factored") bad("--mode must be raw or factored");
  if (o.method != "recursive" && o.method != "explicit") bad("--method must be recursive or explicit");
  if (o.family != "dpcp" && o.family != "ipcp" && o.family != "both") bad("--family must be dpcp, ipcp or both");
  if (cmd.name == "root" && o.n < 1) bad("--n must be >= 1");
  if (cmd.name == "jorgensen") {
    if (o.rgrid.empty()) bad("--rgrid must not be empty");
    for (double r : o.rgrid) {
      if (!(r > 0.0)) bad("--rgrid entries must be positive");
    }
  }
  for (double l : o.lambda_grid) {
    if (!(l > 0.0)) bad("--lambda-grid entries must be positive");
  }
}

std::vector<double> default_lambda_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(0.05 * i);
  return grid;
}

struct Artifact {
  std::string text;
};

Artifact emit(const json& j) { return {j.dump(2) + "\n"}; }

Artifact emit_pmf(const SignedSeq& s, bool csv) { return csv ? Artifact{io::to_csv(s)} : emit(io::to_json(s)); }

Artifact dispatch(const Command& cmd) {
  const Options& o = cmd.options;
  const json input = needs_input(cmd.name) ? read_input(cmd.input_path) : json();

  if (cmd.name == "analyze") {
    const auto params = extract_dpcp_params(io::signed_seq_from_json(input), o.order);
    return emit(io::to_json(params));
  }
  if (cmd.name == "reconstruct") {
    const auto params = io::dpcp_params_from_json(input);
    const int n_max = o.n_max >= 0 ? o.n_max : static_cast<int>(params.alpha.order());
    const auto pmf = o.method == "explicit" ? pmf_from_params_explicit(params, n_max)
                                            : pmf_from_params_recursive(params, n_max);
    return emit_pmf(pmf, o.csv);
  }
  if (cmd.name == "root") {
    return emit_pmf(nth_root_pmf(io::signed_seq_from_json(input), o.n, o.order), o.csv);
  }
  if (cmd.name == "jorgensen") {
    return emit(io::to_json(jorgensen_probe(io::signed_seq_from_json(input), o.rgrid, o.horizon)));
  }
  if (cmd.name == "threshold") {
    const SignedSeq alpha =
        input.contains("alpha") ? io::signed_seq_from_json(input.at("alpha")) : io::signed_seq_from_json(input);
    const auto grid = o.lambda_grid.empty() ? default_lambda_grid() : o.lambda_grid;
    return emit(io::to_json(min_lambda_threshold(alpha, grid, o.horizon)));
  }
  if (cmd.name == "fourier") {
    const auto grid = charfn_grid(io::signed_seq_from_json(input), o.grid);
    const auto branch = o.mode == "raw" ? LogBranch::Raw : LogBranch::Factored;
    if (!o.params_out.empty()) {
      json params = io::to_json(extract_ipcp_params(grid));
      params["reconstruction_error"] = reconstruction_error(grid, io::ipcp_params_from_json(params));
      write_file(o.params_out, params.dump(2) + "\n");
    }
    return {io::to_csv(log_fourier_coefficients(grid, branch, o.max_index))};
  }
  if (cmd.name == "classify") {
    const auto pmf = io::signed_seq_from_json(input);
    json out = json::object();
    if (o.family != "ipcp") out["dpcp"] = io::to_json(classify_dpcp(pmf));
    if (o.family != "dpcp") out["ipcp"] = io::to_json(classify_ipcp(pmf, o.grid));
    return emit(out);
  }
  if (cmd.name == "mittag") {
    return emit(io::to_json(mittag_leffler(MLQuery(o.nu, o.x))));
  }
  if (cmd.name == "fracpoisson") {
    return emit_pmf(fractional_poisson_pmf(o.lambda, o.t, o.nu, o.n_max >= 0 ? o.n_max : 20), o.csv);
  }
  // mixpoisson
  return emit_pmf(mixed_poisson_pmf(io::mixing_law_from_json(input), o.n_max >= 0 ? o.n_max : 20), o.csv);
}

int report_error(std::ostream& out, const std::string& name, const std::string& message, int status) {
  out << json{{"error", {{"name", name}, {"message", message}}}}.dump(2) << "\n";
  return status;
}

void add_shared_options(CLI::App* sub, Command& cmd) {
  Options& o = cmd.options;
  sub->add_option("-i,--input", cmd.input_path, "input JSON file (default stdin)");
  sub->add_option("-o,--output", cmd.output_path, "output file (default stdout)");
  sub->add_option("--order", o.order, "series truncation order")->envname("SIDKIT_ORDER");
  sub->add_option("--grid", o.grid, "Fourier grid size M")->envname("SIDKIT_GRID");
  sub->add_option("--horizon", o.horizon, "admissibility horizon")->envname("SIDKIT_HORIZON");
  sub->add_option("--threads", o.threads, "worker threads")->envname("SIDKIT_THREADS");
}

}  // namespace

int run(const Command& cmd, std::ostream& out) {
  try {
    validate(cmd);
    set_threads(cmd.options.threads);
    const Artifact artifact = dispatch(cmd);
    if (cmd.output_path.empty()) {
      out << artifact.text;
    } else {
      write_file(cmd.output_path, artifact.text);
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(out, e.name(), e.what(),
                        e.kind() == ErrorKind::Validation ? kExitValidation : kExitNumerical);
  } catch (const json::exception& e) {
    return report_error(out, "SchemaError", e.what(), kExitValidation);
  } catch (const std::exception& e) {
    return report_error(out, "InternalError", e.what(), kExitNumerical);
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"signed discrete infinitely divisible toolkit"};
  app.require_subcommand(1);
  Command cmd;
  Options& o = cmd.options;

  auto* analyze = app.add_subcommand("analyze", "p.m.f. -> DPCP parameters");
  auto* reconstruct = app.add_subcommand("reconstruct", "DPCP parameters -> p.m.f.");
  reconstruct->add_option("--nmax", o.n_max, "largest n (default: alpha order)");
  reconstruct->add_option("--method", o.method, "recursive|explicit");
  reconstruct->add_flag("--csv", o.csv, "write n,p_n CSV");
  auto* root = app.add_subcommand("root", "signed n-th convolution root");
  root->add_option("--n", o.n, "root index")->required();
  root->add_flag("--csv", o.csv, "write n,p_n CSV");
  auto* jorgensen = app.add_subcommand("jorgensen", "probe r-fold convolution powers");
  jorgensen->add_option("--rgrid", o.rgrid, "comma separated r values")->delimiter(',')->envname("SIDKIT_RGRID");
  auto* threshold = app.add_subcommand("threshold", "smallest admissible lambda for a signed jump law");
  threshold->add_option("--lambda-grid", o.lambda_grid, "comma separated lambda values")->delimiter(',');
  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients of log phi as CSV");
  fourier->add_option("--mode", o.mode, "raw|factored")->envname("SIDKIT_MODE");
  fourier->add_option("--max-index", o.max_index, "largest |n| (default M/4)");
  fourier->add_option("--params-out", o.params_out, "also write IPCP parameters JSON here");
  auto* classify = app.add_subcommand("classify", "DPCP / IPCP zero-detection verdicts");
  classify->add_option("--family", o.family, "dpcp|ipcp|both");
  auto* mittag = app.add_subcommand("mittag", "Mittag-Leffler E_nu(x)");
  mittag->add_option("--nu", o.nu)->required();
  mittag->add_option("--x", o.x)->required();
  auto* frac = app.add_subcommand("fracpoisson", "fractional Poisson p.m.f.");
  frac->add_option("--lambda", o.lambda)->required();
  frac->add_option("--t", o.t)->required();
  frac->add_option("--nu", o.nu)->required();
  frac->add_option("--nmax", o.n_max);
  frac->add_flag("--csv", o.csv, "write n,p_n CSV");
  auto* mix = app.add_subcommand("mixpoisson", "mixed Poisson p.m.f.");
  mix->add_option("--nmax", o.n_max);
  mix->add_flag("--csv", o.csv, "write n,p_n CSV");

  for (auto* sub : {analyze, reconstruct, root, jorgensen, threshold, fourier, classify, mittag, frac, mix}) {
    add_shared_options(sub, cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(out, "UsageError", e.what(), kExitValidation);
  }
  cmd.name = app.get_subcommands().front()->get_name();
  return run(cmd, out);
}

}  // namespace sidkit::cli
