// kstruve: evaluate k-Struve functions, write CSV tables, run verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad arguments or domain
// violation, 3 numerical failure, 4 output file not writable.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kstruve/errors.hpp"
#include "kstruve/struve.hpp"
#include "kstruve/sweep.hpp"
#include "kstruve/verification.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3, kUnwritable = 4 };

constexpr long long kMaxTableRows = 10'000'000;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct OutputRecord {
  double x;
  kstruve::EvalResult result;
};

const char* kCsvHeader = "x,value,err_estimate,terms\n";

std::string csv_row(const OutputRecord& r) {
  return fmt17(r.x) + "," + fmt17(r.result.value) + "," + fmt17(r.result.abs_error_estimate) + "," +
         std::to_string(r.result.terms_used) + "\n";
}

// Hand-formatted so the numbers match the CSV text exactly.
std::string json_record(const OutputRecord& r) {
  return "{\"x\":" + fmt17(r.x) + ",\"value\":" + fmt17(r.result.value) +
         ",\"err_estimate\":" + fmt17(r.result.abs_error_estimate) + ",\"terms\":" + std::to_string(r.result.terms_used) +
         "}\n";
}

kstruve::Variant parse_variant(const std::string& name) {
  if (name == "struve") return kstruve::Variant::Struve;
  if (name == "modified") return kstruve::Variant::Modified;
  return kstruve::Variant::Normalized;
}

struct FunctionArgs {
  double nu = 0.0;
  double k = 1.0;
  std::optional<double> c;
  std::string variant = "struve";

  kstruve::StruveParams params() const {
    if (variant == "struve" && !c) throw kstruve::DomainError("--c is required for the struve variant");
    return {nu, k, c.value_or(-1.0)};
  }
};

void add_function_options(CLI::App* cmd, FunctionArgs& args) {
  cmd->add_option("--nu", args.nu, "Order nu (nu > -3k/2)")->required();
  cmd->add_option("--k", args.k, "Deformation parameter k > 0")->required();
  cmd->add_option("--c", args.c, "Series constant c (struve variant)");
  cmd->add_option("--variant", args.variant, "struve | modified | normalized")
      ->check(CLI::IsMember({"struve", "modified", "normalized"}));
}

void warn_truncation(const std::vector<kstruve::EvalResult>& results) {
  for (const auto& r : results) {
    if (r.truncation_warning) {
      std::cerr << "warning: series term cap reached; raise KSTRUVE_MAX_TERMS\n";
      return;
    }
  }
}

int cmd_eval(const FunctionArgs& args, double x, bool as_json) {
  const std::vector<double> xs{x};
  const auto results = kstruve::evaluate_grid(parse_variant(args.variant), args.params(), xs);
  warn_truncation(results);
  const OutputRecord record{x, results.front()};
  std::cout << (as_json ? json_record(record) : kCsvHeader + csv_row(record));
  return kOk;
}

int cmd_table(const FunctionArgs& args, double start, double end, double step, const std::string& out_path) {
  if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step)) {
    throw kstruve::DomainError("table bounds must be finite");
  }
  if (!(step > 0.0)) throw kstruve::DomainError("--x-step must be positive");
  if (start > end) throw kstruve::DomainError("--x-start must not exceed --x-end");
  // Small allowance so that e.g. 0..1 step 0.1 includes 1.
  const double span = (end - start) / step;
  if (span + 1.0 > static_cast<double>(kMaxTableRows)) throw kstruve::DomainError("table has too many rows");
  const auto rows = static_cast<long long>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;

  std::vector<double> xs(static_cast<std::size_t>(rows));
  for (long long i = 0; i < rows; ++i) xs[static_cast<std::size_t>(i)] = std::min(end, start + static_cast<double>(i) * step);
  const auto results = kstruve::evaluate_grid(parse_variant(args.variant), args.params(), xs);
  warn_truncation(results);

  std::string text = kCsvHeader;
  for (std::size_t i = 0; i < xs.size(); ++i) text += csv_row({xs[i], results[i]});

  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kUnwritable;
  }
  file << text;
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kUnwritable;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const kstruve::SuiteOptions& options, bool show_grid,
               const std::string& out_path) {
  if (show_grid) {
    std::cout << kstruve::default_grids_json().dump(2) << "\n";
    if (suite.empty()) return kOk;
  }
  if (suite.empty()) throw kstruve::DomainError("--suite is required");
  if (!kstruve::is_known_suite(suite)) throw kstruve::DomainError("unknown suite '" + suite + "'");

  const kstruve::SuiteReport report = kstruve::run_suite(suite, options);
  for (const auto& check : report.checks) {
    std::fprintf(stderr, "%-40s %s  points=%d  worst_margin=%.3e\n", check.check_name.c_str(),
                 check.passed ? "PASS" : "FAIL", check.points_tested, check.worst_margin);
    for (const auto& message : check.errors) std::cerr << "  error: " << message << "\n";
  }
  const std::string text = kstruve::to_json(report).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kUnwritable;
    }
  }
  return report.passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Struve function evaluation and verification"};
  app.require_subcommand(1);

  FunctionArgs eval_args;
  double eval_x = 0.0;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate one point");
  add_function_options(eval, eval_args);
  eval->add_option("--x", eval_x, "Argument x")->required();
  eval->add_flag("--json", eval_json, "Print a JSON record instead of CSV");

  FunctionArgs table_args;
  double x_start = 0.0;
  double x_end = 0.0;
  double x_step = 0.0;
  std::string table_out;
  auto* table = app.add_subcommand("table", "Write a CSV table over an x grid");
  add_function_options(table, table_args);
  table->add_option("--x-start", x_start)->required();
  table->add_option("--x-end", x_end)->required();
  table->add_option("--x-step", x_step)->required();
  table->add_option("--out", table_out, "Output CSV path (default: standard output)");

  std::string suite;
  std::optional<double> tol;
  bool paper_literal = false;
  bool show_grid = false;
  bool serial = false;
  int threads = 0;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "gamma|struve|recurrence|ode|integral|closedform|turan|monotonicity|logconvexity|all");
  verify->add_option("--tol", tol, "Override every check's threshold");
  verify->add_flag("--paper-literal", paper_literal, "Use the constants as originally printed");
  verify->add_flag("--show-grid", show_grid, "Print the compiled-in grids");
  verify->add_option("--out", verify_out, "Write the JSON report to a file");
  verify->add_option("--threads", threads, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--serial", serial, "Run sweeps on the calling thread only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args, eval_x, eval_json);
    if (*table) return cmd_table(table_args, x_start, x_end, x_step, table_out);
    kstruve::set_sweep_threads(threads);
    kstruve::SuiteOptions options;
    options.tol_override = tol;
    options.paper_literal = paper_literal;
    options.execution = serial ? kstruve::Execution::Serial : kstruve::Execution::Parallel;
    return cmd_verify(suite, options, show_grid, verify_out);
  } catch (const kstruve::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}
