#pragma once

// Named verification suites over compiled-in default grids. Each suite runs a
// fixed list of checks and reports per-check worst margins and witnesses.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kstruve/report.hpp"
#include "kstruve/sweep.hpp"

namespace kstruve {

struct SuiteOptions {
  /// Replaces the pass threshold of every check in the suite.
  std::optional<double> tol_override;
  /// Use the constants as originally printed for the integral
  /// representations, closed forms and beta decomposition.
  bool paper_literal = false;
  Execution execution = Execution::Parallel;
};

struct SuiteReport {
  std::string suite;
  std::vector<VerificationReport> checks;
  bool passed = true;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

bool is_known_suite(const std::string& name);

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown name before any computation.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// {suite, checks: [{name, points, worst_margin, witness, passed}], passed}
nlohmann::ordered_json to_json(const SuiteReport& report);

/// The compiled-in sample grids, as printed by `verify --show-grid`.
nlohmann::ordered_json default_grids_json();

/// Literal k-digamma series
///   (ln k - gamma)/k - 1/t + sum_{n=1}^{N} t/(nk(nk + t))
/// with a midpoint-integral estimate of the omitted tail. Independent of
/// k_digamma and used as its oracle.
double k_digamma_literal_series(double t, double k, long long terms = 1000000);

}  // namespace kstruve
