#pragma once

#include <functional>
#include <span>

#include "kstruve/double_double.hpp"
#include "kstruve/params.hpp"

namespace kstruve {

// ---------------------------------------------------------------------------
// Double-exponential quadrature on (0, 1)
// ---------------------------------------------------------------------------

struct QuadratureConfig {
  double target_rel_tol = 1e-11;
  int max_levels = 12;
  double abs_floor = 1e-300;

  /// Throws DomainError unless target_rel_tol is in (1e-15, 1e-2) and
  /// max_levels is in [4, 16].
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels_used = 0;
};

/// Integrand receiving both t and its complement 1 - t, the latter computed
/// without cancellation so that factors like (1 - t)^p stay accurate near t = 1.
using UnitIntegrand = std::function<double(double t, double one_minus_t)>;

/// tanh-sinh quadrature of f over (0, 1). Nodes are generated in closed form
/// for both t and 1 - t, so algebraic endpoint singularities with exponent
/// greater than -1 are integrated to full accuracy. The error estimate is the
/// difference of the last two refinement levels.
///
/// Throws QuadratureError if the estimate does not fall below
/// target_rel_tol * |value| + abs_floor within max_levels halvings, or if the
/// integrand produces a non-finite value.
QuadratureResult integrate_unit_interval(const UnitIntegrand& f, const QuadratureConfig& config = {});

/// Single-argument form. The integrand is only sampled where t and 1 - t are
/// both representable and nonzero in binary64; prefer the two-argument form
/// for integrands singular at t = 1.
QuadratureResult integrate_unit_interval(const std::function<double(double)>& f,
                                         const QuadratureConfig& config = {});

// ---------------------------------------------------------------------------
// Summation and differencing
// ---------------------------------------------------------------------------

/// Neumaier's variant of Kahan summation.
class CompensatedAccumulator {
 public:
  void add(double term) noexcept;
  double total() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> terms) noexcept;

/// Centered difference of order 1 (step eps^(1/3) * max(1, |x|)) or order 2
/// (step eps^(1/4) * max(1, |x|)).
double central_difference(const std::function<double(double)>& f, double x, int order);

// ---------------------------------------------------------------------------
// Extended-precision reference summation
// ---------------------------------------------------------------------------

struct OracleResult {
  DoubleDouble value;
  /// Geometric bound on the omitted tail; +inf when the ratio test has not
  /// yet dropped below one at the truncation index.
  double tail_bound = 0.0;
  int terms = 0;
};

/// Literal summation of the first `terms` terms of S^k_{nu,c}(x) in
/// double-double. Every term is built independently from double-double log-gamma
/// values (no term recurrence), so the result is a reference for the
/// production evaluator rather than a re-run of it.
///
/// Requires 1 <= terms <= 200 and the domain of `struve`.
OracleResult oracle_struve_sum(const StruveParams& params, double x, int terms);

/// Term r of the same series, built independently of the other terms.
/// Requires x > 0.
DoubleDouble oracle_struve_term(const StruveParams& params, double x, int r);

/// Double-double ln Gamma_k(y) = (y/k - 1) ln k + ln Gamma(y/k), y > 0.
DoubleDouble oracle_log_k_gamma(const DoubleDouble& y, double k);

}  // namespace kstruve
