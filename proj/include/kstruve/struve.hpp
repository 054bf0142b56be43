#pragma once

// Power-series evaluation of the k-Struve function
//
//   S^k_{nu,c}(x) = sum_r (-c)^r / (Gamma_k(rk + nu + 3k/2) Gamma(r + 3/2)) (x/2)^(2r + nu/k + 1)
//
// together with its modified (c = -1) and normalized variants and exact
// term-wise derivatives.
//
// Terms are generated by the ratio
//   T_{r+1} / T_r = -c (x/2)^2 / ((rk + nu + 3k/2)(r + 3/2))
// and accumulated in double-double, so alternating series with large
// intermediate terms (c > 0, large x) keep full binary64 accuracy.
//
// Stopping rule: after a term with |T_r| <= 1e-16 |sum| and ratio bound
// rho_r <= 1/2, two guard terms are added. The ratio bound decreases in r,
// so the omitted tail is at most |T_omit| / (1 - rho_omit) <= 2 |T_omit|,
// which is what abs_error_estimate reports.

#include "kstruve/params.hpp"

namespace kstruve {

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int terms_used = 1;
  /// Set when the term cap was reached before the stopping rule fired.
  bool truncation_warning = false;
};

struct TuranProbe {
  double nu = 0.0;
  double a = 0.0;
  double k = 1.0;

  /// Throws DomainError unless k > 0 and nu > |a| - 3k/2.
  void validate() const;
};

struct SeriesOptions {
  /// Term cap; defaults to KSTRUVE_MAX_TERMS from the environment, or 500.
  int max_terms = default_max_terms();

  static int default_max_terms();
};

/// (-c)^r / (Gamma_k(rk + nu + 3k/2) Gamma(r + 3/2)).
double struve_coefficient(int r, double nu, double k, double c);

/// S^k_{nu,c}(x) for x >= 0. At x = 0 the value is 0 when nu > -k and a
/// DomainError otherwise.
EvalResult struve(const StruveParams& params, double x, const SeriesOptions& options = {});

/// L^k_nu(x) = S^k_{nu,-1}(x).
EvalResult modified_struve(double nu, double k, double x, const SeriesOptions& options = {});

/// Normalized L^k_nu(x) = (2/x)^(nu/k) Gamma_k(nu + 3k/2) L^k_nu(x) = sum_r f_r x^(2r+1),
/// an odd entire function of x. Odd symmetry is exact: the value at -x is the
/// negated value at x.
EvalResult normalized_struve(double nu, double k, double x, const SeriesOptions& options = {});

/// d/dx of normalized_struve, sum_r f_r (2r+1) x^(2r).
EvalResult normalized_struve_derivative(double nu, double k, double x, const SeriesOptions& options = {});

/// f_r(nu, k) = Gamma_k(nu + 3k/2) / (Gamma_k(rk + nu + 3k/2) Gamma(r + 3/2) 2^(2r+1)).
double struve_coefficient_normalized(int r, double nu, double k);

/// dS/dx by term-wise differentiation, x > 0.
EvalResult struve_derivative(const StruveParams& params, double x, const SeriesOptions& options = {});

/// d^2S/dx^2 by term-wise differentiation, x > 0.
EvalResult struve_second_derivative(const StruveParams& params, double x, const SeriesOptions& options = {});

}  // namespace kstruve
