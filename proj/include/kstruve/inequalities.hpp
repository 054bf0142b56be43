#pragma once

// Grid certification of the monotonicity, log-convexity and Turan-type
// properties of the normalized modified k-Struve function.
//
// All inequalities are checked non-strictly, up to a multiplicative slack
// (default 1e-12). Monotonicity in a continuous variable is certified only on
// the finite, sorted sample supplied by the caller.

#include <span>
#include <vector>

#include "kstruve/report.hpp"
#include "kstruve/struve.hpp"

namespace kstruve {

inline constexpr double kDefaultSlack = 1e-12;

struct GridSpec {
  std::vector<double> nu_values;
  std::vector<double> k_values;
  std::vector<double> x_values;
  std::vector<double> a_values;
  std::vector<double> alpha_convexity;

  /// Throws DomainError if some (nu, k) has nu <= -3k/2, some alpha is
  /// outside [0, 1], or any entry is not finite. Turan triples violating
  /// nu > |a| - 3k/2 are skipped by turan checks rather than rejected here.
  void validate() const;
};

/// Coefficient pairs (a_r, b_r) of two power series, b_r > 0.
class RatioSequence {
 public:
  RatioSequence(std::vector<double> numerator_coeffs, std::vector<double> denominator_coeffs);

  std::span<const double> numerator() const { return numerator_; }
  std::span<const double> denominator() const { return denominator_; }
  std::size_t length() const { return numerator_.size(); }

 private:
  std::vector<double> numerator_;
  std::vector<double> denominator_;
};

/// Classifies a sequence of values; consecutive values within `tie_tol`
/// relative of each other count as ties. Constant if every step is a tie.
Direction classify_sequence(std::span<const double> values, double tie_tol = 1e-14);

/// Monotonicity of a_r / b_r; by the ratio lemma this is also the
/// monotonicity of x -> f(x)/g(x) on (0, R).
Direction coefficient_ratio_direction(const RatioSequence& seq);

/// x -> L_mu(x)/L_nu(x) nondecreasing over the sorted positive sample,
/// with nu >= mu > -3k/2 (L is the normalized modified function). The
/// report's direction flag classifies the observed ratio sequence.
VerificationReport ratio_monotonicity_check(double mu, double nu, double k, std::span<const double> x_values,
                                            double slack = kDefaultSlack);

/// nu -> L_nu(x) nonincreasing for x >= 0 and nondecreasing for x < 0.
VerificationReport parameter_monotonicity_check(const GridSpec& grid, double slack = kDefaultSlack);

/// L_{a nu1 + (1-a) nu2}(x) <= L_{nu1}(x)^a L_{nu2}(x)^(1-a) over all
/// ordered nu pairs of the grid, every alpha in alpha_convexity and x > 0.
VerificationReport log_convexity_check(const GridSpec& grid, double slack = kDefaultSlack);

/// Delta = L_nu(x)^2 - L_{nu-a}(x) L_{nu+a}(x) <= slack * L_nu(x)^2.
VerificationReport turan_check(const TuranProbe& probe, std::span<const double> x_values,
                               double slack = kDefaultSlack);

/// turan_check over every admissible (nu, a, k) triple of the grid.
VerificationReport turan_grid_check(const GridSpec& grid, double slack = kDefaultSlack);

/// nu -> L^k_{nu+k}(x)/L^k_nu(x) (modified, unnormalized) nonincreasing over
/// the sorted nu sample.
VerificationReport nu_ratio_decreasing_check(double k, std::span<const double> nu_values, double x,
                                             double slack = kDefaultSlack);

/// (x^(-mu/k) L_mu)' (x^(-nu/k) L_nu) - (x^(-mu/k) L_mu)(x^(-nu/k) L_nu)' >= -slack * scale
/// for nu >= mu, with derivatives from term-wise differentiation.
VerificationReport derivative_positivity_check(double mu, double nu, double k, std::span<const double> x_values,
                                               double slack = 1e-10);

/// Psi_k(nu + 3k/2) - Psi_k(rk + nu + 3k/2) <= 0 for r = 0..r_max.
VerificationReport digamma_difference_check(double k, std::span<const double> nu_values, int r_max = 10,
                                             double slack = kDefaultSlack);

}  // namespace kstruve
