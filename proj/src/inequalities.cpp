#include "kstruve/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kstruve/errors.hpp"
#include "kstruve/special_functions.hpp"

namespace kstruve {

namespace {

double normalized(double nu, double k, double x) { return normalized_struve(nu, k, x).value; }

std::vector<double> sorted_copy(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_sorted_positive(std::span<const double> xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool ok = xs[i] > 0.0 && std::isfinite(xs[i]) && (i == 0 || xs[i] > xs[i - 1]);
    if (!ok) throw DomainError(std::string(what) + " requires strictly increasing positive x values");
  }
}

void require_order(double nu, double k, const char* what) {
  require_positive_k(k);
  if (!(nu > -1.5 * k) || !std::isfinite(nu)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " requires nu > -3k/2 (nu=" << nu << ", k=" << k << ")";
    throw DomainError(msg.str());
  }
}

double relative_excess(double excess, double scale) { return scale == 0.0 ? 0.0 : excess / scale; }

}  // namespace

void GridSpec::validate() const {
  for (const double k : k_values) {
    require_positive_k(k);
    for (const double nu : nu_values) require_order(nu, k, "GridSpec");
  }
  for (const auto* list : {&x_values, &a_values}) {
    for (const double v : *list) {
      if (!std::isfinite(v)) throw DomainError("GridSpec entries must be finite");
    }
  }
  for (const double a : alpha_convexity) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("GridSpec convexity weights must lie in [0, 1]");
  }
}

RatioSequence::RatioSequence(std::vector<double> numerator_coeffs, std::vector<double> denominator_coeffs)
    : numerator_(std::move(numerator_coeffs)), denominator_(std::move(denominator_coeffs)) {
  if (numerator_.size() != denominator_.size()) throw DomainError("ratio sequence lengths differ");
  for (const double b : denominator_) {
    if (!(b > 0.0)) throw DomainError("ratio sequence denominators must be strictly positive");
  }
}

Direction classify_sequence(std::span<const double> values, double tie_tol) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double step = values[i] - values[i - 1];
    const double scale = std::max(std::abs(values[i]), std::abs(values[i - 1]));
    if (std::abs(step) <= tie_tol * scale) continue;
    (step > 0.0 ? up : down) = true;
  }
  if (up && down) return Direction::Mixed;
  if (up) return Direction::Increasing;
  if (down) return Direction::Decreasing;
  return Direction::Constant;
}

Direction coefficient_ratio_direction(const RatioSequence& seq) {
  if (seq.length() < 2) throw DomainError("ratio sequence needs at least two terms");
  std::vector<double> ratios(seq.length());
  for (std::size_t r = 0; r < seq.length(); ++r) ratios[r] = seq.numerator()[r] / seq.denominator()[r];
  return classify_sequence(ratios);
}

VerificationReport ratio_monotonicity_check(double mu, double nu, double k, std::span<const double> x_values,
                                            double slack) {
  require_order(mu, k, "ratio_monotonicity_check");
  require_order(nu, k, "ratio_monotonicity_check");
  require_sorted_positive(x_values, "ratio_monotonicity_check");

  std::vector<double> ratios;
  ratios.reserve(x_values.size());
  for (const double x : x_values) {
    const double denominator = normalized(nu, k, x);
    if (!(denominator > 0.0)) throw Error("normalized function vanished at a positive argument");
    ratios.push_back(normalized(mu, k, x) / denominator);
  }

  ReportBuilder builder("ratio_monotonicity", slack);
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    builder.record({{"mu", mu}, {"nu", nu}, {"k", k}, {"x_lo", x_values[i - 1]}, {"x_hi", x_values[i]}},
                   relative_excess(ratios[i - 1] - ratios[i], std::abs(ratios[i - 1])));
  }
  VerificationReport report = std::move(builder).finish();
  report.direction = classify_sequence(ratios);
  return report;
}

VerificationReport parameter_monotonicity_check(const GridSpec& grid, double slack) {
  grid.validate();
  const std::vector<double> nus = sorted_copy(grid.nu_values);
  ReportBuilder builder("parameter_monotonicity", slack);
  for (const double k : grid.k_values) {
    for (const double x : grid.x_values) {
      for (std::size_t i = 1; i < nus.size(); ++i) {
        const double lower = normalized(nus[i - 1], k, x);
        const double upper = normalized(nus[i], k, x);
        const double excess = x >= 0.0 ? upper - lower : lower - upper;
        builder.record({{"k", k}, {"x", x}, {"nu1", nus[i - 1]}, {"nu2", nus[i]}},
                       relative_excess(excess, std::max(std::abs(lower), std::abs(upper))));
      }
    }
  }
  return std::move(builder).finish();
}

VerificationReport log_convexity_check(const GridSpec& grid, double slack) {
  grid.validate();
  for (const double x : grid.x_values) {
    if (!(x > 0.0)) throw DomainError("log_convexity_check requires x > 0");
  }
  const std::vector<double> nus = sorted_copy(grid.nu_values);
  ReportBuilder builder("log_convexity", slack);
  for (const double k : grid.k_values) {
    for (const double x : grid.x_values) {
      for (std::size_t i = 0; i < nus.size(); ++i) {
        for (std::size_t j = i + 1; j < nus.size(); ++j) {
          const double first = normalized(nus[i], k, x);
          const double second = normalized(nus[j], k, x);
          for (const double alpha : grid.alpha_convexity) {
            const double mid = normalized(alpha * nus[i] + (1.0 - alpha) * nus[j], k, x);
            const double geometric = std::pow(first, alpha) * std::pow(second, 1.0 - alpha);
            builder.record({{"k", k}, {"x", x}, {"nu1", nus[i]}, {"nu2", nus[j]}, {"alpha", alpha}},
                           relative_excess(mid - geometric, geometric));
          }
        }
      }
    }
  }
  return std::move(builder).finish();
}

namespace {

void record_turan(ReportBuilder& builder, const TuranProbe& probe, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("turan_check requires x > 0");
  const double centre = normalized(probe.nu, probe.k, x);
  const double below = normalized(probe.nu - probe.a, probe.k, x);
  const double above = normalized(probe.nu + probe.a, probe.k, x);
  const double square = centre * centre;
  const double product = below * above;
  builder.record({{"nu", probe.nu}, {"a", probe.a}, {"k", probe.k}, {"x", x}},
                 relative_excess(square - product, square));
}

}  // namespace

VerificationReport turan_check(const TuranProbe& probe, std::span<const double> x_values, double slack) {
  probe.validate();
  ReportBuilder builder("turan", slack);
  for (const double x : x_values) record_turan(builder, probe, x);
  return std::move(builder).finish();
}

VerificationReport turan_grid_check(const GridSpec& grid, double slack) {
  grid.validate();
  ReportBuilder builder("turan", slack);
  for (const double k : grid.k_values) {
    for (const double nu : grid.nu_values) {
      for (const double a : grid.a_values) {
        const TuranProbe probe{nu, a, k};
        if (!(nu > std::abs(a) - 1.5 * k)) continue;
        for (const double x : grid.x_values) record_turan(builder, probe, x);
      }
    }
  }
  return std::move(builder).finish();
}

VerificationReport nu_ratio_decreasing_check(double k, std::span<const double> nu_values, double x, double slack) {
  require_positive_k(k);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("nu_ratio_decreasing_check requires x > 0");
  const std::vector<double> nus = sorted_copy(nu_values);
  std::vector<double> ratios;
  for (const double nu : nus) {
    require_order(nu, k, "nu_ratio_decreasing_check");
    ratios.push_back(modified_struve(nu + k, k, x).value / modified_struve(nu, k, x).value);
  }
  ReportBuilder builder("nu_ratio_decreasing", slack);
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    builder.record({{"k", k}, {"x", x}, {"nu1", nus[i - 1]}, {"nu2", nus[i]}},
                   relative_excess(ratios[i] - ratios[i - 1], std::abs(ratios[i - 1])));
  }
  VerificationReport report = std::move(builder).finish();
  report.direction = classify_sequence(ratios);
  return report;
}

VerificationReport derivative_positivity_check(double mu, double nu, double k, std::span<const double> x_values,
                                               double slack) {
  require_order(mu, k, "derivative_positivity_check");
  require_order(nu, k, "derivative_positivity_check");
  ReportBuilder builder("derivative_positivity", slack);
  for (const double x : x_values) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("derivative_positivity_check requires x > 0");
    // With A = x^(-mu/k) L_mu: A' = x^(-mu/k) (L_mu' - mu/(k x) L_mu). The
    // common factor x^(-(mu+nu)/k) > 0 is dropped from both sides.
    const StruveParams pm{mu, k, -1.0};
    const StruveParams pn{nu, k, -1.0};
    const double lm = struve(pm, x).value;
    const double ln = struve(pn, x).value;
    const double dm = struve_derivative(pm, x).value - mu / (k * x) * lm;
    const double dn = struve_derivative(pn, x).value - nu / (k * x) * ln;
    const double first = dm * ln;
    const double second = lm * dn;
    builder.record({{"mu", mu}, {"nu", nu}, {"k", k}, {"x", x}},
                   relative_excess(second - first, std::abs(first) + std::abs(second)));
  }
  return std::move(builder).finish();
}

VerificationReport digamma_difference_check(double k, std::span<const double> nu_values, int r_max, double slack) {
  require_positive_k(k);
  ReportBuilder builder("digamma_difference", slack);
  for (const double nu : nu_values) {
    require_order(nu, k, "digamma_difference_check");
    const double base = k_digamma(nu + 1.5 * k, k);
    for (int r = 0; r <= r_max; ++r) {
      const double shifted = k_digamma(r * k + nu + 1.5 * k, k);
      builder.record({{"k", k}, {"nu", nu}, {"r", static_cast<double>(r)}},
                     relative_excess(base - shifted, std::abs(base) + std::abs(shifted)));
    }
  }
  return std::move(builder).finish();
}

}  // namespace kstruve
