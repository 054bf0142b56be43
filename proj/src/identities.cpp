#include "kstruve/identities.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include "kstruve/errors.hpp"
#include "kstruve/special_functions.hpp"
#include "kstruve/struve.hpp"

namespace kstruve {

namespace {

constexpr double kScaleFloor = 1e-300;

ResidualReport make_report(std::initializer_list<double> lhs, std::initializer_list<double> rhs, Coordinates point) {
  CompensatedAccumulator residual;
  double lhs_abs = 0.0;
  double rhs_abs = 0.0;
  for (const double v : lhs) {
    residual.add(v);
    lhs_abs += std::abs(v);
  }
  for (const double v : rhs) {
    residual.add(-v);
    rhs_abs += std::abs(v);
  }
  ResidualReport report;
  report.residual = residual.total();
  report.scale = std::max(lhs_abs, rhs_abs);
  report.relative_residual = std::abs(report.residual) / std::max(report.scale, kScaleFloor);
  report.point = std::move(point);
  return report;
}

Coordinates point_of(const StruveParams& p, double x) {
  return {{"nu", p.nu}, {"k", p.k}, {"c", p.c}, {"x", x}};
}

void require_shifted_domain(const StruveParams& p, double x, const char* what) {
  p.validate();
  if (!(p.nu > -0.5 * p.k)) {
    throw DomainError(std::string(what) + " requires nu > -k/2 (" + describe(p) + ")");
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << what << " requires finite x > 0 (got x=" << x << ")";
    throw DomainError(msg.str());
  }
}

double value_of(const StruveParams& p, double x) { return struve(p, x).value; }

StruveParams lowered(const StruveParams& p) { return {p.nu - p.k, p.k, p.c}; }
StruveParams raised(const StruveParams& p) { return {p.nu + p.k, p.k, p.c}; }

// (x/2)^(nu/k) / (sqrt(pi) Gamma_k(nu + 3k/2)), the inhomogeneous term of rec3 and rec4.
double boundary_term(const StruveParams& p, double x) {
  return std::pow(0.5 * x, p.nu / p.k) / (MathConstants::sqrt_pi * k_gamma(p.nu + 1.5 * p.k, p.k));
}

}  // namespace

ResidualReport ode_residual(const StruveParams& params, double x) {
  require_shifted_domain(params, x, "ode_residual");
  const double k = params.k;
  const double y = value_of(params, x);
  const double dy = struve_derivative(params, x).value;
  const double d2y = struve_second_derivative(params, x).value;
  const double forcing = 4.0 * std::pow(0.5 * x, params.nu / k + 1.0) /
                         (k * k_gamma(params.nu + 0.5 * k, k) * MathConstants::sqrt_pi);
  return make_report({x * x * d2y, x * dy, params.c * x * x / k * y, -(params.nu * params.nu) / (k * k) * y},
                     {forcing}, point_of(params, x));
}

ResidualReport rec1_residual(const StruveParams& params, double x) {
  require_shifted_domain(params, x, "rec1_residual");
  const double ratio = params.nu / params.k;
  const double scale = std::pow(x, ratio);
  const double y = value_of(params, x);
  const double dy = struve_derivative(params, x).value;
  return make_report({ratio * scale / x * y, scale * dy}, {scale / params.k * value_of(lowered(params), x)},
                     point_of(params, x));
}

ResidualReport rec2_residual(const StruveParams& params, double x) {
  require_shifted_domain(params, x, "rec2_residual");
  const double ratio = params.nu / params.k;
  const double scale = std::pow(x, -ratio);
  const double y = value_of(params, x);
  const double dy = struve_derivative(params, x).value;
  const double constant =
      std::pow(2.0, -ratio) / (MathConstants::sqrt_pi * k_gamma(params.nu + 1.5 * params.k, params.k));
  return make_report({-ratio * scale / x * y, scale * dy},
                     {constant, -params.c * scale * value_of(raised(params), x)}, point_of(params, x));
}

ResidualReport rec3_residual(const StruveParams& params, double x) {
  require_shifted_domain(params, x, "rec3_residual");
  const double lower = value_of(lowered(params), x);
  const double upper = value_of(raised(params), x);
  const double dy = struve_derivative(params, x).value;
  return make_report({lower / params.k, -params.c * upper}, {2.0 * dy, -boundary_term(params, x)},
                     point_of(params, x));
}

ResidualReport rec4_residual(const StruveParams& params, double x) {
  require_shifted_domain(params, x, "rec4_residual");
  const double lower = value_of(lowered(params), x);
  const double upper = value_of(raised(params), x);
  const double y = value_of(params, x);
  return make_report({lower / params.k, params.c * upper},
                     {2.0 * params.nu / (x * params.k) * y, boundary_term(params, x)}, point_of(params, x));
}

ResidualReport rec1_expanded_residual(const StruveParams& params, double x) {
  require_shifted_domain(params, x, "rec1_expanded_residual");
  const double y = value_of(params, x);
  const double dy = struve_derivative(params, x).value;
  return make_report({x * dy, params.nu / params.k * y}, {x / params.k * value_of(lowered(params), x)},
                     point_of(params, x));
}

ResidualReport recurrence_sum_consistency(const StruveParams& params, double x) {
  const ResidualReport r3 = rec3_residual(params, x);
  const ResidualReport r4 = rec4_residual(params, x);
  const ResidualReport r11 = rec1_expanded_residual(params, x);
  ResidualReport report;
  report.residual = r3.residual + r4.residual + 2.0 / x * r11.residual;
  report.scale = r3.scale + r4.scale + 2.0 / x * r11.scale;
  report.relative_residual = std::abs(report.residual) / std::max(report.scale, kScaleFloor);
  report.point = point_of(params, x);
  return report;
}

ResidualReport integral_rep(const StruveParams& params, double alpha, double x, const QuadratureConfig& quad,
                            ConstantSet constants) {
  require_shifted_domain(params, x, "integral_rep");
  if (!(alpha != 0.0) || !std::isfinite(alpha)) throw DomainError("integral_rep requires finite alpha != 0");
  const double alpha_sq = alpha * alpha;
  if (params.c == 0.0 || std::abs(std::abs(params.c) - alpha_sq) > 1e-14 * alpha_sq) {
    throw DomainError("integral_rep requires c = +alpha^2 or c = -alpha^2 (" + describe(params) + ")");
  }
  const bool oscillatory = params.c > 0.0;
  const double k = params.k;
  const double ratio = params.nu / k;
  const double exponent = ratio - 0.5;
  const double frequency = alpha * x / std::sqrt(k);

  const QuadratureResult integral = integrate_unit_interval(
      UnitIntegrand([&](double t, double tc) {
        const double weight = exponent == 0.0 ? 1.0 : std::pow(tc * (1.0 + t), exponent);
        return weight * (oscillatory ? std::sin(frequency * t) : std::sinh(frequency * t));
      }),
      quad);

  const double common = std::pow(0.5 * x, ratio) / (MathConstants::sqrt_pi * k_gamma(params.nu + 0.5 * k, k));
  double prefactor = 0.0;
  if (constants == ConstantSet::Corrected) {
    prefactor = 2.0 / (alpha * std::sqrt(k)) * common;
  } else {
    prefactor = oscillatory ? 2.0 * std::sqrt(k) / alpha_sq * common : 2.0 * std::sqrt(k) * common;
  }

  const double series = value_of(params, x);
  const double represented = prefactor * integral.value;
  Coordinates point = point_of(params, x);
  point.emplace_back("alpha", alpha);
  ResidualReport report = make_report({series}, {represented}, std::move(point));
  if (oscillatory) {
    // |sin(w t)| <= min(1, |w|), so the integral of |integrand| is bounded by
    // min(1, |w|) * int_0^1 (1-t^2)^exponent dt = min(1, |w|) * B(1/2, nu/k + 1/2) / 2.
    const double absolute_bound =
        std::abs(prefactor) * 0.5 * k_beta(0.5, ratio + 0.5, 1.0) * std::min(1.0, std::abs(frequency));
    report.scale = std::max(report.scale, absolute_bound);
    report.relative_residual = std::abs(report.residual) / std::max(report.scale, kScaleFloor);
  }
  return report;
}

ResidualReport closed_form_half_order(double k, double alpha, double x, HalfOrderBranch branch,
                                      ConstantSet constants) {
  require_positive_k(k);
  if (!(alpha != 0.0) || !std::isfinite(alpha)) throw DomainError("closed_form_half_order requires alpha != 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("closed_form_half_order requires finite x > 0");
  const double half = 0.5 * alpha * x / std::sqrt(k);
  const bool cosine = branch == HalfOrderBranch::Cosine;
  // 1 - cos(2h) = 2 sin^2 h and cosh(2h) - 1 = 2 sinh^2 h, free of cancellation.
  const double lhs = cosine ? 2.0 * std::sin(half) * std::sin(half) : 2.0 * std::sinh(half) * std::sinh(half);
  const StruveParams params{0.5 * k, k, cosine ? alpha * alpha : -alpha * alpha};
  const double constant = constants == ConstantSet::Corrected ? alpha * alpha : alpha / k;
  const double rhs = constant * std::sqrt(std::numbers::pi * x / 2.0) * value_of(params, x);
  ResidualReport report;
  report.residual = lhs - rhs;
  report.scale = std::max(std::abs(lhs), std::abs(rhs));
  report.relative_residual = std::abs(report.residual) / std::max(report.scale, kScaleFloor);
  report.point = {{"k", k}, {"alpha", alpha}, {"x", x}, {"c", params.c}};
  return report;
}

ResidualReport kbeta_decomposition_check(int r, double nu, double k, const QuadratureConfig& quad,
                                         ConstantSet constants) {
  require_shifted_domain(StruveParams{nu, k, 1.0}, 1.0, "kbeta_decomposition_check");
  if (r < 0 || r > 30) throw DomainError("kbeta_decomposition_check requires 0 <= r <= 30");
  const bool corrected = constants == ConstantSet::Corrected;
  const double exponent = nu / k - 0.5;
  const int power = corrected ? 2 * r + 1 : 2 * r;
  const QuadratureResult integral = integrate_unit_interval(
      UnitIntegrand([&](double t, double tc) {
        const double weight = exponent == 0.0 ? 1.0 : std::pow(tc * (1.0 + t), exponent);
        return std::pow(t, power) * weight;
      }),
      quad);
  const double rr = static_cast<double>(r);
  const double lhs = 1.0 / k_gamma(corrected ? rr * k + nu + 1.5 * k : rr * k + nu + k, k);
  const double leading = corrected ? 2.0 / k : 2.0;
  const double rhs = leading * integral.value / (k_gamma((rr + 1.0) * k, k) * k_gamma(nu + 0.5 * k, k));
  return make_report({lhs}, {rhs}, {{"r", rr}, {"nu", nu}, {"k", k}});
}

ResidualReport legendre_duplication_residual(double z) {
  if (!(z > 0.0)) throw DomainError("legendre_duplication_residual requires z > 0");
  const double lhs = k_gamma(z, 1.0) * k_gamma(z + 0.5, 1.0);
  const double rhs = std::pow(2.0, 1.0 - 2.0 * z) * MathConstants::sqrt_pi * k_gamma(2.0 * z, 1.0);
  return make_report({lhs}, {rhs}, {{"z", z}});
}

}  // namespace kstruve
