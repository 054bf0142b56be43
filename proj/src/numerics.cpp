#include "kstruve/numerics.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kstruve/errors.hpp"

namespace kstruve {

void QuadratureConfig::validate() const {
  if (!(target_rel_tol > 1e-15 && target_rel_tol < 1e-2)) {
    throw DomainError("quadrature target_rel_tol must lie in (1e-15, 1e-2)");
  }
  if (max_levels < 4 || max_levels > 16) {
    throw DomainError("quadrature max_levels must lie in [4, 16]");
  }
  if (!(abs_floor > 0.0)) throw DomainError("quadrature abs_floor must be positive");
}

namespace {

// Beyond this abscissa parameter the complement 1 - t underflows the
// normal range, so sampling stops there.
constexpr double kMaxAbscissa = 6.2;
constexpr int kMinLevel = 3;

struct Node {
  double t;
  double tc;
  double weight;
};

// t = (1 + tanh(pi/2 sinh s)) / 2, written through e = exp(-2|u|) so that
// both t and 1 - t keep full relative precision near their endpoints.
bool make_node(double s, Node& node) {
  const double u = std::numbers::pi / 2.0 * std::sinh(s);
  const double e = std::exp(-2.0 * std::abs(u));
  if (e < DBL_MIN) return false;
  const double near = e / (1.0 + e);
  const double far = 1.0 / (1.0 + e);
  node.t = s >= 0.0 ? far : near;
  node.tc = s >= 0.0 ? near : far;
  node.weight = std::numbers::pi * std::cosh(s) * e / ((1.0 + e) * (1.0 + e));
  return true;
}

double level_sum(const UnitIntegrand& f, double h, bool odd_only) {
  CompensatedAccumulator acc;
  const int step = odd_only ? 2 : 1;
  const int start = odd_only ? 1 : 0;
  const int last = static_cast<int>(kMaxAbscissa / h);
  auto sample = [&](double s) {
    Node node{};
    if (!make_node(s, node)) return;
    const double v = f(node.t, node.tc);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand is not finite at t=" << node.t;
      throw QuadratureError(msg.str(), std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::infinity());
    }
    acc.add(node.weight * v);
  };
  for (int j = start; j <= last; j += step) {
    sample(j * h);
    if (j != 0) sample(-j * h);
  }
  return acc.total();
}

}  // namespace

QuadratureResult integrate_unit_interval(const UnitIntegrand& f, const QuadratureConfig& config) {
  config.validate();
  double h = 1.0;
  double estimate = h * level_sum(f, h, false);
  double previous = estimate;
  double error = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= config.max_levels; ++level) {
    h *= 0.5;
    previous = estimate;
    estimate = 0.5 * previous + h * level_sum(f, h, true);
    error = std::abs(estimate - previous);
    if (level >= kMinLevel && error <= config.target_rel_tol * std::abs(estimate) + config.abs_floor) {
      return {estimate, error, level};
    }
  }
  std::ostringstream msg;
  msg << "tanh-sinh quadrature did not converge in " << config.max_levels << " levels (value " << estimate
      << ", error estimate " << error << ")";
  throw QuadratureError(msg.str(), estimate, error);
}

QuadratureResult integrate_unit_interval(const std::function<double(double)>& f, const QuadratureConfig& config) {
  return integrate_unit_interval(
      UnitIntegrand([&f](double t, double tc) {
        if (t <= 0.0 || t >= 1.0 || tc <= 0.0) return 0.0;
        return f(t);
      }),
      config);
}

void CompensatedAccumulator::add(double term) noexcept {
  const double t = sum_ + term;
  if (std::abs(sum_) >= std::abs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> terms) noexcept {
  CompensatedAccumulator acc;
  for (const double t : terms) acc.add(t);
  return acc.total();
}

double central_difference(const std::function<double(double)>& f, double x, int order) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(1.0, std::abs(x));
  if (order == 1) {
    volatile double xh = x + std::cbrt(eps) * scale;
    const double h = xh - x;
    return (f(x + h) - f(x - h)) / (2.0 * h);
  }
  if (order == 2) {
    volatile double xh = x + std::pow(eps, 0.25) * scale;
    const double h = xh - x;
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  }
  throw DomainError("central_difference order must be 1 or 2");
}

DoubleDouble oracle_log_k_gamma(const DoubleDouble& y, double k) {
  const DoubleDouble s = y / DoubleDouble(k);
  return (s - DoubleDouble(1.0)) * log(DoubleDouble(k)) + lgamma(s);
}

namespace {

struct OracleTerms {
  const StruveParams& params;
  DoubleDouble log_half_x;
  DoubleDouble p;
  DoubleDouble log_abs_c;

  OracleTerms(const StruveParams& prm, double x)
      : params(prm),
        log_half_x(log(DoubleDouble(0.5 * x))),
        p(DoubleDouble(prm.nu) / DoubleDouble(prm.k) + DoubleDouble(1.0)),
        log_abs_c(prm.c != 0.0 ? log(DoubleDouble(std::abs(prm.c))) : DoubleDouble(0.0)) {}

  DoubleDouble log_magnitude(int r) const {
    const double k = params.k;
    const DoubleDouble rr(static_cast<double>(r));
    const DoubleDouble gamma_arg = rr * DoubleDouble(k) + DoubleDouble(params.nu) + DoubleDouble(1.5 * k);
    const DoubleDouble log_denominator = oracle_log_k_gamma(gamma_arg, k) + lgamma(rr + DoubleDouble(1.5));
    return rr * log_abs_c - log_denominator + (DoubleDouble(2.0) * rr + p) * log_half_x;
  }

  DoubleDouble term(int r) const {
    if (params.c == 0.0 && r > 0) return DoubleDouble(0.0);
    const double sign = (params.c > 0.0 && (r % 2) == 1) ? -1.0 : 1.0;
    return DoubleDouble(sign) * exp(log_magnitude(r));
  }
};

}  // namespace

DoubleDouble oracle_struve_term(const StruveParams& params, double x, int r) {
  params.validate();
  if (r < 0) throw DomainError("oracle term index must be nonnegative");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("oracle term requires finite x > 0");
  return OracleTerms(params, x).term(r);
}

OracleResult oracle_struve_sum(const StruveParams& params, double x, int terms) {
  params.validate();
  if (terms < 1 || terms > 200) throw DomainError("oracle term count must lie in [1, 200]");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("oracle requires finite x >= 0");
  if (x == 0.0) {
    if (params.nu > -params.k) return {DoubleDouble(0.0), 0.0, terms};
    throw DomainError("S(0) is undefined for nu <= -k");
  }

  const OracleTerms series(params, x);
  OracleResult result;
  result.terms = terms;
  const int last = params.c == 0.0 ? 1 : terms;
  for (int r = 0; r < last; ++r) result.value += series.term(r);

  if (params.c == 0.0) {
    result.tail_bound = 0.0;
    return result;
  }
  const double m = static_cast<double>(terms);
  const double k = params.k;
  const double ratio = std::abs(params.c) * (0.25 * x * x) / ((m * k + params.nu + 1.5 * k) * (m + 1.5));
  result.tail_bound =
      ratio < 1.0 ? exp(series.log_magnitude(terms)).to_double() / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  return result;
}

}  // namespace kstruve
