#include "kstruve/struve.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "kstruve/double_double.hpp"
#include "kstruve/errors.hpp"
#include "kstruve/special_functions.hpp"

namespace kstruve {

namespace {

constexpr int kDefaultMaxTerms = 500;
constexpr double kRelativeStop = 1e-16;
constexpr double kRatioStop = 0.5;
constexpr int kGuardTerms = 2;

// Gamma(3/2) = sqrt(pi)/2
constexpr double kGammaThreeHalves = 0.886226925452758013649083741670572591;

double magnitude(const DoubleDouble& v) { return std::abs(v.to_double()); }

// Sums sum_r T_r w_r where T_0 = first, T_{r+1} = T_r ratio(r) and w_r = weight(r).
template <class Ratio, class Weight>
EvalResult sum_series(const DoubleDouble& first, Ratio ratio, Weight weight, int max_terms) {
  auto ratio_bound = [&](int r) {
    const double w = magnitude(weight(r));
    if (w == 0.0) return std::numeric_limits<double>::infinity();
    return magnitude(ratio(r)) * magnitude(weight(r + 1)) / w;
  };

  DoubleDouble term = first;
  DoubleDouble sum(0.0);
  int r = 0;
  int last = -1;
  bool truncated = false;
  while (last < 0 || r <= last) {
    if (r >= max_terms) {
      truncated = true;
      break;
    }
    const DoubleDouble contribution = term * weight(r);
    sum += contribution;
    if (last < 0 && r >= 1 && magnitude(contribution) <= kRelativeStop * magnitude(sum) &&
        ratio_bound(r) <= kRatioStop) {
      last = r + kGuardTerms;
    }
    term *= ratio(r);
    ++r;
  }

  EvalResult result;
  result.value = sum.to_double();
  result.terms_used = r;
  result.truncation_warning = truncated;
  const double omitted = magnitude(term * weight(r));
  const double rho = ratio_bound(r);
  result.abs_error_estimate =
      omitted == 0.0 ? 0.0 : (rho < 1.0 ? omitted / (1.0 - rho) : std::numeric_limits<double>::infinity());
  return result;
}

// (r k + nu + 3k/2)(r + 3/2) in double-double.
DoubleDouble gamma_step(int r, double nu, double k) {
  const DoubleDouble rr(static_cast<double>(r));
  return (rr * DoubleDouble(k) + DoubleDouble(nu) + DoubleDouble(1.5 * k)) * (rr + DoubleDouble(1.5));
}

DoubleDouble square_half(double x) {
  const DoubleDouble h(0.5 * x);
  return h * h;
}

// T_0 = (x/2)^(nu/k + 1) / (Gamma_k(nu + 3k/2) Gamma(3/2)), x > 0.
double leading_term(const StruveParams& p, double x) {
  const double power = p.nu / p.k + 1.0;
  const double a = p.nu + 1.5 * p.k;
  if (a / p.k < 170.0) {
    const double direct = std::pow(0.5 * x, power) / (k_gamma(a, p.k) * kGammaThreeHalves);
    if (std::isfinite(direct) && std::abs(direct) >= std::numeric_limits<double>::min()) return direct;
  }
  const double log_value = power * std::log(0.5 * x) - log_k_gamma(a, p.k) - std::log(kGammaThreeHalves);
  const double value = std::exp(log_value);
  if (!std::isfinite(value)) {
    throw OverflowError("leading series term overflows (" + describe(p) + ")",
                        std::numeric_limits<double>::infinity());
  }
  return value;
}

void require_positive_x(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << what << " requires finite x > 0 (got x=" << x << ")";
    throw DomainError(msg.str());
  }
}

EvalResult differentiated_struve(const StruveParams& params, double x, int order, const SeriesOptions& options) {
  params.validate();
  require_positive_x(x, order == 1 ? "struve_derivative" : "struve_second_derivative");
  const DoubleDouble minus_c(-params.c);
  const DoubleDouble quarter_x2 = square_half(x);
  const DoubleDouble power = DoubleDouble(params.nu) / DoubleDouble(params.k) + DoubleDouble(1.0);
  const DoubleDouble xx(x);
  auto ratio = [&](int r) { return minus_c * quarter_x2 / gamma_step(r, params.nu, params.k); };
  auto weight = [&](int r) {
    const DoubleDouble e = DoubleDouble(2.0 * r) + power;
    if (order == 1) return e / xx;
    return e * (e - DoubleDouble(1.0)) / (xx * xx);
  };
  return sum_series(DoubleDouble(leading_term(params, x)), ratio, weight, options.max_terms);
}

const DoubleDouble& inv_sqrt_pi() {
  static const DoubleDouble value = DoubleDouble(1.0) / sqrt(dd_constants::pi);
  return value;
}

}  // namespace

void TuranProbe::validate() const {
  require_positive_k(k);
  if (!std::isfinite(nu) || !std::isfinite(a)) throw DomainError("Turan probe fields must be finite");
  if (!(nu > std::abs(a) - 1.5 * k)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Turan probe requires nu > |a| - 3k/2 (nu=" << nu << ", a=" << a << ", k=" << k << ")";
    throw DomainError(msg.str());
  }
}

int SeriesOptions::default_max_terms() {
  static const int cached = [] {
    const char* raw = std::getenv("KSTRUVE_MAX_TERMS");
    if (raw == nullptr) return kDefaultMaxTerms;
    int value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value < 1) return kDefaultMaxTerms;
    return value;
  }();
  return cached;
}

double struve_coefficient(int r, double nu, double k, double c) {
  StruveParams{nu, k, c}.validate();
  if (r < 0) throw DomainError("coefficient index must be nonnegative");
  if (r > 0 && c == 0.0) return 0.0;
  const double rr = static_cast<double>(r);
  const double gamma_arg = rr * k + nu + 1.5 * k;
  try {
    const double denominator = k_gamma(gamma_arg, k) * boost::math::tgamma(rr + 1.5);
    const double value = std::pow(-c, rr) / denominator;
    if (std::isfinite(denominator) && std::isfinite(value) && std::abs(value) >= std::numeric_limits<double>::min()) {
      return value;
    }
  } catch (const OverflowError&) {
  }
  const double sign = (c > 0.0 && r % 2 == 1) ? -1.0 : 1.0;
  const double log_abs_c = r == 0 ? 0.0 : rr * std::log(std::abs(c));
  return sign * std::exp(log_abs_c - log_k_gamma(gamma_arg, k) - log_gamma(rr + 1.5));
}

double struve_coefficient_normalized(int r, double nu, double k) {
  StruveParams{nu, k, -1.0}.validate();
  if (r < 0) throw DomainError("coefficient index must be nonnegative");
  const double rr = static_cast<double>(r);
  const double base = nu + 1.5 * k;
  const double shifted = rr * k + base;
  try {
    const double value =
        std::ldexp(k_gamma(base, k) / (k_gamma(shifted, k) * boost::math::tgamma(rr + 1.5)), -(2 * r + 1));
    if (std::isfinite(value) && value >= std::numeric_limits<double>::min()) return value;
  } catch (const OverflowError&) {
  }
  return std::exp(log_k_gamma(base, k) - log_k_gamma(shifted, k) - log_gamma(rr + 1.5) -
                  (2.0 * rr + 1.0) * std::numbers::ln2);
}

EvalResult struve(const StruveParams& params, double x, const SeriesOptions& options) {
  params.validate();
  if (!(x >= 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "struve requires finite x >= 0 (got x=" << x << ")";
    throw DomainError(msg.str());
  }
  if (x == 0.0) {
    if (params.nu > -params.k) return {0.0, 0.0, 1, false};
    throw DomainError("S(0) requires nu > -k so that the leading power is positive (" + describe(params) + ")");
  }
  const DoubleDouble minus_c(-params.c);
  const DoubleDouble quarter_x2 = square_half(x);
  auto ratio = [&](int r) { return minus_c * quarter_x2 / gamma_step(r, params.nu, params.k); };
  auto weight = [](int) { return DoubleDouble(1.0); };
  return sum_series(DoubleDouble(leading_term(params, x)), ratio, weight, options.max_terms);
}

EvalResult modified_struve(double nu, double k, double x, const SeriesOptions& options) {
  return struve(StruveParams{nu, k, -1.0}, x, options);
}

EvalResult normalized_struve(double nu, double k, double x, const SeriesOptions& options) {
  StruveParams{nu, k, -1.0}.validate();
  if (!std::isfinite(x)) throw DomainError("normalized_struve requires finite x");
  if (x == 0.0) return {0.0, 0.0, 1, false};
  const double ax = std::abs(x);
  const DoubleDouble x2 = DoubleDouble(ax) * DoubleDouble(ax);
  auto ratio = [&](int r) { return x2 / (DoubleDouble(4.0) * gamma_step(r, nu, k)); };
  auto weight = [](int) { return DoubleDouble(1.0); };
  EvalResult result = sum_series(DoubleDouble(ax) * inv_sqrt_pi(), ratio, weight, options.max_terms);
  if (x < 0.0) result.value = -result.value;
  return result;
}

EvalResult normalized_struve_derivative(double nu, double k, double x, const SeriesOptions& options) {
  StruveParams{nu, k, -1.0}.validate();
  if (!std::isfinite(x)) throw DomainError("normalized_struve_derivative requires finite x");
  if (x == 0.0) return {inv_sqrt_pi().to_double(), 0.0, 1, false};
  const DoubleDouble x2 = DoubleDouble(x) * DoubleDouble(x);
  auto ratio = [&](int r) {
    return x2 * DoubleDouble(2.0 * r + 3.0) / (DoubleDouble(4.0) * gamma_step(r, nu, k) * DoubleDouble(2.0 * r + 1.0));
  };
  auto weight = [](int) { return DoubleDouble(1.0); };
  return sum_series(inv_sqrt_pi(), ratio, weight, options.max_terms);
}

EvalResult struve_derivative(const StruveParams& params, double x, const SeriesOptions& options) {
  return differentiated_struve(params, x, 1, options);
}

EvalResult struve_second_derivative(const StruveParams& params, double x, const SeriesOptions& options) {
  return differentiated_struve(params, x, 2, options);
}

}  // namespace kstruve
