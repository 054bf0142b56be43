#include "kstruve/special_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "kstruve/errors.hpp"
#include "kstruve/params.hpp"

namespace kstruve {

namespace {

namespace bmp = boost::math::policies;
using QuietPolicy = bmp::policy<bmp::domain_error<bmp::ignore_error>, bmp::pole_error<bmp::ignore_error>,
                                bmp::overflow_error<bmp::ignore_error>, bmp::underflow_error<bmp::ignore_error>,
                                bmp::evaluation_error<bmp::ignore_error>>;

constexpr double kDirectGammaLimit = 170.0;

void check_pole(double x, double k, const char* what) {
  if (x > kPoleTolerance) return;
  const double n = std::round(-x / k);
  if (n >= 0.0 && std::abs(x + n * k) <= kPoleTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": argument " << x << " is within " << kPoleTolerance << " of the pole at " << -n * k
        << " (k=" << k << ")";
    throw PoleError(msg.str());
  }
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return boost::math::lgamma(x, QuietPolicy());
}

double k_gamma(double x, double k) {
  require_positive_k(k);
  if (!std::isfinite(x)) throw DomainError("k_gamma requires a finite argument");
  check_pole(x, k, "k_gamma");

  const double s = x / k;
  if (std::abs(s) < kDirectGammaLimit) {
    const double value = std::pow(k, s - 1.0) * boost::math::tgamma(s, QuietPolicy());
    if (std::isfinite(value) && value != 0.0) return value;
  }

  int sign = 1;
  const double log_magnitude = (s - 1.0) * std::log(k) + boost::math::lgamma(s, &sign, QuietPolicy());
  const double value = sign * std::exp(log_magnitude);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "k_gamma(" << x << ", " << k << ") overflows";
    throw OverflowError(msg.str(), value);
  }
  return value;
}

double log_k_gamma(double x, double k) {
  require_positive_k(k);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_k_gamma requires finite x > 0");
  const double s = x / k;
  return (s - 1.0) * std::log(k) + boost::math::lgamma(s, QuietPolicy());
}

double k_digamma(double t, double k) {
  require_positive_k(k);
  if (!std::isfinite(t)) throw DomainError("k_digamma requires a finite argument");
  check_pole(t, k, "k_digamma");
  if (t <= 0.0) throw DomainError("k_digamma is only provided for t > 0");
  return (std::log(k) + boost::math::digamma(t / k, QuietPolicy())) / k;
}

double k_trigamma(double t, double k) {
  require_positive_k(k);
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("k_trigamma requires finite t > 0");
  return boost::math::trigamma(t / k, QuietPolicy()) / (k * k);
}

double k_beta(double x, double y, double k) {
  require_positive_k(k);
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("k_beta requires x > 0 and y > 0");
  const double log_value = log_k_gamma(x, k) + log_k_gamma(y, k) - log_k_gamma(x + y, k);
  const double value = std::exp(log_value);
  if (!std::isfinite(value)) throw OverflowError("k_beta overflows", value);
  return value;
}

}  // namespace kstruve
