#include "kstruve/double_double.hpp"

#include <array>
#include <limits>

namespace kstruve {

DoubleDouble exp(const DoubleDouble& a) {
  if (a.hi > 709.78) return {std::numeric_limits<double>::infinity(), 0.0};
  if (a.hi < -745.2) return {0.0, 0.0};
  if (a.hi == 0.0) return {1.0, 0.0};

  // a = m ln2 + r, |r| <= ln2/2, then r is scaled by 2^-9 and the result
  // squared back up nine times.
  const double m = std::floor(a.hi / dd_constants::ln2.hi + 0.5);
  DoubleDouble r = ldexp(a - dd_constants::ln2 * DoubleDouble(m), -9);

  // expm1(r) by Taylor; |r| < 7e-4 so ten terms reach below 1e-35.
  DoubleDouble term = r;
  DoubleDouble s = r;
  for (int n = 2; n <= 10; ++n) {
    term = term * r / DoubleDouble(static_cast<double>(n));
    s += term;
    if (std::abs(term.hi) < 1e-36) break;
  }
  for (int i = 0; i < 9; ++i) s = ldexp(s, 1) + s * s;
  s += DoubleDouble(1.0);
  return ldexp(s, static_cast<int>(m));
}

DoubleDouble log(const DoubleDouble& a) {
  if (a.hi <= 0.0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  if (a.hi == 1.0 && a.lo == 0.0) return {0.0, 0.0};
  // One Newton step on exp(x) = a doubles the ~16 digits of std::log.
  DoubleDouble x(std::log(a.hi));
  x = x + a * exp(-x) - DoubleDouble(1.0);
  return x;
}

DoubleDouble sqrt(const DoubleDouble& a) {
  if (a.hi <= 0.0) return {0.0, 0.0};
  const double x = 1.0 / std::sqrt(a.hi);
  const double ax = a.hi * x;
  const DoubleDouble diff = a - dd_detail::two_prod(ax, ax);
  return dd_detail::two_sum(ax, diff.hi * (x * 0.5));
}

namespace {

// B_{2m} for m = 1..15 as exact numerator/denominator pairs.
constexpr std::array<std::array<double, 2>, 15> kBernoulli{{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

constexpr double kStirlingThreshold = 32.0;

}  // namespace

DoubleDouble lgamma(const DoubleDouble& z) {
  if (z.hi <= 0.0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};

  DoubleDouble shifted = z;
  DoubleDouble product(1.0);
  while (shifted.hi < kStirlingThreshold) {
    product *= shifted;
    shifted += DoubleDouble(1.0);
  }

  const DoubleDouble half_ln_two_pi = ldexp(log(ldexp(dd_constants::pi, 1)), -1);
  const DoubleDouble ln_z = log(shifted);
  DoubleDouble result = (shifted - DoubleDouble(0.5)) * ln_z - shifted + half_ln_two_pi;

  const DoubleDouble inv = DoubleDouble(1.0) / shifted;
  const DoubleDouble inv_sq = inv * inv;
  DoubleDouble power = inv;
  for (std::size_t m = 1; m <= kBernoulli.size(); ++m) {
    const double two_m = 2.0 * static_cast<double>(m);
    const DoubleDouble coeff =
        DoubleDouble(kBernoulli[m - 1][0]) / (DoubleDouble(kBernoulli[m - 1][1]) * DoubleDouble(two_m * (two_m - 1.0)));
    result += coeff * power;
    power *= inv_sq;
  }
  return result - log(product);
}

}  // namespace kstruve
