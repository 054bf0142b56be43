#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "kstruve/errors.hpp"
#include "kstruve/numerics.hpp"
#include "kstruve/special_functions.hpp"
#include "kstruve/struve.hpp"

using namespace kstruve;
using doctest::Approx;

namespace {

double half_order(double x) { return std::sqrt(2.0 / std::numbers::pi) * (1.0 - std::cos(x)) / std::sqrt(x); }

}  // namespace

TEST_CASE("struve coefficients") {
  CHECK(struve_coefficient(0, 0.5, 1.0, 1.0) == Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(struve_coefficient(0, 1.0, 2.0, 1.0) == Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(struve_coefficient(1, 0.0, 1.0, 1.0) / struve_coefficient(0, 0.0, 1.0, 1.0) ==
        Approx(-4.0 / 9.0).epsilon(1e-15));
  CHECK(struve_coefficient(3, 0.0, 1.0, 0.0) == 0.0);
  // Deep coefficients fall back to logarithms without losing the ratio.
  const double r60 = struve_coefficient(60, 0.3, 0.7, -1.5);
  const double r61 = struve_coefficient(61, 0.3, 0.7, -1.5);
  CHECK(r61 / r60 == Approx(1.5 / ((60 * 0.7 + 0.3 + 1.05) * 61.5)).epsilon(1e-14));
}

TEST_CASE("struve classical values") {
  CHECK(struve({0.0, 1.0, 1.0}, 1.0).value == Approx(0.56865662704828795).epsilon(2e-16));
  CHECK(struve({0.5, 1.0, 1.0}, 1.0).value == Approx(0.36678569278448928).epsilon(2e-16));
  CHECK(struve({1.0, 2.0, -1.0}, 0.0).value == 0.0);
  for (const double x : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(struve({0.5, 1.0, 1.0}, x).value == Approx(half_order(x)).epsilon(1e-14));
  }
}

TEST_CASE("struve reference values") {
  CHECK(struve({1.0, 2.0, -1.0}, 3.0).value == Approx(1.4883929341548258).epsilon(1e-15));
  CHECK(struve({0.0, 1.0, 1.0}, 5.0).value == Approx(-0.18521681577668489).epsilon(1e-14));
  CHECK(struve({2.5, 1.0, 1.0}, 20.0).value == Approx(9.0589936180795281).epsilon(1e-14));
  CHECK(struve({1.0, 2.0, 1.0}, 2.0).value == Approx(0.47620777534118124).epsilon(1e-15));
  CHECK(struve({0.5, 0.5, -4.0}, 1.0).value == Approx(1.0035777453937269).epsilon(1e-15));
  // Terms reach ~1e20 before cancelling to O(0.1); double-double resolution
  // of the partial sums then limits the result to ~1e-12 relative.
  CHECK(struve({0.0, 1.0, 1.0}, 50.0).value == Approx(-0.085337674826118995).epsilon(1e-11));
  CHECK(struve({0.0, 1.0, 1.0}, 30.0).value == Approx(-0.096098421554162108).epsilon(1e-13));
  CHECK(modified_struve(1.0, 1.0, 20.0).value == Approx(42454972.750111982).epsilon(1e-14));
}

TEST_CASE("struve agrees with the double-double oracle") {
  for (const StruveParams p : {StruveParams{0.0, 1.0, 1.0}, StruveParams{-0.4, 0.5, 2.0}, StruveParams{3.0, 2.5, -0.7}}) {
    for (const double x : {0.01, 0.9, 4.0, 9.5}) {
      const EvalResult e = struve(p, x);
      const OracleResult o = oracle_struve_sum(p, x, 120);
      CHECK(std::abs(e.value - o.value.to_double()) <= e.abs_error_estimate + 1e-13 * std::abs(e.value));
    }
  }
}

TEST_CASE("struve domain") {
  try {
    struve({-2.0, 1.0, 1.0}, 1.0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("nu > -3k/2") != std::string::npos);
  }
  CHECK_THROWS_AS(struve({0.0, 1.0, 1.0}, -1.0), DomainError);
  CHECK_THROWS_AS(struve({-1.2, 1.0, 1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(struve({0.0, 0.0, 1.0}, 1.0), DomainError);
  CHECK_NOTHROW(struve({-1.2, 1.0, 1.0}, 0.5));
}

TEST_CASE("struve term cap") {
  SeriesOptions few;
  few.max_terms = 3;
  const EvalResult capped = struve({0.0, 1.0, 1.0}, 10.0, few);
  CHECK(capped.truncation_warning);
  CHECK(capped.terms_used == 3);
  const EvalResult full = struve({0.0, 1.0, 1.0}, 10.0);
  CHECK_FALSE(full.truncation_warning);
  CHECK(full.abs_error_estimate < 1e-15);
}

TEST_CASE("modified struve") {
  CHECK(modified_struve(0.0, 1.0, 1.0).value == Approx(0.71024318593789089).epsilon(2e-16));
  CHECK(modified_struve(0.0, 1.0, 0.0).value == 0.0);
  CHECK(modified_struve(-1.0, 1.0, 2.0).value > 0.0);
  CHECK(modified_struve(0.7, 1.3, 2.2).value == struve({0.7, 1.3, -1.0}, 2.2).value);
}

TEST_CASE("normalized struve") {
  for (const double nu : {-0.4, 0.0, 2.0}) CHECK(normalized_struve(nu, 1.0, 0.0).value == 0.0);
  CHECK(normalized_struve(0.0, 1.0, 1.0).value == Approx(0.62943663499750858).epsilon(1e-15));
  CHECK(normalized_struve(0.3, 0.8, -2.5).value == -normalized_struve(0.3, 0.8, 2.5).value);
  const double nu = 1.1;
  const double k = 0.6;
  const double x = 3.0;
  const double rescaled = std::pow(2.0 / x, nu / k) * k_gamma(nu + 1.5 * k, k) * modified_struve(nu, k, x).value;
  CHECK(normalized_struve(nu, k, x).value == Approx(rescaled).epsilon(1e-14));
}

TEST_CASE("normalized coefficients") {
  for (const double nu : {-1.0, 0.0, 2.5}) {
    CHECK(struve_coefficient_normalized(0, nu, 1.7) == Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  }
  CHECK(struve_coefficient_normalized(1, 0.0, 1.0) == Approx(0.062687731505306254).epsilon(1e-15));
  CHECK(struve_coefficient_normalized(5, -1.0, 1.0) > 0.0);
}

TEST_CASE("struve derivatives") {
  CHECK(struve_derivative({0.5, 1.0, 1.0}, 1.0).value == Approx(0.48800386074955845).epsilon(1e-14));
  // (x/2)^0 leading term: d/dx S_0 -> 2/pi as x -> 0+.
  CHECK(struve_derivative({0.0, 1.0, 1.0}, 1e-8).value == Approx(2.0 / std::numbers::pi).epsilon(1e-12));

  const StruveParams p{0.9, 1.4, -0.6};
  for (const double x : {0.3, 2.0, 6.0}) {
    const double fd1 = central_difference([&](double t) { return struve(p, t).value; }, x, 1);
    const double fd2 = central_difference([&](double t) { return struve(p, t).value; }, x, 2);
    CHECK(struve_derivative(p, x).value == Approx(fd1).epsilon(1e-8));
    CHECK(struve_second_derivative(p, x).value == Approx(fd2).epsilon(1e-5));
  }
  const double dn = normalized_struve_derivative(0.4, 1.2, 1.7).value;
  const double fd = central_difference([](double t) { return normalized_struve(0.4, 1.2, t).value; }, 1.7, 1);
  CHECK(dn == Approx(fd).epsilon(1e-8));
  CHECK(normalized_struve_derivative(0.4, 1.2, 0.0).value == Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("turan probe validation") {
  const TuranProbe good{1.0, 0.5, 1.0};
  const TuranProbe bad{0.0, 2.0, 1.0};
  CHECK_NOTHROW(good.validate());
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
