#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kstruve/errors.hpp"
#include "kstruve/identities.hpp"
#include "kstruve/special_functions.hpp"
#include "kstruve/struve.hpp"

using namespace kstruve;
using doctest::Approx;

TEST_CASE("ode residual") {
  CHECK(ode_residual({0.0, 1.0, 1.0}, 1.0).relative_residual <= 1e-10);
  CHECK(ode_residual({1.0, 2.0, -1.0}, 0.5).relative_residual <= 1e-10);
  CHECK_THROWS_AS(ode_residual({-0.6, 1.0, 1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(ode_residual({0.0, 1.0, 1.0}, 0.0), DomainError);
}

TEST_CASE("ode with the half-order closed form") {
  // y = A x^(-1/2) (1 - cos x), A = sqrt(2/pi); nu = 1/2, k = 1, c = 1.
  const double a = std::sqrt(2.0 / std::numbers::pi);
  const double x = 2.0;
  const double g = 1.0 - std::cos(x);
  const double y = a * g / std::sqrt(x);
  const double dy = a * (-0.5 * std::pow(x, -1.5) * g + std::sin(x) / std::sqrt(x));
  const double d2y = a * (0.75 * std::pow(x, -2.5) * g - std::pow(x, -1.5) * std::sin(x) + std::cos(x) / std::sqrt(x));
  const double lhs_terms[] = {x * x * d2y, x * dy, (x * x - 0.25) * y};
  const double rhs = 4.0 * std::pow(0.5 * x, 1.5) / std::sqrt(std::numbers::pi);
  double lhs = 0.0;
  double scale = std::abs(rhs);
  for (const double t : lhs_terms) {
    lhs += t;
    scale = std::max(scale, std::abs(t));
  }
  CHECK(std::abs(lhs - rhs) / scale <= 1e-9);
}

TEST_CASE("recurrences") {
  CHECK(rec1_residual({1.0, 1.0, 1.0}, 1.0).relative_residual <= 1e-10);
  CHECK(rec1_residual({0.5, 2.0, -1.0}, 3.0).relative_residual <= 1e-10);
  CHECK(rec1_residual({1.0, 1.0, 1.0}, 1e-3).relative_residual <= 1e-8);
  CHECK(rec2_residual({0.0, 1.0, 1.0}, 1.0).relative_residual <= 1e-10);
  CHECK(rec2_residual({2.0, 0.5, -1.0}, 0.7).relative_residual <= 1e-10);
  for (const StruveParams p : {StruveParams{1.0, 1.0, 1.0}, StruveParams{1.0, 3.0, -1.0}}) {
    const double x = p.k == 1.0 ? 2.0 : 1.0;
    CHECK(rec3_residual(p, x).relative_residual <= 1e-10);
    CHECK(rec4_residual(p, x).relative_residual <= 1e-10);
    CHECK(rec1_expanded_residual(p, x).relative_residual <= 1e-10);
    CHECK(recurrence_sum_consistency(p, x).relative_residual <= 1e-12);
  }
}

TEST_CASE("rec2 constant term near zero") {
  // Both sides tend to 2^(-1)/(sqrt(pi) Gamma(5/2)) for nu = k = c = 1.
  const double expected = 0.21220659078919378;
  const double x = 1e-4;
  const StruveParams p{1.0, 1.0, 1.0};
  const double s = struve(p, x).value;
  const double lhs = (struve_derivative(p, x).value - s / x) / x;
  const double rhs = 0.5 / (std::sqrt(std::numbers::pi) * k_gamma(2.5, 1.0)) - struve({2.0, 1.0, 1.0}, x).value / x;
  CHECK(lhs == Approx(expected).epsilon(1e-6));
  CHECK(rhs == Approx(expected).epsilon(1e-6));
  CHECK(rec2_residual(p, x).relative_residual <= 1e-9);
}

TEST_CASE("integral representation") {
  CHECK(integral_rep({0.0, 1.0, 1.0}, 1.0, 1.0).relative_residual <= 1e-9);
  CHECK(integral_rep({1.0, 2.0, 1.0}, 1.0, 2.0).relative_residual <= 1e-9);
  CHECK(integral_rep({0.5, 0.5, -4.0}, 2.0, 1.0).relative_residual <= 1e-9);
  CHECK(integral_rep({-0.2, 0.5, -0.25}, 0.5, 10.0).relative_residual <= 1e-9);
  CHECK_THROWS_AS(integral_rep({0.0, 1.0, 2.0}, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(integral_rep({0.0, 1.0, 0.0}, 0.0, 1.0), DomainError);

  // The printed constants only coincide with the corrected ones at k = alpha = 1.
  CHECK(integral_rep({0.0, 1.0, 1.0}, 1.0, 1.0, {}, ConstantSet::PrintedLiteral).relative_residual <= 1e-9);
  CHECK(integral_rep({1.0, 2.0, 0.25}, 0.5, 2.0, {}, ConstantSet::PrintedLiteral).relative_residual >= 0.1);
  CHECK(integral_rep({1.0, 2.0, -4.0}, 2.0, 2.0, {}, ConstantSet::PrintedLiteral).relative_residual >= 0.5);
}

TEST_CASE("half-order closed forms") {
  const ResidualReport one = closed_form_half_order(1.0, 1.0, 1.0, HalfOrderBranch::Cosine);
  CHECK(std::abs(one.residual) <= 1e-12);
  CHECK(closed_form_half_order(4.0, 1.0, 2.0, HalfOrderBranch::Cosine).relative_residual <= 1e-12);
  CHECK(closed_form_half_order(4.0, 1.0, 2.0, HalfOrderBranch::Cosine, ConstantSet::PrintedLiteral)
            .relative_residual >= 0.5);
  const ResidualReport small = closed_form_half_order(1.0, 1.0, 1e-6, HalfOrderBranch::Hyperbolic);
  CHECK(small.scale > 0.0);
  CHECK(small.relative_residual <= 1e-12);
  CHECK(closed_form_half_order(0.5, 2.0, 5.0, HalfOrderBranch::Hyperbolic).relative_residual <= 1e-12);
}

TEST_CASE("k-beta decomposition") {
  CHECK(kbeta_decomposition_check(0, 0.5, 1.0).relative_residual <= 1e-14);
  CHECK(kbeta_decomposition_check(1, 1.0, 2.0).relative_residual <= 1e-9);
  CHECK(kbeta_decomposition_check(3, -0.4, 1.0).relative_residual <= 1e-8);
  CHECK(kbeta_decomposition_check(30, 2.0, 0.5).relative_residual <= 1e-9);
  CHECK_THROWS_AS(kbeta_decomposition_check(31, 0.0, 1.0), DomainError);
}

TEST_CASE("legendre duplication") {
  for (const double z : {0.1, 0.5, 3.3, 40.0}) CHECK(legendre_duplication_residual(z).relative_residual <= 1e-13);
}
