#pragma once

// Residual checks for the differential equation, the four recurrences, the
// integral representations and the half-order closed forms satisfied by
// S^k_{nu,c}.
//
// Every residual is LHS - RHS of the identity. Its scale is the sum of the
// absolute values of the individual terms on the larger side, so that a
// residual near a zero of S is judged against the size of the pieces that
// cancel rather than against the (small) result.

#include "kstruve/numerics.hpp"
#include "kstruve/params.hpp"
#include "kstruve/report.hpp"

namespace kstruve {

struct ResidualReport {
  double residual = 0.0;
  double scale = 0.0;
  double relative_residual = 0.0;
  Coordinates point;
};

/// Which constants to use for the integral representations, the half-order
/// closed forms and the beta decomposition. `Corrected` follows from the
/// k-beta derivation; `PrintedLiteral` reproduces the constants as originally
/// published, which disagree with the series whenever (k, alpha) != (1, 1).
enum class ConstantSet { Corrected, PrintedLiteral };

/// x^2 y'' + x y' + (c x^2/k - nu^2/k^2) y = 4 (x/2)^(nu/k+1) / (k Gamma_k(nu + k/2) sqrt(pi)),
/// with y = S^k_{nu,c}. Requires nu > -k/2 and x > 0.
ResidualReport ode_residual(const StruveParams& params, double x);

/// d/dx(x^(nu/k) S_{nu}) = (1/k) x^(nu/k) S_{nu-k}.
ResidualReport rec1_residual(const StruveParams& params, double x);

/// d/dx(x^(-nu/k) S_{nu}) = 2^(-nu/k) / (sqrt(pi) Gamma_k(nu + 3k/2)) - c x^(-nu/k) S_{nu+k}.
ResidualReport rec2_residual(const StruveParams& params, double x);

/// (1/k) S_{nu-k} - c S_{nu+k} = 2 S' - (x/2)^(nu/k) / (sqrt(pi) Gamma_k(nu + 3k/2)).
ResidualReport rec3_residual(const StruveParams& params, double x);

/// (1/k) S_{nu-k} + c S_{nu+k} = (2 nu/(x k)) S + (x/2)^(nu/k) / (sqrt(pi) Gamma_k(nu + 3k/2)).
ResidualReport rec4_residual(const StruveParams& params, double x);

/// x S' + (nu/k) S = (x/k) S_{nu-k}, the expanded form of rec1.
ResidualReport rec1_expanded_residual(const StruveParams& params, double x);

/// Cross-check that the rec3 and rec4 residuals add up to the expanded rec1
/// residual: r3 + r4 = -(2/x) r11 holds identically in the inputs.
ResidualReport recurrence_sum_consistency(const StruveParams& params, double x);

/// Series value of S^k_{nu,c} against quadrature of
///   (2 / (alpha sqrt(pi k) Gamma_k(nu + k/2))) (x/2)^(nu/k) int_0^1 (1-t^2)^(nu/k-1/2) sin(alpha x t/sqrt(k)) dt
/// for c = alpha^2 (sinh for c = -alpha^2). Requires nu > -k/2, alpha != 0,
/// x > 0 and |c| = alpha^2.
ResidualReport integral_rep(const StruveParams& params, double alpha, double x, const QuadratureConfig& quad = {},
                            ConstantSet constants = ConstantSet::Corrected);

enum class HalfOrderBranch { Cosine, Hyperbolic };

/// 1 - cos(alpha x/sqrt(k)) = alpha^2 sqrt(pi x/2) S^k_{k/2, alpha^2}(x)   (Cosine)
/// cosh(alpha x/sqrt(k)) - 1 = alpha^2 sqrt(pi x/2) S^k_{k/2, -alpha^2}(x) (Hyperbolic)
ResidualReport closed_form_half_order(double k, double alpha, double x, HalfOrderBranch branch,
                                      ConstantSet constants = ConstantSet::Corrected);

/// 1/Gamma_k(rk + nu + 3k/2) against
///   (2/k) int_0^1 t^(2r+1) (1-t^2)^(nu/k-1/2) dt / (Gamma_k((r+1)k) Gamma_k(nu + k/2)).
/// Requires nu > -k/2 and 0 <= r <= 30.
ResidualReport kbeta_decomposition_check(int r, double nu, double k, const QuadratureConfig& quad = {},
                                         ConstantSet constants = ConstantSet::Corrected);

/// Gamma(z) Gamma(z + 1/2) against 2^(1-2z) sqrt(pi) Gamma(2z), z > 0.
ResidualReport legendre_duplication_residual(double z);

}  // namespace kstruve
