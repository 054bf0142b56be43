#pragma once

// Real-argument k-gamma family. Every function reduces to its classical
// counterpart through Gamma_k(x) = k^(x/k - 1) Gamma(x/k).

namespace kstruve {

struct MathConstants {
  static constexpr double euler_gamma = 0.57721566490153286060651209008240243;
  static constexpr double sqrt_pi = 1.77245385090551602729816748334114518;
};

/// Absolute distance to x = -n k (n = 0, 1, ...) below which an argument is
/// treated as a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// Gamma_k(x). Throws PoleError within kPoleTolerance of x = -n k and
/// OverflowError (carrying the signed infinity) when |Gamma_k(x)| exceeds
/// the double range.
double k_gamma(double x, double k);

/// ln Gamma_k(x) for x > 0; throws DomainError otherwise.
double log_k_gamma(double x, double k);

/// Psi_k = Gamma_k'/Gamma_k = (ln k)/k + psi(t/k)/k for t > 0.
/// Throws PoleError within kPoleTolerance of t = 0 and DomainError for t < 0.
double k_digamma(double t, double k);

/// Psi_k'(t) = psi'(t/k)/k^2 = sum_{n>=0} (nk + t)^-2 for t > 0.
double k_trigamma(double t, double k);

/// B_k(x, y) = Gamma_k(x) Gamma_k(y) / Gamma_k(x + y), evaluated in log space.
double k_beta(double x, double y, double k);

/// Classical ln Gamma for x > 0 (thread-safe; no global sign state).
double log_gamma(double x);

}  // namespace kstruve
