#pragma once

#include <string>

namespace kstruve {

/// The deformation parameter k of the k-gamma family; always strictly positive.
class KParam {
 public:
  explicit KParam(double k);
  double value() const noexcept { return k_; }

 private:
  double k_;
};

/// Throws DomainError unless k is finite and positive.
void require_positive_k(double k);

/// Order, deformation parameter and sign/scale parameter of S^k_{nu,c}.
struct StruveParams {
  double nu = 0.0;
  double k = 1.0;
  double c = 1.0;

  /// Throws DomainError unless k > 0, nu > -3k/2 and all fields are finite.
  void validate() const;

  /// nu/k, the power offset that appears throughout the series.
  double order_ratio() const noexcept { return nu / k; }
};

std::string describe(const StruveParams& p);

}  // namespace kstruve
