#include "kstruve/params.hpp"

#include <cmath>
#include <sstream>

#include "kstruve/errors.hpp"

namespace kstruve {

void require_positive_k(double k) {
  if (!(std::isfinite(k) && k > 0.0)) {
    std::ostringstream msg;
    msg << "k must be a finite positive real (got k=" << k << ")";
    throw DomainError(msg.str());
  }
}

KParam::KParam(double k) : k_(k) { require_positive_k(k); }

void StruveParams::validate() const {
  require_positive_k(k);
  if (!std::isfinite(nu) || !std::isfinite(c)) {
    throw DomainError("nu and c must be finite (" + describe(*this) + ")");
  }
  if (!(nu > -1.5 * k)) {
    throw DomainError("nu must satisfy nu > -3k/2 (" + describe(*this) + ")");
  }
}

std::string describe(const StruveParams& p) {
  std::ostringstream out;
  out.precision(17);
  out << "nu=" << p.nu << ", k=" << p.k << ", c=" << p.c;
  return out.str();
}

}  // namespace kstruve
