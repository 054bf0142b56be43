#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kstruve {

/// Named coordinates of a sample point, in a fixed presentation order.
using Coordinates = std::vector<std::pair<std::string, double>>;

enum class Direction { Increasing, Decreasing, Constant, Mixed };

std::string to_string(Direction d);

struct Violation {
  Coordinates point;
  double margin = 0.0;
};

/// Outcome of one named check over a finite sample set.
///
/// A margin is the normalized amount by which a point misses the claimed
/// relation: a relative residual for identities, a relative excess for
/// inequalities (negative when the inequality holds strictly). A point is
/// a violation when its margin exceeds `tolerance` or is not finite.
struct VerificationReport {
  std::string check_name;
  double tolerance = 0.0;
  int points_tested = 0;
  std::vector<Violation> violations;
  double worst_margin = 0.0;
  Coordinates witness;
  bool passed = true;
  std::optional<Direction> direction;
  /// Diagnostic text for points whose evaluation raised an error.
  std::vector<std::string> errors;
};

/// Incrementally builds a VerificationReport; points must be recorded in the
/// deterministic order in which they should be reported.
class ReportBuilder {
 public:
  ReportBuilder(std::string check_name, double tolerance);

  void record(const Coordinates& point, double margin);
  void record_error(const Coordinates& point, const std::string& message);

  VerificationReport finish() &&;

 private:
  VerificationReport report_;
  bool any_ = false;
};

}  // namespace kstruve
