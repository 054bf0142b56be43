#include "kstruve/report.hpp"

#include <cmath>
#include <limits>

namespace kstruve {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Increasing:
      return "increasing";
    case Direction::Decreasing:
      return "decreasing";
    case Direction::Constant:
      return "constant";
    case Direction::Mixed:
      return "mixed";
  }
  return "mixed";
}

ReportBuilder::ReportBuilder(std::string check_name, double tolerance) {
  report_.check_name = std::move(check_name);
  report_.tolerance = tolerance;
}

void ReportBuilder::record(const Coordinates& point, double margin) {
  ++report_.points_tested;
  const bool finite = std::isfinite(margin);
  const double effective = finite ? margin : std::numeric_limits<double>::infinity();
  if (!any_ || effective > report_.worst_margin) {
    report_.worst_margin = effective;
    report_.witness = point;
    any_ = true;
  }
  if (!finite || margin > report_.tolerance) {
    report_.violations.push_back({point, effective});
    report_.passed = false;
  }
}

void ReportBuilder::record_error(const Coordinates& point, const std::string& message) {
  record(point, std::numeric_limits<double>::infinity());
  report_.errors.push_back(message);
}

VerificationReport ReportBuilder::finish() && { return std::move(report_); }

}  // namespace kstruve
