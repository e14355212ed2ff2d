#include "commands.hpp"

#include <cmath>
#include <string>

namespace clonebelt::cli {

namespace {

Belt checked_belt(double theta1, double theta2) {
  if (!std::isfinite(theta1) || !std::isfinite(theta2)) throw UsageError("angles must be finite");
  try {
    return Belt::make(theta1, theta2);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

void check_steps(int steps) {
  if (steps < 2) throw UsageError("--steps must be >= 2, got " + std::to_string(steps));
}

}  // namespace

std::vector<OutputRecord> cmd_optimal(double theta1, double theta2) {
  return {make_record(checked_belt(theta1, theta2))};
}

std::vector<OutputRecord> cmd_grid(int steps) {
  check_steps(steps);
  std::vector<OutputRecord> out;
  out.reserve(static_cast<std::size_t>(steps + 1) * static_cast<std::size_t>(steps + 2) / 2);
  for (const auto& cell : optimal_fidelity_surface(steps)) {
    out.push_back(make_record(Belt::make(cell.theta1, cell.theta2)));
  }
  return out;
}

std::vector<OutputRecord> cmd_curve(double theta1, int steps) {
  check_steps(steps);
  checked_belt(theta1, kPi);
  std::vector<OutputRecord> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double theta2 = k == steps ? kPi : theta1 + (kPi - theta1) * k / steps;
    out.push_back(make_record(Belt::make(theta1, theta2)));
  }
  return out;
}

Suite suite_from_string(std::string_view name) {
  for (Suite s : {Suite::special_points, Suite::oracle_angles, Suite::oracle_isometry, Suite::simulation,
                  Suite::quadrature, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  throw UsageError("unknown verify suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::special_points: return "special-points";
    case Suite::oracle_angles: return "oracle-angles";
    case Suite::oracle_isometry: return "oracle-isometry";
    case Suite::simulation: return "simulation";
    case Suite::quadrature: return "quadrature";
    case Suite::all: return "all";
  }
  return "unknown";
}

}  // namespace clonebelt::cli
