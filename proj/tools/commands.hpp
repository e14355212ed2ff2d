#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "records.hpp"

namespace clonebelt::cli {

/// Bad arguments; the tool maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

std::vector<OutputRecord> cmd_optimal(double theta1, double theta2);

/// Closed triangle 0 <= theta1 <= theta2 <= pi, row-major in theta1 then theta2.
std::vector<OutputRecord> cmd_grid(int steps);

/// theta2 sweeps [theta1, pi] inclusive in `steps` equal increments.
std::vector<OutputRecord> cmd_curve(double theta1, int steps);

enum class Suite { special_points, oracle_angles, oracle_isometry, simulation, quadrature, all };

Suite suite_from_string(std::string_view name);
std::string_view to_string(Suite suite);

/// Runs the selected checks, writing one PASS/FAIL line each plus a summary.
/// Returns true iff every check passed. Output depends only on (suite, seed).
bool cmd_verify(Suite suite, std::uint64_t seed, std::ostream& os);

}  // namespace clonebelt::cli
