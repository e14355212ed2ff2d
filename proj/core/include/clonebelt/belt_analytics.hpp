#pragma once

// Closed-form optimum of the symmetric cloner for inputs spread uniformly
// (in surface measure) over the latitude belt theta1 <= theta <= theta2.

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "clonebelt/qsim.hpp"

namespace clonebelt {

/// Thrown where a belt average is requested for a zero-width belt.
class DegenerateBeltError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Belt {
  double theta1 = 0.0;
  double theta2 = kPi;

  /// Throws std::domain_error unless 0 <= theta1 <= theta2 <= pi.
  static Belt make(double theta1, double theta2);

  [[nodiscard]] bool degenerate() const noexcept { return theta1 == theta2; }
};

/// Coefficients of the belt-averaged fidelity
///   Fbar = 1/2 + K/6 - P sin(alpha+beta) - Q sin^2(alpha) - R sin^2(beta).
struct BeltConstants {
  double K = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
  /// P(Q-R)/(2QR); empty when QR = 0.
  std::optional<double> T;
  /// -sqrt(4QRP^2 + 4Q^2R^2); empty when the radicand is negative.
  std::optional<double> S;
};

/// For a degenerate belt this yields the pointwise coefficients at theta1,
/// which are the limit of the belt average as the width goes to zero.
BeltConstants belt_constants(const Belt& belt);

/// Evaluates the averaged-fidelity expression for given coefficients.
double mean_fidelity(const BeltConstants& consts, CloneAngles angles);

/// Belt-averaged fidelity. Throws DegenerateBeltError when theta1 == theta2.
double mean_fidelity(const Belt& belt, CloneAngles angles);

struct StationarityResidual {
  double r1 = 0.0;  ///< P cos(alpha+beta) + Q sin(2 alpha)
  double r2 = 0.0;  ///< P cos(alpha+beta) + R sin(2 beta)
};

StationarityResidual stationarity_residual(const BeltConstants& consts, CloneAngles angles);

enum class Branch {
  interior,               ///< stationary point from the arcsin solution
  boundary_alpha0,        ///< alpha = 0, beta = pi/2
  boundary_beta0,         ///< alpha = pi/2, beta = 0
  degenerate_point_belt,  ///< theta1 == theta2, pointwise maximum
  degenerate_fallback,    ///< one of the remaining corner candidates won
};

std::string_view to_string(Branch branch);
/// Throws std::invalid_argument for an unknown name.
Branch branch_from_string(std::string_view name);

struct OptimalCloneResult {
  CloneAngles angles;
  double fbar = 0.0;
  Branch branch = Branch::interior;
  StationarityResidual residuals;
};

/// Interior stationary point, if the arcsin solution exists for these
/// coefficients. Both arcsin arguments are guaranteed to lie in [-1, 1].
std::optional<CloneAngles> interior_stationary_point(const BeltConstants& consts);

/// Maximizes the averaged fidelity over alpha, beta in [0, pi/2].
///
/// Every candidate (the interior stationary point when it exists, the two
/// boundary points and the corners (0,0), (pi/2,pi/2), (pi/4,pi/4)) is
/// evaluated and the best kept. Candidates within 1e-12 of the best are
/// ranked interior first, then the boundary point matching the belt's
/// hemisphere, then the other boundary point. On a degenerate belt the
/// symmetric alpha == beta candidates rank right after the interior point.
OptimalCloneResult solve_optimal(const Belt& belt);

struct SurfacePoint {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double fbar = 0.0;
  Branch branch = Branch::interior;
};

/// Optimal fidelity over the closed triangle 0 <= theta1 <= theta2 <= pi
/// sampled at theta = pi * i / resolution, row-major in theta1 then theta2.
/// Yields (resolution+1)(resolution+2)/2 points. Throws std::invalid_argument
/// for resolution < 2.
std::vector<SurfacePoint> optimal_fidelity_surface(int resolution);

}  // namespace clonebelt
