#include "clonebelt/belt_analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace clonebelt {

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kStationaryTol = 1e-10;
constexpr double kArcsinSlack = 1e-12;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

bool in_quarter_square(CloneAngles a) {
  constexpr double lo = -1e-12;
  constexpr double hi = kPi / 2.0 + 1e-12;
  return a.alpha >= lo && a.alpha <= hi && a.beta >= lo && a.beta <= hi;
}

// pi * i / n, pinned to exactly pi at the last step.
double grid_angle(int i, int n) { return i == n ? kPi : kPi * i / n; }

struct Candidate {
  CloneAngles angles;
  Branch branch;
  int rank;
};

}  // namespace

Belt Belt::make(double theta1, double theta2) {
  if (!(theta1 >= 0.0 && theta1 <= theta2 && theta2 <= kPi)) {
    throw std::domain_error("Belt: need 0 <= theta1 <= theta2 <= pi, got (" + std::to_string(theta1) +
                            ", " + std::to_string(theta2) + ")");
  }
  return Belt{theta1, theta2};
}

BeltConstants belt_constants(const Belt& belt) {
  const double u1 = std::cos(belt.theta1);
  const double u2 = std::cos(belt.theta2);
  const double sqrt2 = std::sqrt(2.0);

  BeltConstants c;
  c.K = u1 * u1 + u1 * u2 + u2 * u2;
  c.P = sqrt2 / 12.0 * c.K - sqrt2 / 4.0;
  c.Q = c.K / 12.0 + (u1 + u2) / 8.0;
  c.R = c.K / 12.0 - (u1 + u2) / 8.0;

  const double qr = c.Q * c.R;
  if (qr != 0.0) c.T = c.P * (c.Q - c.R) / (2.0 * qr);
  const double radicand = 4.0 * qr * c.P * c.P + 4.0 * qr * qr;
  if (radicand >= 0.0) c.S = -std::sqrt(radicand);
  return c;
}

double mean_fidelity(const BeltConstants& c, CloneAngles a) {
  const double sa = std::sin(a.alpha);
  const double sb = std::sin(a.beta);
  return 0.5 + c.K / 6.0 - c.P * std::sin(a.alpha + a.beta) - c.Q * sa * sa - c.R * sb * sb;
}

double mean_fidelity(const Belt& belt, CloneAngles angles) {
  if (belt.degenerate()) {
    throw DegenerateBeltError("mean_fidelity: zero-width belt, use pointwise_fidelity");
  }
  return mean_fidelity(belt_constants(belt), angles);
}

StationarityResidual stationarity_residual(const BeltConstants& c, CloneAngles a) {
  const double common = c.P * std::cos(a.alpha + a.beta);
  return {common + c.Q * std::sin(2.0 * a.alpha), common + c.R * std::sin(2.0 * a.beta)};
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::interior: return "interior";
    case Branch::boundary_alpha0: return "boundary_alpha0";
    case Branch::boundary_beta0: return "boundary_beta0";
    case Branch::degenerate_point_belt: return "degenerate_point_belt";
    case Branch::degenerate_fallback: return "degenerate_fallback";
  }
  return "unknown";
}

Branch branch_from_string(std::string_view name) {
  for (Branch b : {Branch::interior, Branch::boundary_alpha0, Branch::boundary_beta0,
                   Branch::degenerate_point_belt, Branch::degenerate_fallback}) {
    if (to_string(b) == name) return b;
  }
  throw std::invalid_argument("unknown branch name: " + std::string(name));
}

std::optional<CloneAngles> interior_stationary_point(const BeltConstants& c) {
  if (!c.T || !c.S || *c.S == 0.0) return std::nullopt;

  double sum = 0.0;   // alpha + beta
  double diff = 0.0;  // alpha - beta
  if (c.Q == c.R) {
    // T = 0: alpha == beta with sin(2 alpha) = -P / sqrt(P^2 + Q^2).
    const double x = -c.P / std::hypot(c.P, c.Q);
    sum = std::asin(clamp_unit(x));
  } else {
    const double t = *c.T;
    const double x = c.P * (c.Q + c.R) / *c.S;
    if (std::abs(t) > 1.0 || std::abs(x) > 1.0 + kArcsinSlack) return std::nullopt;
    sum = std::asin(clamp_unit(x));
    diff = std::asin(t);
  }
  return CloneAngles{(sum + diff) / 2.0, (sum - diff) / 2.0};
}

OptimalCloneResult solve_optimal(const Belt& belt) {
  const BeltConstants c = belt_constants(belt);
  const bool degenerate = belt.degenerate();
  const bool north_heavy = std::abs(belt.theta1 - kPi / 2.0) >= std::abs(belt.theta2 - kPi / 2.0);

  const Branch preferred = north_heavy ? Branch::boundary_alpha0 : Branch::boundary_beta0;
  const Branch other = north_heavy ? Branch::boundary_beta0 : Branch::boundary_alpha0;
  const auto boundary_angles = [](Branch b) {
    return b == Branch::boundary_alpha0 ? CloneAngles{0.0, kPi / 2.0} : CloneAngles{kPi / 2.0, 0.0};
  };

  std::vector<Candidate> candidates;
  if (auto interior = interior_stationary_point(c); interior && in_quarter_square(*interior)) {
    const auto res = stationarity_residual(c, *interior);
    if (std::abs(res.r1) <= kStationaryTol && std::abs(res.r2) <= kStationaryTol) {
      candidates.push_back({*interior, Branch::interior, 0});
    }
  }
  const int corner_rank = degenerate ? 1 : 3;
  const int boundary_rank = degenerate ? 4 : 1;
  candidates.push_back({boundary_angles(preferred), preferred, boundary_rank});
  candidates.push_back({boundary_angles(other), other, boundary_rank + 1});
  candidates.push_back({{kPi / 4.0, kPi / 4.0}, Branch::degenerate_fallback, corner_rank});
  candidates.push_back({{0.0, 0.0}, Branch::degenerate_fallback, corner_rank + 1});
  candidates.push_back({{kPi / 2.0, kPi / 2.0}, Branch::degenerate_fallback, corner_rank + 2});

  std::vector<double> values;
  values.reserve(candidates.size());
  for (const auto& cand : candidates) values.push_back(mean_fidelity(c, cand.angles));
  const double best = *std::max_element(values.begin(), values.end());

  std::size_t pick = 0;
  int pick_rank = 1 << 30;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (values[i] >= best - kTieTol && candidates[i].rank < pick_rank) {
      pick = i;
      pick_rank = candidates[i].rank;
    }
  }

  OptimalCloneResult result;
  result.angles = candidates[pick].angles;
  result.fbar = values[pick];
  result.branch = degenerate ? Branch::degenerate_point_belt : candidates[pick].branch;
  result.residuals = stationarity_residual(c, result.angles);
  return result;
}

std::vector<SurfacePoint> optimal_fidelity_surface(int resolution) {
  if (resolution < 2) throw std::invalid_argument("optimal_fidelity_surface: resolution must be >= 2");
  std::vector<SurfacePoint> out;
  out.reserve(static_cast<std::size_t>(resolution + 1) * static_cast<std::size_t>(resolution + 2) / 2);
  for (int i = 0; i <= resolution; ++i) {
    const double t1 = grid_angle(i, resolution);
    for (int j = i; j <= resolution; ++j) {
      const double t2 = grid_angle(j, resolution);
      const auto opt = solve_optimal(Belt::make(t1, t2));
      out.push_back({t1, t2, opt.fbar, opt.branch});
    }
  }
  return out;
}

}  // namespace clonebelt
