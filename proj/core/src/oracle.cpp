#include "clonebelt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace clonebelt {

namespace {

constexpr double kIsometryTol = 1e-12;

// splitmix64 finalizer; decorrelates per-restart seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Allocation-free equivalent of apply_isometry + partial_trace + state_fidelity,
// used in the search inner loop. <psi|rho|psi> = sum over the traced bits of
// |<psi|_kept applied to the output|^2.
CloneFidelities machine_fidelities(const IsometryColumns& columns, const PureQubit& psi) {
  std::array<cplx, 8> out{};
  for (std::size_t k = 0; k < 8; ++k) {
    out[k] = columns[0][k] * psi.amplitudes[0] + columns[1][k] * psi.amplitudes[1];
  }
  const cplx c0 = std::conj(psi.amplitudes[0]);
  const cplx c1 = std::conj(psi.amplitudes[1]);
  double fa = 0.0;
  double fb = 0.0;
  for (std::size_t rest = 0; rest < 4; ++rest) {
    // rest enumerates the two traced-out bits.
    const std::size_t b = rest >> 1;
    const std::size_t x = rest & 1U;
    fa += std::norm(c0 * out[(0U << 2) | (b << 1) | x] + c1 * out[(1U << 2) | (b << 1) | x]);
    const std::size_t a = rest >> 1;
    fb += std::norm(c0 * out[(a << 2) | (0U << 1) | x] + c1 * out[(a << 2) | (1U << 1) | x]);
  }
  return {fa, fb};
}

}  // namespace

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

GeneralMachine::GeneralMachine(const IsometryColumns& columns) : columns_(columns) {
  const double defect = orthonormality_defect(columns);
  if (!(defect <= kIsometryTol)) {
    throw std::invalid_argument("GeneralMachine: columns are not orthonormal (defect " + std::to_string(defect) + ")");
  }
}

GeneralMachine GeneralMachine::from_parameters(std::span<const double> params) {
  if (params.size() != kMachineParameters) {
    throw std::invalid_argument("GeneralMachine::from_parameters: expected 32 parameters");
  }
  IsometryColumns cols{};
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t k = 0; k < 8; ++k) {
      cols[c][k] = cplx{params[16 * c + k], params[16 * c + 8 + k]};
    }
  }
  const auto norm = [](const std::array<cplx, 8>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
  };

  const double n0 = norm(cols[0]);
  if (!(n0 > 1e-150)) throw std::invalid_argument("GeneralMachine::from_parameters: zero column");
  for (auto& z : cols[0]) z /= n0;

  // Two passes of Gram-Schmidt keep the overlap at rounding level.
  for (int pass = 0; pass < 2; ++pass) {
    cplx overlap{};
    for (std::size_t k = 0; k < 8; ++k) overlap += std::conj(cols[0][k]) * cols[1][k];
    for (std::size_t k = 0; k < 8; ++k) cols[1][k] -= overlap * cols[0][k];
  }
  const double n1 = norm(cols[1]);
  if (!(n1 > 1e-8 * n0)) throw std::invalid_argument("GeneralMachine::from_parameters: dependent columns");
  for (auto& z : cols[1]) z /= n1;
  return GeneralMachine(cols, Unchecked{});
}

GeneralMachine GeneralMachine::random(Rng& rng) {
  std::array<double, kMachineParameters> params{};
  for (auto& p : params) p = rng.normal();
  return from_parameters(params);
}

GeneralMachine GeneralMachine::symmetric(CloneAngles angles) {
  return GeneralMachine(build_clone_isometry(angles).columns);
}

GeneralMachine GeneralMachine::swapped() const {
  IsometryColumns cols{};
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t idx = 0; idx < 8; ++idx) {
      // Exchange bits a (value 4) and b (value 2).
      const std::size_t a = (idx >> 2) & 1U;
      const std::size_t b = (idx >> 1) & 1U;
      const std::size_t target = (b << 2) | (a << 1) | (idx & 1U);
      cols[c][target] = columns_[c][idx];
    }
  }
  return GeneralMachine(cols, Unchecked{});
}

SymmetrizedFidelity symmetrized_fidelity(const GeneralMachine& machine, const PureQubit& input) {
  const MultiQubitState out = apply_isometry(machine.isometry(), input);
  const DensityMatrix rho_a = partial_trace(out, Qubit::a);
  const DensityMatrix rho_b = partial_trace(out, Qubit::b);
  DensityMatrix mixed(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) mixed(i, j) = 0.5 * (rho_a(i, j) + rho_b(i, j));
  }
  SymmetrizedFidelity f;
  f.f_a = state_fidelity(input, rho_a);
  f.f_b = state_fidelity(input, rho_b);
  f.f_min = std::min(f.f_a, f.f_b);
  f.f_sym = state_fidelity(input, mixed);
  return f;
}

double quad_mean_fidelity(const Belt& belt, CloneAngles angles, const QuadratureSpec& spec) {
  if (belt.degenerate()) {
    throw DegenerateBeltError("quad_mean_fidelity: zero-width belt has no average");
  }
  const auto weighted = [&](double theta) { return pointwise_fidelity(angles, theta) * std::sin(theta); };
  const auto weight = [](double theta) { return std::sin(theta); };
  const double num = integrate(weighted, belt.theta1, belt.theta2, spec);
  const double den = integrate(weight, belt.theta1, belt.theta2, spec);
  return num / den;
}

OracleResult optimize_angles_numeric(const Belt& belt, int grid_steps, int refine_iters) {
  if (grid_steps < 8) throw std::invalid_argument("optimize_angles_numeric: grid_steps must be >= 8");

  const auto score = [&](CloneAngles a) {
    return belt.degenerate() ? pointwise_fidelity(a, belt.theta1) : mean_fidelity(belt, a);
  };

  CloneAngles best{};
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid_steps; ++i) {
    for (int j = 0; j <= grid_steps; ++j) {
      const CloneAngles a{kPi * i / grid_steps, kPi * j / grid_steps};
      const double v = score(a);
      if (v > best_value) {
        best_value = v;
        best = a;
      }
    }
  }

  NelderMeadOptions opts;
  opts.max_iterations = refine_iters;
  opts.size_tol = 1e-13;
  opts.initial_step = kPi / grid_steps;
  opts.adaptive = false;
  const std::array<double, 2> x0{best.alpha, best.beta};
  const auto nm = nelder_mead_minimize(
      [&](std::span<const double> x) { return -score({x[0], x[1]}); }, x0, opts);

  OracleResult out;
  out.n_restarts = 1;
  out.converged = nm.converged;
  if (-nm.value >= best_value) {
    out.best_angles = CloneAngles{nm.x[0], nm.x[1]};
    out.fbar = -nm.value;
  } else {
    out.best_angles = best;
    out.fbar = best_value;
  }
  return out;
}

BeltCubature::BeltCubature(const Belt& belt, int polar_nodes, int azimuth_nodes) {
  if (polar_nodes < 1 || azimuth_nodes < 1) {
    throw std::invalid_argument("BeltCubature: node counts must be positive");
  }
  std::vector<std::pair<double, double>> polar;  // (theta, weight)
  if (belt.degenerate()) {
    polar.emplace_back(belt.theta1, 1.0);
  } else {
    // Surface measure sin(theta) d(theta) is uniform in u = cos(theta).
    const double u1 = std::cos(belt.theta1);
    const double u2 = std::cos(belt.theta2);
    const auto rule = gauss_legendre(polar_nodes);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double u = 0.5 * (u1 + u2) + 0.5 * (u1 - u2) * rule.nodes[k];
      polar.emplace_back(std::acos(std::clamp(u, -1.0, 1.0)), 0.5 * rule.weights[k]);
    }
  }
  for (const auto& [theta, w] : polar) {
    for (int m = 0; m < azimuth_nodes; ++m) {
      const double phi = 2.0 * kPi * m / azimuth_nodes;
      nodes_.push_back({make_ket(theta, phi), w / azimuth_nodes});
    }
  }
}

double machine_belt_fidelity(const GeneralMachine& machine, const BeltCubature& cubature,
                             MachineObjective objective) {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double mean_min = 0.0;
  for (const auto& node : cubature.nodes()) {
    const auto f = machine_fidelities(machine.isometry(), node.psi);
    mean_a += node.weight * f.a;
    mean_b += node.weight * f.b;
    mean_min += node.weight * std::min(f.a, f.b);
  }
  return objective == MachineObjective::mean_of_min ? mean_min : std::min(mean_a, mean_b);
}

OracleResult optimize_general_isometry(const Belt& belt, int restarts, std::uint64_t seed,
                                       const IsometrySearchOptions& options) {
  if (restarts < 1) throw std::invalid_argument("optimize_general_isometry: restarts must be >= 1");
  const BeltCubature cubature(belt, options.polar_nodes, options.azimuth_nodes);

  const auto objective = [&](std::span<const double> x) {
    try {
      return -machine_belt_fidelity(GeneralMachine::from_parameters(x), cubature, options.objective);
    } catch (const std::invalid_argument&) {
      return HUGE_VAL;
    }
  };

  OracleResult out;
  out.seed = seed;
  out.n_restarts = restarts;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<double> x(kMachineParameters);
    for (auto& p : x) p = rng.normal();

    bool converged = false;
    double value = -objective(x);
    for (int round = 0; round < options.rounds; ++round) {
      const auto nm = nelder_mead_minimize(objective, x, options.local);
      const bool improved = -nm.value > value;
      if (improved) {
        x = nm.x;
        value = -nm.value;
      }
      converged = nm.converged;
      if (!improved || nm.converged) break;
    }

    if (value > best_value) {
      best_value = value;
      out.fbar = value;
      out.best_isometry = GeneralMachine::from_parameters(x);
      out.converged = converged;
    }
  }
  return out;
}

}  // namespace clonebelt
