#pragma once

// Brute-force cross-checks for the closed form: quadrature of the belt
// average, numeric maximization over (alpha, beta), and a search over all
// 8x2 isometries with a one-qubit ancilla.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "clonebelt/belt_analytics.hpp"
#include "clonebelt/nelder_mead.hpp"
#include "clonebelt/quadrature.hpp"
#include "clonebelt/qsim.hpp"

namespace clonebelt {

/// Seeded 64-bit Mersenne Twister with hand-rolled transforms, so a seed
/// yields the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller; one draw per call, no cached spare.
  double normal();

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::size_t kMachineParameters = 32;

/// Unconstrained 1->2 cloner: an isometry from the input qubit into
/// (a, b, x) with the blank and ancilla fixed to |0>|up>.
class GeneralMachine {
 public:
  /// Throws std::invalid_argument if the columns are not orthonormal within 1e-12.
  explicit GeneralMachine(const IsometryColumns& columns);

  /// Maps 32 reals (real and imaginary parts of two 8-vectors) onto an
  /// isometry by normalizing column 0 and Gram-Schmidt on column 1.
  /// Throws std::invalid_argument if the vectors are (numerically) dependent.
  static GeneralMachine from_parameters(std::span<const double> params);
  static GeneralMachine random(Rng& rng);
  static GeneralMachine symmetric(CloneAngles angles);

  [[nodiscard]] const IsometryColumns& isometry() const noexcept { return columns_; }
  /// The same machine with the roles of clones a and b exchanged.
  [[nodiscard]] GeneralMachine swapped() const;

 private:
  struct Unchecked {};
  GeneralMachine(const IsometryColumns& columns, Unchecked) : columns_(columns) {}
  IsometryColumns columns_;
};

struct SymmetrizedFidelity {
  double f_a = 0.0;
  double f_b = 0.0;
  double f_min = 0.0;  ///< min(f_a, f_b)
  double f_sym = 0.0;  ///< fidelity of (rho_a + rho_b)/2
};

/// Fidelities of a general machine and of its even mixture with the
/// clone-swapped machine.
SymmetrizedFidelity symmetrized_fidelity(const GeneralMachine& machine, const PureQubit& input);

/// Belt average of the closed-form pointwise fidelity, integrating
/// F(theta) sin(theta) and sin(theta) separately. Throws DegenerateBeltError
/// when theta1 == theta2.
double quad_mean_fidelity(const Belt& belt, CloneAngles angles, const QuadratureSpec& spec = {});

struct OracleResult {
  std::optional<CloneAngles> best_angles;
  std::optional<GeneralMachine> best_isometry;
  double fbar = 0.0;
  int n_restarts = 0;
  std::uint64_t seed = 0;
  bool converged = false;
};

/// Coarse grid over [0, pi]^2 with grid_steps+1 points per axis, then a
/// Nelder-Mead polish from the best grid point capped at refine_iters.
/// Degenerate belts use the pointwise fidelity at theta1.
/// Throws std::invalid_argument for grid_steps < 8.
OracleResult optimize_angles_numeric(const Belt& belt, int grid_steps, int refine_iters);

/// How a general machine's two clone fidelities are scored over a belt.
enum class MachineObjective {
  mean_of_min,   ///< average over the belt of min(F_a, F_b)
  min_of_means,  ///< min of the two belt-averaged fidelities
};

struct IsometrySearchOptions {
  MachineObjective objective = MachineObjective::mean_of_min;
  NelderMeadOptions local{2000, 1e-12, 0.3, true};
  /// Each restart runs the simplex search this many times, re-seeding the
  /// simplex around the incumbent between rounds.
  int rounds = 8;
  /// Gauss-Legendre nodes in cos(theta) and equispaced azimuth nodes.
  int polar_nodes = 6;
  int azimuth_nodes = 8;
};

/// Cubature nodes for averaging over a belt with the surface measure.
/// Weights are positive and sum to one. For min_of_means the rule is exact,
/// since each clone's fidelity is a trigonometric polynomial of degree 2 in
/// phi whose azimuthal average is quadratic in cos(theta).
class BeltCubature {
 public:
  BeltCubature(const Belt& belt, int polar_nodes, int azimuth_nodes);

  struct Node {
    PureQubit psi;
    double weight = 0.0;
  };
  [[nodiscard]] std::span<const Node> nodes() const noexcept { return nodes_; }

 private:
  std::vector<Node> nodes_;
};

double machine_belt_fidelity(const GeneralMachine& machine, const BeltCubature& cubature,
                             MachineObjective objective);

/// Maximizes the belt score over all isometries from `restarts` random
/// starts drawn from Rng(seed). Restart r uses the r-th block of the stream;
/// ties go to the lowest restart index. Throws std::invalid_argument for
/// restarts < 1.
OracleResult optimize_general_isometry(const Belt& belt, int restarts, std::uint64_t seed,
                                       const IsometrySearchOptions& options = {});

}  // namespace clonebelt
