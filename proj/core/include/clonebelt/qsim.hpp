#pragma once

// Small dense state algebra for the symmetric 1->2 qubit cloner.
//
// Qubit order is (a, b, x): a is the original, b the blank, x the ancilla.
// Amplitude index bits read a b x from most to least significant, with the
// ancilla basis |up> = 0 and |down> = 1.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace clonebelt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Pure qubit on the Bloch sphere, cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
/// The |0> amplitude is always real and non-negative.
struct PureQubit {
  double theta = 0.0;
  double phi = 0.0;
  std::array<cplx, 2> amplitudes{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
};

/// Throws std::domain_error unless theta is in [0, pi] and phi in [0, 2pi).
PureQubit make_ket(double theta, double phi);

/// Pure state of one to three qubits, amplitudes indexed by bitstring.
class MultiQubitState {
 public:
  /// Throws std::invalid_argument if the size is not 2, 4 or 8.
  explicit MultiQubitState(std::vector<cplx> amplitudes);

  [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }
  [[nodiscard]] double squared_norm() const noexcept;

 private:
  int n_qubits_;
  std::vector<cplx> amplitudes_;
};

/// Dense square complex matrix, row-major.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  [[nodiscard]] const cplx& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  [[nodiscard]] cplx trace() const noexcept;
  /// Largest |rho_ij - conj(rho_ji)|.
  [[nodiscard]] double hermiticity_defect() const noexcept;
  /// Closed-form smallest eigenvalue of the Hermitian part; dim must be 2.
  [[nodiscard]] double min_eigenvalue() const;
  /// Hermitian, unit trace and positive semidefinite within the given tolerances.
  [[nodiscard]] bool is_valid_state(double herm_tol = 1e-13, double trace_tol = 1e-13,
                                    double eig_tol = 1e-12) const;
  /// Largest entrywise modulus of the difference.
  [[nodiscard]] double max_abs_diff(const DensityMatrix& other) const;

 private:
  std::size_t dim_;
  std::vector<cplx> entries_;
};

struct CloneAngles {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Two 8-dimensional columns: the images of |0>|0>_b|up>_x and |1>|0>_b|up>_x.
using IsometryColumns = std::array<std::array<cplx, 8>, 2>;

struct CloneIsometry {
  IsometryColumns columns{};
};

/// Largest deviation of the column Gram matrix from the 2x2 identity.
double orthonormality_defect(const IsometryColumns& columns);

/// Symmetric cloning map:
///   |0> -> cos(alpha)|000> + sin(alpha)|xi+>|1>
///   |1> -> cos(beta)|111>  + sin(beta)|xi+>|0>
/// with |xi+> = (|01> + |10>)/sqrt(2) on (a, b).
CloneIsometry build_clone_isometry(CloneAngles angles);

/// Applies an 8x2 isometry to a single-qubit input, giving the (a, b, x) state.
MultiQubitState apply_isometry(const IsometryColumns& columns, const PureQubit& input);

MultiQubitState apply_clone(CloneAngles angles, const PureQubit& input);

enum class Qubit : std::size_t { a = 0, b = 1, x = 2 };

/// Reduced density matrix of one qubit. `keep` counts from the most
/// significant bit (0 = a). Throws std::domain_error for an invalid index.
DensityMatrix partial_trace(const MultiQubitState& state, std::size_t keep);
DensityMatrix partial_trace(const MultiQubitState& state, Qubit keep);

/// <psi|rho|psi> for a 2x2 rho.
double state_fidelity(const PureQubit& psi, const DensityMatrix& rho);

/// Closed-form fidelity of either clone for an input at polar angle theta.
/// Independent of the azimuth.
double pointwise_fidelity(CloneAngles angles, double theta);

struct CloneFidelities {
  double a = 0.0;
  double b = 0.0;
};

/// Fidelities obtained by simulating the cloner and tracing out.
CloneFidelities simulated_fidelity(CloneAngles angles, double theta, double phi);

}  // namespace clonebelt
