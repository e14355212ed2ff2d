#include "clonebelt/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace clonebelt {

PureQubit make_ket(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::domain_error("make_ket: theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::domain_error("make_ket: phi must lie in [0, 2pi), got " + std::to_string(phi));
  }
  PureQubit q;
  q.theta = theta;
  q.phi = phi;
  q.amplitudes[0] = cplx{std::cos(theta / 2.0), 0.0};
  q.amplitudes[1] = std::polar(std::sin(theta / 2.0), phi);
  return q;
}

MultiQubitState::MultiQubitState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
  switch (amplitudes_.size()) {
    case 2: n_qubits_ = 1; break;
    case 4: n_qubits_ = 2; break;
    case 8: n_qubits_ = 3; break;
    default:
      throw std::invalid_argument("MultiQubitState: expected 2, 4 or 8 amplitudes, got " +
                                  std::to_string(amplitudes_.size()));
  }
}

double MultiQubitState::squared_norm() const noexcept {
  double sum = 0.0;
  for (const auto& amp : amplitudes_) sum += std::norm(amp);
  return sum;
}

DensityMatrix::DensityMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

cplx DensityMatrix::trace() const noexcept {
  cplx t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::hermiticity_defect() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  if (dim_ != 2) throw std::domain_error("DensityMatrix::min_eigenvalue: only 2x2 supported");
  const double d0 = (*this)(0, 0).real();
  const double d1 = (*this)(1, 1).real();
  const cplx off = 0.5 * ((*this)(0, 1) + std::conj((*this)(1, 0)));
  const double half_gap = 0.5 * (d0 - d1);
  return 0.5 * (d0 + d1) - std::sqrt(half_gap * half_gap + std::norm(off));
}

bool DensityMatrix::is_valid_state(double herm_tol, double trace_tol, double eig_tol) const {
  if (hermiticity_defect() > herm_tol) return false;
  if (std::abs(trace() - cplx{1.0, 0.0}) > trace_tol) return false;
  return dim_ != 2 || min_eigenvalue() >= -eig_tol;
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("DensityMatrix::max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  }
  return worst;
}

double orthonormality_defect(const IsometryColumns& columns) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      cplx dot{};
      for (std::size_t k = 0; k < 8; ++k) dot += std::conj(columns[i][k]) * columns[j][k];
      worst = std::max(worst, std::abs(dot - cplx{i == j ? 1.0 : 0.0, 0.0}));
    }
  }
  return worst;
}

namespace {
// Basis indices, bits (a b x).
constexpr std::size_t k000 = 0b000;
constexpr std::size_t k010 = 0b010;
constexpr std::size_t k011 = 0b011;
constexpr std::size_t k100 = 0b100;
constexpr std::size_t k101 = 0b101;
constexpr std::size_t k111 = 0b111;
}  // namespace

CloneIsometry build_clone_isometry(CloneAngles angles) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CloneIsometry iso;
  auto& zero = iso.columns[0];
  zero[k000] = std::cos(angles.alpha);
  zero[k011] = std::sin(angles.alpha) * inv_sqrt2;
  zero[k101] = std::sin(angles.alpha) * inv_sqrt2;
  auto& one = iso.columns[1];
  one[k111] = std::cos(angles.beta);
  one[k010] = std::sin(angles.beta) * inv_sqrt2;
  one[k100] = std::sin(angles.beta) * inv_sqrt2;
  return iso;
}

MultiQubitState apply_isometry(const IsometryColumns& columns, const PureQubit& input) {
  std::vector<cplx> out(8);
  for (std::size_t k = 0; k < 8; ++k) {
    out[k] = columns[0][k] * input.amplitudes[0] + columns[1][k] * input.amplitudes[1];
  }
  return MultiQubitState(std::move(out));
}

MultiQubitState apply_clone(CloneAngles angles, const PureQubit& input) {
  return apply_isometry(build_clone_isometry(angles).columns, input);
}

DensityMatrix partial_trace(const MultiQubitState& state, std::size_t keep) {
  const auto n = static_cast<std::size_t>(state.n_qubits());
  if (keep >= n) {
    throw std::domain_error("partial_trace: qubit index " + std::to_string(keep) +
                            " out of range for a " + std::to_string(n) + "-qubit state");
  }
  const std::size_t shift = n - 1 - keep;
  const std::size_t mask = std::size_t{1} << shift;
  const std::size_t size = std::size_t{1} << n;
  DensityMatrix rho(2);
  // Pair every basis index with its partner that differs only in the kept bit.
  for (std::size_t idx = 0; idx < size; ++idx) {
    if (idx & mask) continue;
    const cplx& zero = state[idx];
    const cplx& one = state[idx | mask];
    rho(0, 0) += std::norm(zero);
    rho(1, 1) += std::norm(one);
    rho(0, 1) += zero * std::conj(one);
  }
  rho(1, 0) = std::conj(rho(0, 1));
  return rho;
}

DensityMatrix partial_trace(const MultiQubitState& state, Qubit keep) {
  return partial_trace(state, static_cast<std::size_t>(keep));
}

double state_fidelity(const PureQubit& psi, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::domain_error("state_fidelity: expected a 2x2 density matrix");
  cplx sum{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      sum += std::conj(psi.amplitudes[i]) * rho(i, j) * psi.amplitudes[j];
    }
  }
  return sum.real();
}

double pointwise_fidelity(CloneAngles angles, double theta) {
  const double c2 = std::pow(std::cos(theta / 2.0), 2);
  const double s2 = std::pow(std::sin(theta / 2.0), 2);
  const double sin_t2 = std::pow(std::sin(theta), 2);
  const double ca2 = std::pow(std::cos(angles.alpha), 2);
  const double cb2 = std::pow(std::cos(angles.beta), 2);
  const double sa2 = std::pow(std::sin(angles.alpha), 2);
  const double sb2 = std::pow(std::sin(angles.beta), 2);
  return c2 * c2 * (0.5 + 0.5 * ca2) + s2 * s2 * (0.5 + 0.5 * cb2) + sin_t2 * (sa2 + sb2) / 8.0 +
         std::sqrt(2.0) / 4.0 * sin_t2 * std::sin(angles.alpha + angles.beta);
}

CloneFidelities simulated_fidelity(CloneAngles angles, double theta, double phi) {
  const PureQubit psi = make_ket(theta, phi);
  const MultiQubitState out = apply_clone(angles, psi);
  return {state_fidelity(psi, partial_trace(out, Qubit::a)),
          state_fidelity(psi, partial_trace(out, Qubit::b))};
}

}  // namespace clonebelt
