#include <cmath>

#include <gtest/gtest.h>

#include "clonebelt/oracle.hpp"

namespace clonebelt {
namespace {

const double kUqcmAngle = std::acos(std::sqrt(2.0 / 3.0));

Belt random_belt(Rng& rng) {
  double a = rng.uniform(0.0, kPi);
  double b = rng.uniform(0.0, kPi);
  if (a > b) std::swap(a, b);
  return Belt::make(a, b);
}

TEST(Rng, ReproducibleAndInRange) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  // First mt19937_64 output for seed 42, scaled to 53 bits: pins the stream.
  Rng c(42);
  std::mt19937_64 ref(42);
  EXPECT_EQ(c.uniform(), static_cast<double>(ref() >> 11) * 0x1.0p-53);
}

TEST(QuadMeanFidelity, Examples) {
  EXPECT_NEAR(quad_mean_fidelity(Belt::make(0.0, kPi), {kUqcmAngle, kUqcmAngle}), 5.0 / 6.0, 1e-10);
  EXPECT_NEAR(quad_mean_fidelity(Belt::make(0.0, kPi), {0.0, 0.0}), 2.0 / 3.0, 1e-10);
  QuadratureSpec fixed{QuadratureMethod::fixed_panel, 1e-12, 30};
  EXPECT_NEAR(quad_mean_fidelity(Belt::make(0.0, kPi), {0.0, 0.0}, fixed), 2.0 / 3.0, 1e-10);
  EXPECT_THROW(quad_mean_fidelity(Belt::make(0.5, 0.5), {0.0, 0.0}), DegenerateBeltError);
}

TEST(QuadMeanFidelity, PropertyMatchesAnalytic) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Belt belt = random_belt(rng);
    const CloneAngles a{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
    EXPECT_NEAR(quad_mean_fidelity(belt, a), mean_fidelity(belt, a), 1e-10);
  }
}

TEST(OptimizeAnglesNumeric, Examples) {
  EXPECT_THROW(optimize_angles_numeric(Belt::make(0.0, kPi), 4, 100), std::invalid_argument);

  const auto uqcm = optimize_angles_numeric(Belt::make(0.0, kPi), 32, 2000);
  EXPECT_NEAR(uqcm.fbar, 5.0 / 6.0, 1e-9);
  ASSERT_TRUE(uqcm.best_angles.has_value());

  const Belt north = Belt::make(0.0, kPi / 2.0);
  const auto c = belt_constants(north);
  EXPECT_NEAR(optimize_angles_numeric(north, 32, 2000).fbar, 0.5 + c.K / 6.0 - c.P - c.R, 1e-9);

  const Belt quarter = Belt::make(kPi / 4.0, 3.0 * kPi / 4.0);
  EXPECT_NEAR(optimize_angles_numeric(quarter, 32, 2000).fbar, solve_optimal(quarter).fbar, 1e-9);
}

TEST(OptimizeAnglesNumeric, PropertyNeverBeatsClosedForm) {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    const Belt belt = random_belt(rng);
    const double closed = solve_optimal(belt).fbar;
    const auto num = optimize_angles_numeric(belt, 16, 2000);
    EXPECT_LE(num.fbar, closed + 1e-9);
    EXPECT_GE(num.fbar, closed - 1e-8);
    EXPECT_EQ(num.fbar, optimize_angles_numeric(belt, 16, 2000).fbar);
  }
}

TEST(GeneralMachine, ValidationAndParametrization) {
  IsometryColumns bad{};
  bad[0][0] = 1.0;
  bad[1][0] = 1.0;
  EXPECT_THROW(GeneralMachine{bad}, std::invalid_argument);
  EXPECT_THROW(GeneralMachine::from_parameters(std::vector<double>(31, 1.0)), std::invalid_argument);
  EXPECT_THROW(GeneralMachine::from_parameters(std::vector<double>(32, 0.0)), std::invalid_argument);

  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto m = GeneralMachine::random(rng);
    EXPECT_LE(orthonormality_defect(m.isometry()), 1e-12);
    EXPECT_LE(orthonormality_defect(m.swapped().isometry()), 1e-12);
  }
}

TEST(SymmetrizedFidelity, SymmetricMachineHasEqualClones) {
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const auto m = GeneralMachine::symmetric({rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)});
    const auto f = symmetrized_fidelity(m, make_ket(rng.uniform(0.0, kPi), rng.uniform(0.0, 2.0 * kPi)));
    EXPECT_NEAR(f.f_a, f.f_b, 1e-13);
    EXPECT_NEAR(f.f_sym, f.f_min, 1e-13);
  }
}

TEST(SymmetrizedFidelity, OneSidedMachine) {
  // |0> -> |000>, |1> -> |100>: clone a is perfect, clone b stays blank.
  IsometryColumns cols{};
  cols[0][0b000] = 1.0;
  cols[1][0b100] = 1.0;
  const GeneralMachine m(cols);
  const auto f = symmetrized_fidelity(m, make_ket(kPi, 0.0));
  EXPECT_NEAR(f.f_a, 1.0, 1e-15);
  EXPECT_NEAR(f.f_b, 0.0, 1e-15);
  EXPECT_NEAR(f.f_min, 0.0, 1e-15);
  EXPECT_NEAR(f.f_sym, 0.5, 1e-15);

  const auto s = symmetrized_fidelity(m.swapped(), make_ket(kPi, 0.0));
  EXPECT_NEAR(s.f_a, 0.0, 1e-15);
  EXPECT_NEAR(s.f_b, 1.0, 1e-15);
}

TEST(SymmetrizedFidelity, PropertySymmetrizationNeverHurts) {
  Rng rng(16);
  for (int i = 0; i < 500; ++i) {
    const auto m = GeneralMachine::random(rng);
    const auto f = symmetrized_fidelity(m, make_ket(rng.uniform(0.0, kPi), rng.uniform(0.0, 2.0 * kPi)));
    EXPECT_GE(f.f_sym, f.f_min - 1e-15);
    EXPECT_NEAR(f.f_sym, 0.5 * (f.f_a + f.f_b), 1e-14);
  }
}

TEST(BeltCubature, ExactForSymmetricMachine) {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const Belt belt = random_belt(rng);
    const CloneAngles a{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
    const BeltCubature cub(belt, 3, 3);
    double wsum = 0.0;
    for (const auto& node : cub.nodes()) wsum += node.weight;
    EXPECT_NEAR(wsum, 1.0, 1e-14);
    const auto m = GeneralMachine::symmetric(a);
    for (auto obj : {MachineObjective::mean_of_min, MachineObjective::min_of_means}) {
      EXPECT_NEAR(machine_belt_fidelity(m, cub, obj), mean_fidelity(belt, a), 1e-13);
    }
  }
}

// For a random machine the per-clone averages are low-degree polynomials, so
// the cubature must agree with brute-force quadrature over theta and phi.
TEST(BeltCubature, MinOfMeansMatchesBruteForceQuadrature) {
  Rng rng(18);
  const auto m = GeneralMachine::random(rng);
  const Belt belt = Belt::make(0.4, 2.3);
  const auto clone_avg = [&](bool clone_a) {
    const auto inner = [&](double theta) {
      const auto over_phi = [&](double phi) {
        const auto f = symmetrized_fidelity(m, make_ket(theta, std::min(phi, std::nextafter(2.0 * kPi, 0.0))));
        return clone_a ? f.f_a : f.f_b;
      };
      return adaptive_simpson(over_phi, 0.0, 2.0 * kPi, 1e-12, 30) / (2.0 * kPi) * std::sin(theta);
    };
    return adaptive_simpson(inner, belt.theta1, belt.theta2, 1e-11, 30) /
           (std::cos(belt.theta1) - std::cos(belt.theta2));
  };
  const double expected = std::min(clone_avg(true), clone_avg(false));
  EXPECT_NEAR(machine_belt_fidelity(m, BeltCubature(belt, 3, 3), MachineObjective::min_of_means), expected, 1e-10);
  // Averaging the pointwise min can only be lower.
  EXPECT_LE(machine_belt_fidelity(m, BeltCubature(belt, 6, 8), MachineObjective::mean_of_min), expected + 1e-12);
}

TEST(OptimizeGeneralIsometry, DeterministicAndBoundedByClosedForm) {
  IsometrySearchOptions opts;
  opts.rounds = 2;
  const Belt belt = Belt::make(0.0, kPi);
  const auto a = optimize_general_isometry(belt, 3, 99, opts);
  const auto b = optimize_general_isometry(belt, 3, 99, opts);
  EXPECT_EQ(a.fbar, b.fbar);
  EXPECT_EQ(a.seed, 99U);
  EXPECT_EQ(a.n_restarts, 3);
  ASSERT_TRUE(a.best_isometry.has_value());
  EXPECT_LE(orthonormality_defect(a.best_isometry->isometry()), 1e-12);
  EXPECT_LE(a.fbar, 5.0 / 6.0 + 1e-6);
  EXPECT_GE(a.fbar, 5.0 / 6.0 - 1e-2);
  EXPECT_THROW(optimize_general_isometry(belt, 0, 1), std::invalid_argument);
}

TEST(OptimizeGeneralIsometry, PhaseCovariantCeiling) {
  const Belt belt = Belt::make(kPi / 2.0, kPi / 2.0);
  const auto r = optimize_general_isometry(belt, 20, 5);
  EXPECT_LE(r.fbar, 0.853553 + 1e-6);
  EXPECT_GE(r.fbar, 0.853553 - 1e-4);
}

TEST(OptimizeGeneralIsometry, MinOfMeansObjectiveAlsoBounded) {
  IsometrySearchOptions opts;
  opts.objective = MachineObjective::min_of_means;
  const Belt belt = Belt::make(kPi / 4.0, 3.0 * kPi / 4.0);
  const double closed = solve_optimal(belt).fbar;
  const auto r = optimize_general_isometry(belt, 20, 3, opts);
  EXPECT_LE(r.fbar, closed + 1e-6);
  EXPECT_GE(r.fbar, closed - 1e-4);
}

}  // namespace
}  // namespace clonebelt
