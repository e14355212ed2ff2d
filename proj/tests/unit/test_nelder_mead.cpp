#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "clonebelt/nelder_mead.hpp"

namespace clonebelt {
namespace {

TEST(NelderMead, Quadratic2D) {
  const auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 10.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const std::vector<double> x0{0.0, 0.0};
  NelderMeadOptions opts;
  opts.adaptive = false;
  const auto r = nelder_mead_minimize(f, x0, opts);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-10);
  EXPECT_NEAR(r.x[1], -2.0, 1e-10);
  EXPECT_NEAR(r.value, 0.0, 1e-18);
}

TEST(NelderMead, Rosenbrock) {
  const auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const std::vector<double> x0{-1.2, 1.0};
  NelderMeadOptions opts;
  opts.max_iterations = 5000;
  opts.adaptive = false;
  const auto r = nelder_mead_minimize(f, x0, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
  EXPECT_NEAR(r.x[1], 1.0, 1e-8);
}

TEST(NelderMead, AdaptiveCoefficientsInHigherDimension) {
  const auto f = [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * (x[i] - 0.5) * (x[i] - 0.5);
    return s;
  };
  const std::vector<double> x0(12, 0.0);
  NelderMeadOptions opts;
  opts.max_iterations = 20000;
  opts.size_tol = 1e-10;
  const auto r = nelder_mead_minimize(f, x0, opts);
  EXPECT_LT(r.value, 1e-12);
}

TEST(NelderMead, RespectsIterationCapAndIsDeterministic) {
  const auto f = [](std::span<const double> x) { return std::abs(x[0]) + std::abs(x[1] - 3.0); };
  const std::vector<double> x0{5.0, -5.0};
  NelderMeadOptions opts;
  opts.max_iterations = 7;
  const auto a = nelder_mead_minimize(f, x0, opts);
  const auto b = nelder_mead_minimize(f, x0, opts);
  EXPECT_EQ(a.iterations, 7);
  EXPECT_FALSE(a.converged);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.value, b.value);
}

TEST(NelderMead, NanTreatedAsWorst) {
  const auto f = [](std::span<const double> x) { return x[0] < -0.5 ? std::nan("") : (x[0] - 2.0) * (x[0] - 2.0); };
  const std::vector<double> x0{0.0};
  const auto r = nelder_mead_minimize(f, x0);
  EXPECT_NEAR(r.x[0], 2.0, 1e-9);
}

TEST(NelderMead, EmptyStartRejected) {
  const auto f = [](std::span<const double>) { return 0.0; };
  EXPECT_THROW(nelder_mead_minimize(f, std::span<const double>{}), std::invalid_argument);
}

}  // namespace
}  // namespace clonebelt
