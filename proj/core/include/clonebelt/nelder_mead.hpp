#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace clonebelt {

struct NelderMeadOptions {
  int max_iterations = 2000;
  /// Stop once every vertex lies within this distance (max-norm) of the best.
  double size_tol = 1e-12;
  /// Edge length of the initial axis-aligned simplex.
  double initial_step = 0.1;
  /// Dimension-dependent coefficients (Gao & Han), which behave much better
  /// than the classic 1/2/0.5/0.5 set beyond a handful of dimensions.
  bool adaptive = true;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes `f` starting from `x0`. Deterministic: no randomness, and ties
/// in the vertex ordering are broken by insertion order.
template <class F>
NelderMeadResult nelder_mead_minimize(const F& f, std::span<const double> x0,
                                      const NelderMeadOptions& opts = {}) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead_minimize: empty starting point");

  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = opts.adaptive ? 1.0 + 2.0 / dn : 2.0;
  const double contract = opts.adaptive ? 0.75 - 1.0 / (2.0 * dn) : 0.5;
  const double shrink = opts.adaptive ? 1.0 - 1.0 / dn : 0.5;

  NelderMeadResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    const double v = f(std::span<const double>(x));
    return std::isnan(v) ? HUGE_VAL : v;
  };

  std::vector<std::vector<double>> pts(n + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  const auto along = [&](double coeff, const std::vector<double>& worst, std::vector<double>& dst) {
    for (std::size_t k = 0; k < n; ++k) dst[k] = centroid[k] + coeff * (centroid[k] - worst[k]);
  };

  for (out.iterations = 0; out.iterations < opts.max_iterations; ++out.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) size = std::max(size, std::abs(pts[i][k] - pts[best][k]));
    }
    if (size <= opts.size_tol) {
      out.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
    }
    for (auto& c : centroid) c /= dn;

    along(reflect, pts[worst], trial);
    const double f_reflect = eval(trial);
    if (f_reflect < vals[best]) {
      along(expand, pts[worst], trial2);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        pts[worst] = trial2;
        vals[worst] = f_expand;
      } else {
        pts[worst] = trial;
        vals[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < vals[second_worst]) {
      pts[worst] = trial;
      vals[worst] = f_reflect;
      continue;
    }
    if (f_reflect < vals[worst]) {
      along(contract * reflect, pts[worst], trial2);  // outside contraction
      const double f_c = eval(trial2);
      if (f_c <= f_reflect) {
        pts[worst] = trial2;
        vals[worst] = f_c;
        continue;
      }
    } else {
      along(-contract, pts[worst], trial2);  // inside contraction
      const double f_c = eval(trial2);
      if (f_c < vals[worst]) {
        pts[worst] = trial2;
        vals[worst] = f_c;
        continue;
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + shrink * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }

  const auto best_it = std::min_element(vals.begin(), vals.end());
  const auto best_idx = static_cast<std::size_t>(best_it - vals.begin());
  out.x = pts[best_idx];
  out.value = *best_it;
  return out;
}

}  // namespace clonebelt
