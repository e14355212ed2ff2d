#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace clonebelt {

enum class QuadratureMethod { adaptive_simpson, fixed_panel };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::adaptive_simpson;
  double abs_tol = 1e-12;
  int max_depth = 40;

  void validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be positive");
    if (max_depth < 1) throw std::invalid_argument("QuadratureSpec: max_depth must be >= 1");
  }
};

namespace detail {

template <class F>
double adaptive_simpson_step(const F& f, double a, double b, double fa, double fm, double fb,
                             double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction on [a, b].
template <class F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol, int max_depth) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// Composite Simpson, doubling the panel count until two successive
/// estimates agree to abs_tol or max_depth doublings have been made.
template <class F>
double fixed_panel_simpson(const F& f, double a, double b, double abs_tol, int max_depth) {
  const auto composite = [&](long panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = f(a) + f(b);
    for (long k = 1; k < panels; ++k) sum += f(a + h * static_cast<double>(k)) * (k % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
  };
  long panels = 2;
  double prev = composite(panels);
  for (int depth = 0; depth < max_depth && panels < (1L << 24); ++depth) {
    panels *= 2;
    const double next = composite(panels);
    if (std::abs(next - prev) <= abs_tol) return next;
    prev = next;
  }
  return prev;
}

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< on [-1, 1], ascending
  std::vector<double> weights;  ///< sum to 2
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

template <class F>
double integrate(const F& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  switch (spec.method) {
    case QuadratureMethod::adaptive_simpson:
      return adaptive_simpson(f, a, b, spec.abs_tol, spec.max_depth);
    case QuadratureMethod::fixed_panel:
      return fixed_panel_simpson(f, a, b, spec.abs_tol, spec.max_depth);
  }
  throw std::invalid_argument("integrate: unknown quadrature method");
}

}  // namespace clonebelt
