// Self-checks behind `clonebelt verify`. Every line printed depends only on
// the suite and seed, so two runs with equal arguments are byte-identical.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "clonebelt/oracle.hpp"
#include "commands.hpp"

namespace clonebelt::cli {

namespace {

class Report {
 public:
  explicit Report(std::ostream& os) : os_(os) {}

  void check(std::string_view suite, std::string_view name, bool ok, const std::string& detail) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s  %-15s  %-26s  %s\n", ok ? "PASS" : "FAIL",
                  std::string(suite).c_str(), std::string(name).c_str(), detail.c_str());
    os_ << line;
    (ok ? passed_ : failed_) += 1;
  }

  [[nodiscard]] bool finish() {
    os_ << "summary: " << passed_ << " passed, " << failed_ << " failed\n";
    return failed_ == 0;
  }

 private:
  std::ostream& os_;
  int passed_ = 0;
  int failed_ = 0;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string within(double err, double tol) { return "err=" + sci(err) + " tol=" + sci(tol); }

Belt random_belt(Rng& rng) {
  double a = rng.uniform(0.0, kPi);
  double b = rng.uniform(0.0, kPi);
  if (a > b) std::swap(a, b);
  return Belt::make(a, b);
}

void special_points(Report& rep) {
  constexpr std::string_view s = "special-points";
  const auto uqcm = solve_optimal(Belt::make(0.0, kPi));
  rep.check(s, "uqcm-fidelity", std::abs(uqcm.fbar - 5.0 / 6.0) <= 1e-12,
            within(std::abs(uqcm.fbar - 5.0 / 6.0), 1e-12));
  const double cos_err = std::max(std::abs(std::cos(uqcm.angles.alpha) - std::sqrt(2.0 / 3.0)),
                                  std::abs(std::cos(uqcm.angles.beta) - std::sqrt(2.0 / 3.0)));
  rep.check(s, "uqcm-angles", cos_err <= 1e-10, within(cos_err, 1e-10));

  const auto pc = solve_optimal(Belt::make(kPi / 2.0, kPi / 2.0));
  const double pc_err = std::abs(pc.fbar - 0.5 * (1.0 + 1.0 / std::sqrt(2.0)));
  rep.check(s, "phase-covariant", pc_err <= 1e-12, within(pc_err, 1e-12));

  const auto curve = cmd_curve(kPi / 4.0, 360);
  const auto it = std::min_element(curve.begin(), curve.end(),
                                   [](const auto& x, const auto& y) { return x.fbar < y.fbar; });
  const double step = (kPi - kPi / 4.0) / 360.0;
  const double arg_err = std::abs(it->theta2 - 3.0 * kPi / 4.0);
  rep.check(s, "mirror-argmin", arg_err <= step * (1.0 + 1e-9), within(arg_err, step));
  rep.check(s, "mirror-min-value", std::abs(it->fbar - 0.8392261845226187) <= 1e-4,
            "fbar=" + sci(it->fbar));

  double lowest = 1.0;
  for (const auto& cell : optimal_fidelity_surface(50)) lowest = std::min(lowest, cell.fbar);
  rep.check(s, "global-lower-bound", lowest >= 5.0 / 6.0 - 1e-12, "min fbar=" + sci(lowest));
}

void simulation(Report& rep, std::uint64_t seed) {
  constexpr std::string_view s = "simulation";
  Rng rng(seed);
  double fid_err = 0.0;
  double sym_err = 0.0;
  double phi_err = 0.0;
  bool valid = true;
  constexpr int cases = 1000;
  for (int i = 0; i < cases; ++i) {
    const CloneAngles a{rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)};
    const double theta = rng.uniform(0.0, kPi);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double closed = pointwise_fidelity(a, theta);
    const auto sim = simulated_fidelity(a, theta, phi);
    fid_err = std::max({fid_err, std::abs(sim.a - closed), std::abs(sim.b - closed)});
    phi_err = std::max(phi_err, std::abs(simulated_fidelity(a, theta, 0.0).a - sim.a));
    const auto out = apply_clone(a, make_ket(theta, phi));
    const auto ra = partial_trace(out, Qubit::a);
    const auto rb = partial_trace(out, Qubit::b);
    sym_err = std::max(sym_err, ra.max_abs_diff(rb));
    valid = valid && ra.is_valid_state() && rb.is_valid_state();
  }
  const std::string n = std::to_string(cases) + " cases ";
  rep.check(s, "closed-form-vs-trace", fid_err <= 1e-12, n + within(fid_err, 1e-12));
  rep.check(s, "clone-symmetry", sym_err <= 1e-13, n + within(sym_err, 1e-13));
  rep.check(s, "azimuth-independence", phi_err <= 1e-12, n + within(phi_err, 1e-12));
  rep.check(s, "density-matrices-valid", valid, n);
}

void quadrature(Report& rep, std::uint64_t seed) {
  constexpr std::string_view s = "quadrature";
  Rng rng(seed ^ 0x51ULL);
  double err = 0.0;
  constexpr int cases = 100;
  for (int i = 0; i < cases; ++i) {
    const Belt belt = random_belt(rng);
    const CloneAngles a{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
    err = std::max(err, std::abs(quad_mean_fidelity(belt, a) - mean_fidelity(belt, a)));
  }
  rep.check(s, "analytic-vs-quadrature", err <= 1e-10, std::to_string(cases) + " cases " + within(err, 1e-10));
}

void oracle_angles(Report& rep, std::uint64_t seed) {
  constexpr std::string_view s = "oracle-angles";
  Rng rng(seed ^ 0xA9ULL);
  std::vector<Belt> belts = {Belt::make(0.0, kPi), Belt::make(kPi / 4.0, 3.0 * kPi / 4.0),
                             Belt::make(0.0, kPi / 2.0), Belt::make(kPi / 2.0, kPi / 2.0),
                             Belt::make(0.3, 2.0)};
  for (int i = 0; i < 40; ++i) belts.push_back(random_belt(rng));
  double gap = 0.0;
  double excess = 0.0;
  for (const auto& belt : belts) {
    const double closed = solve_optimal(belt).fbar;
    const double numeric = optimize_angles_numeric(belt, 64, 2000).fbar;
    gap = std::max(gap, std::abs(closed - numeric));
    excess = std::max(excess, numeric - closed);
  }
  const std::string n = std::to_string(belts.size()) + " belts ";
  rep.check(s, "closed-form-vs-numeric", gap <= 1e-8, n + within(gap, 1e-8));
  rep.check(s, "numeric-never-exceeds", excess <= 1e-9, n + "excess=" + sci(excess));
}

void oracle_isometry(Report& rep, std::uint64_t seed) {
  constexpr std::string_view s = "oracle-isometry";
  const std::vector<Belt> belts = {Belt::make(0.0, kPi), Belt::make(kPi / 2.0, kPi / 2.0),
                                   Belt::make(kPi / 4.0, 3.0 * kPi / 4.0), Belt::make(0.0, kPi / 2.0),
                                   Belt::make(0.3, 2.0)};
  for (const auto& belt : belts) {
    const double closed = solve_optimal(belt).fbar;
    const auto found = optimize_general_isometry(belt, 20, seed);
    char name[64];
    std::snprintf(name, sizeof name, "belt(%.4f,%.4f)", belt.theta1, belt.theta2);
    const double diff = found.fbar - closed;
    rep.check(s, name, diff <= 1e-6 && diff >= -1e-4, "general-symmetric=" + sci(diff));
  }
}

}  // namespace

bool cmd_verify(Suite suite, std::uint64_t seed, std::ostream& os) {
  os << "clonebelt verify suite=" << to_string(suite) << " seed=" << seed << '\n';
  Report rep(os);
  const auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::special_points)) special_points(rep);
  if (want(Suite::simulation)) simulation(rep, seed);
  if (want(Suite::quadrature)) quadrature(rep, seed);
  if (want(Suite::oracle_angles)) oracle_angles(rep, seed);
  if (want(Suite::oracle_isometry)) oracle_isometry(rep, seed);
  return rep.finish();
}

}  // namespace clonebelt::cli
