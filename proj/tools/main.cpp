// clonebelt: optimal symmetric 1->2 qubit cloners for latitude belts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace clonebelt;
using namespace clonebelt::cli;

struct GlobalOptions {
  std::string format = "csv";
  bool degrees = false;
  std::string output;
};

double to_radians(double value, bool degrees) { return degrees ? value * kPi / 180.0 : value; }

// Writes to --output if given, otherwise stdout.
int emit(const GlobalOptions& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) {
    std::cerr << "clonebelt: cannot open output file '" << g.output << "'\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal symmetric 1->2 cloning of qubits on a Bloch-sphere latitude belt", "clonebelt"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--degrees", g.degrees, "Read input angles in degrees (output stays in radians)");
  app.add_option("--output", g.output, "Write records to this file instead of standard output");

  double theta1 = 0.0;
  double theta2 = 0.0;
  auto* optimal = app.add_subcommand("optimal", "Optimal machine for one belt");
  optimal->add_option("theta1", theta1, "Upper latitude (polar angle)")->required();
  optimal->add_option("theta2", theta2, "Lower latitude (polar angle)")->required();

  int grid_steps = 0;
  auto* grid = app.add_subcommand("grid", "Optimal fidelity over the whole (theta1, theta2) triangle");
  grid->add_option("--steps", grid_steps, "Steps per axis")->required();

  double curve_theta1 = 0.0;
  int curve_steps = 0;
  auto* curve = app.add_subcommand("curve", "Optimal fidelity for theta2 in [theta1, pi]");
  curve->add_option("--theta1", curve_theta1, "Fixed upper latitude")->required();
  curve->add_option("--steps", curve_steps, "Number of increments")->required();

  std::string suite_name;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run self-checks; exit 1 if any fails");
  verify->add_option("suite", suite_name,
                     "special-points | oracle-angles | oracle-isometry | simulation | quadrature | all")
      ->required();
  verify->add_option("--seed", seed, "Seed for randomized checks");

  for (auto* sub : {optimal, grid, curve, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = g.format == "json" ? Format::json : Format::csv;
    std::vector<OutputRecord> records;
    if (*optimal) {
      records = cmd_optimal(to_radians(theta1, g.degrees), to_radians(theta2, g.degrees));
    } else if (*grid) {
      records = cmd_grid(grid_steps);
    } else if (*curve) {
      records = cmd_curve(to_radians(curve_theta1, g.degrees), curve_steps);
    } else {
      std::ostringstream report;
      const bool ok = cmd_verify(suite_from_string(suite_name), seed, report);
      const int io = emit(g, report.str());
      if (io != kExitOk) return io;
      return ok ? kExitOk : kExitVerifyFailed;
    }
    std::ostringstream out;
    write_records(out, records, format);
    return emit(g, out.str());
  } catch (const UsageError& e) {
    std::cerr << "clonebelt: " << e.what() << '\n';
    return kExitUsage;
  }
}
