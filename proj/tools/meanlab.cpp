// Command-line front end: parses flags into a RunConfig, runs it and writes
// the report.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "meanlab/run.hpp"

int main(int argc, char** argv) {
  using namespace meanlab;

  CLI::App app{"Bivariate means: evaluation, characteristic numbers and ordering checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "table";
  app.add_option("--grid-points", config.grid.points, "number of grid t values")
      ->check(CLI::Range(2, 1000000));
  app.add_option("--t-min", config.grid.t_min, "smallest grid t");
  app.add_option("--t-max", config.grid.t_max, "largest grid t");
  app.add_option("--seed", config.grid.seed, "seed of the uniform grid part");
  app.add_option("--tol", config.tol, "relative comparison tolerance");
  app.add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", config.out, "output file (default: standard output)");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"eval", "eval M a b: value of M at (a, b)"},
      {"phi", "phi M t: M(1 - t, 1 + t)"},
      {"sigma", "sigma M: characteristic number M(0+, 2)"},
      {"series", "series M n: even series coefficients of phi up to t^{2n}"},
      {"compare", "compare M N: order of M against N on the grid"},
      {"chain", "chain M1 M2 ...: M1 <= M2 <= ... on the grid"},
      {"best-constant", "best-constant FAMILY TARGET sup_le|inf_ge LO HI [TOL]"},
      {"cancel", "cancel FAMILY CANDIDATE [left|right]: cancelling-mean verdict"},
      {"identity", "identity stolarsky-lehmer a b s: residual of the identity"},
      {"suite", "suite paper: every acceptance check"},
  };
  std::vector<std::string> positional;
  bool left = false;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("args", positional, "positional arguments")->allow_extra_args();
    if (std::string(s.name) == "cancel") sub->add_flag("--left", left, "left cancelling verdict");
    sub->callback([&config, name = std::string(s.name)] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  config.args = positional;
  if (left) config.args.push_back("left");
  try {
    config.format = format_from_string(format);
    const RunOutcome outcome = run(config);
    const std::string text = render(outcome.report, config.format);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(config.out);
      if (!f) {
        std::cerr << "error: cannot open " << config.out << "\n";
        return kExitUsage;
      }
      f << text;
    }
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
