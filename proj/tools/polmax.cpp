#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polmax/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polmax: Maxwell solver with a polarization interface on a periodic cuboid"};
  app.require_subcommand(1);

  polmax::CliOptions opt;
  std::string k_text;
  double cutoff = 0.0;

  const char* names[] = {"solve", "spectrum", "eigenmode", "manufacture", "verify", "decompose"};
  const char* help[] = {"solve for the configured sources",
                        "write the resonance spectrum as CSV",
                        "write a closed-form eigenmode or counterexample",
                        "write a manufactured solution and its sources",
                        "check field files against the Maxwell system",
                        "split sources into gradient and orthogonal parts"};
  for (int i = 0; i < 6; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", opt.config, "run configuration (JSON)")->required();
    sub->add_option("--out", opt.out, "output directory (overrides the config)");
    if (std::string(names[i]) == "spectrum")
      sub->add_option("--cutoff", cutoff, "largest eigenvalue listed")->required();
    if (std::string(names[i]) == "eigenmode") {
      sub->add_option("--case", opt.case_name,
                      "bulk | upper | lower | full-reflection-upper | full-reflection-lower | helmholtz-only")
          ->required();
      sub->add_option("--k", k_text, "mode indices k1,k2,k3")->required();
    }
    if (std::string(names[i]) == "manufacture") {
      sub->add_option("--recipe", opt.recipe, "recipe name");
      sub->add_option("--case", opt.case_name, "alias for --recipe");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : polmax::kExitInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "spectrum") opt.cutoff = cutoff;
  if (!k_text.empty()) {
    try {
      opt.k = polmax::parse_k(k_text);
    } catch (const polmax::ConfigError& e) {
      std::cerr << "config error [" << e.key() << "]: " << e.what() << "\n";
      return polmax::kExitInput;
    }
  }
  return polmax::run_command(cmd, opt, std::cout, std::cerr);
}
