#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "polmax/config.hpp"
#include "polmax/helmholtz_solver.hpp"

namespace polmax {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitResonance = 2, kExitDegenerate = 3, kExitVerifyFailed = 4 };

struct CliOptions {
  std::string config;
  std::optional<double> cutoff;
  std::string case_name;
  std::string recipe;
  std::optional<std::array<int, 3>> k;
  std::string out;
};

std::array<int, 3> parse_k(const std::string& s);

// loads the config, applies --out, dispatches, and maps errors to exit codes
int run_command(const std::string& cmd, const CliOptions& opt, std::ostream& out, std::ostream& err);

int cmd_solve(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& c, double cutoff, std::ostream& out, std::ostream& err);
int cmd_eigenmode(const RunConfig& c, const std::string& case_name, std::array<int, 3> k, std::ostream& out,
                  std::ostream& err);
int cmd_manufacture(const RunConfig& c, const std::string& recipe, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& c, std::ostream& out, std::ostream& err);

SourcePair load_sources(const RunConfig& c, const Grid& g);
nlohmann::ordered_json report_json(const ResidualReport& r, const Tolerances& tol);

}  // namespace polmax
