#include "polmax/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "polmax/field_io.hpp"
#include "polmax/oracle.hpp"

namespace polmax {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::array<int, 3> parse_k(const std::string& s) {
  std::array<int, 3> k{0, 0, 0};
  std::stringstream ss(s);
  std::string part;
  int n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3) throw ConfigError("--k", "--k takes at most three comma-separated integers");
    try {
      std::size_t used = 0;
      k[n] = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("--k", fmt::format("--k entry '{}' is not an integer", part));
    }
    ++n;
  }
  if (n == 0) throw ConfigError("--k", "--k needs k1[,k2[,k3]]");
  return k;
}

namespace {

fs::path out_dir(const RunConfig& c) {
  fs::path p(c.output);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw ConfigError("output", fmt::format("cannot create output directory {}: {}", c.output, ec.message()));
  return p;
}

const char* file_name(int comp) {
  static const char* names[6] = {"E1.pmf", "E2.pmf", "E3.pmf", "H1.pmf", "H2.pmf", "H3.pmf"};
  return names[comp];
}

void write_fields(const fs::path& dir, const FieldPair& f) {
  for (int q = 0; q < 6; ++q) write_field_file((dir / file_name(q)).string(), {comp_name(q), f.layout[q], f.c[q]});
}

void write_sources(const fs::path& dir, const SourcePair& s) {
  for (int q = 0; q < 6; ++q) {
    const ScalarField& f = q < 3 ? s.f_h.c[q] : s.f_e.c[q - 3];
    write_field_file((dir / (std::string(kSourceKeys[q]) + ".pmf")).string(), {kSourceKeys[q], X3Kind::Nodal, f});
  }
}

void write_fields_vtk(const fs::path& dir, const FieldPair& f, const std::string& title) {
  std::vector<NamedField> nf;
  for (int q = 0; q < 6; ++q) nf.push_back({comp_name(q), &f.c[q]});
  write_vtk((dir / "fields.vtk").string(), nf, title);
}

// config that reruns verification on the files written next to it
void write_verify_config(const fs::path& dir, RunConfig c, bool sources_written) {
  for (int q = 0; q < 6; ++q) c.fields[comp_name(q)] = file_name(q);
  if (sources_written) {
    c.source.kind = SourceSpec::Kind::Files;
    c.source.files.clear();
    for (const char* k : kSourceKeys) c.source.files[k] = std::string(k) + ".pmf";
  } else if (c.source.kind == SourceSpec::Kind::Files) {
    for (auto& [k, v] : c.source.files) v = fs::absolute(resolve_path(c, v)).string();
  }
  c.output = ".";
  write_json((dir / "verify_config.json").string(), config_to_json(c));
}

ojson entry_json(const SpectrumEntry& e) {
  return ojson{{"value", e.value}, {"k1", e.k1}, {"k2", e.k2}, {"k3", e.k3}, {"provenance", to_string(e.provenance)}};
}

ojson resonance_json(const ResonanceDiagnostic& r) {
  return ojson{{"dist_to_sigma_M", r.dist_to_sigma_M},
               {"rel_to_sigma_M", r.rel_sigma_M},
               {"nearest", entry_json(r.nearest)},
               {"dist_to_sigma_l1", r.dist_to_sigma_l1},
               {"rel_to_sigma_l1", r.rel_sigma_l1},
               {"nearest_axial", entry_json(r.nearest_axial)},
               {"resonant", r.resonant}};
}

void print_resonance(std::ostream& err, const ResonantFrequency& e) {
  fmt::print(err, "{}\nnearest eigenvalue {:.17g} at (k1,k2,k3) = ({},{},{}), provenance {}\n", e.what(),
             e.entry.value, e.entry.k1, e.entry.k2, e.entry.k3, to_string(e.entry.provenance));
}

FieldPair read_fields(const RunConfig& c) {
  if (c.fields.empty()) throw ConfigError("fields", "missing key 'fields'");
  FieldPair f;
  for (int q = 0; q < 6; ++q) {
    const FieldFile ff = read_field_file(resolve_path(c, c.fields.at(comp_name(q))));
    if (ff.name != comp_name(q))
      throw FieldIoError(fmt::format("fields.{} holds component '{}'", comp_name(q), ff.name));
    if (q > 0 && !same_grid(ff.field.grid, f.c[0].grid))
      throw FieldIoError(fmt::format("header mismatch: fields.{} grid differs from fields.E1", comp_name(q)));
    f.c[q] = ff.field;
    f.layout[q] = ff.layout;
  }
  if (c.has_grid && !same_grid(config_grid(c), f.c[0].grid))
    throw FieldIoError("header mismatch: field files disagree with the config grid");
  return f;
}

}  // namespace

SourcePair load_sources(const RunConfig& c, const Grid& g) {
  switch (c.source.kind) {
    case SourceSpec::Kind::Zero: return SourcePair::zeros(g);
    case SourceSpec::Kind::Recipe: {
      require_omega(c);
      try {
        return sample(manufacture(c.source.recipe, g.domain, c.params), g).sources;
      } catch (const std::invalid_argument& e) {
        throw ConfigError("source.recipe", e.what());
      }
    }
    case SourceSpec::Kind::Files: {
      SourcePair s;
      for (int q = 0; q < 6; ++q) {
        const FieldFile ff = read_field_file(resolve_path(c, c.source.files.at(kSourceKeys[q])));
        if (!same_grid(ff.field.grid, g))
          throw FieldIoError(fmt::format("header mismatch: source.files.{} grid differs from the field grid", kSourceKeys[q]));
        (q < 3 ? s.f_h.c[q] : s.f_e.c[q - 3]) = ff.field;
      }
      return s;
    }
  }
  return SourcePair::zeros(g);
}

ojson report_json(const ResidualReport& r, const Tolerances& tol) {
  ojson j;
  j["faraday"] = {{"lower", r.faraday[0]}, {"upper", r.faraday[1]}, {"total", r.faraday_norm()},
                  {"relative", r.faraday_relative()}};
  j["ampere"] = {{"lower", r.ampere[0]}, {"upper", r.ampere[1]}, {"total", r.ampere_norm()},
                 {"relative", r.ampere_relative()}};
  j["fd_order"] = r.fd_order;
  ojson w;
  for (int q = 0; q < 6; ++q) w[comp_name(q)] = r.helmholtz_weak[q];
  j["helmholtz_weak"] = w;
  ojson t = ojson::array();
  for (const TraceValue& v : r.traces)
    t.push_back({{"name", v.name},
                 {"value", v.value},
                 {"method", v.spectral ? "spectral" : "extrapolated"},
                 {"relative", v.relative()}});
  j["traces"] = t;
  j["div_E_pairing"] = r.div_E_pairing;
  j["div_H_pairing"] = r.div_H_pairing;
  const auto bad = failing_checks(r, tol);
  j["failing"] = bad;
  j["pass"] = bad.empty();
  return j;
}

int cmd_solve(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_omega(c);
  const Grid g = config_grid(c);
  const SourcePair src = load_sources(c, g);
  SolveResult res;
  try {
    res = solve(src, c.params, c.tol.resonance);
  } catch (const ResonantFrequency& e) {
    print_resonance(err, e);
    return kExitResonance;
  }
  const fs::path dir = out_dir(c);
  write_fields(dir, res.fields);
  const ResidualReport rep = verify(res.fields, src, c.params);

  ojson j;
  j["solve"] = {{"resonance", resonance_json(res.report.resonance)},
                {"e1_modes", res.report.e1_modes},
                {"h1_modes", res.report.h1_modes},
                {"transverse_columns", res.report.transverse_columns}};
  j["residuals"] = report_json(rep, c.tol);
  if (c.source.kind == SourceSpec::Kind::Recipe) {
    const SampledCase ref = sample(manufacture(c.source.recipe, g.domain, c.params), g);
    ojson e;
    double worst = 0.0;
    for (int q = 0; q < 6; ++q) {
      const double err_q = l2_norm(res.fields.c[q] - ref.fields.c[q]);
      e[comp_name(q)] = err_q;
      worst = std::max(worst, err_q);
    }
    j["oracle_error"] = e;
    fmt::print(out, "max L2 error vs oracle: {:.3e}\n", worst);
  }
  write_json((dir / "report.json").string(), j);
  write_verify_config(dir, c, false);
  fmt::print(out, "solved on {}x{}x({}+{}) in {:.3f} s; wrote {}\n", g.n1, g.n2, g.n3_minus, g.n3_plus,
             res.report.wall_time_s, dir.string());
  return kExitOk;
}

int cmd_spectrum(const RunConfig& c, double cutoff, std::ostream& out, std::ostream&) {
  if (!(cutoff >= 0.0)) throw ConfigError("--cutoff", "--cutoff must be >= 0");
  const auto entries = maxwell_spectrum(c.domain, c.params, cutoff);
  const fs::path dir = out_dir(c);
  std::ofstream os(dir / "spectrum.csv");
  if (!os) throw FieldIoError("cannot write spectrum.csv");
  write_spectrum_csv(os, entries);
  fmt::print(out, "{} entries up to {:.17g}; wrote {}\n", entries.size(), cutoff, (dir / "spectrum.csv").string());
  return kExitOk;
}

int cmd_eigenmode(const RunConfig& c, const std::string& case_name, std::array<int, 3> k, std::ostream& out,
                  std::ostream& err) {
  const Grid g = config_grid(c);
  ModeFields m;
  try {
    if (case_name == "helmholtz-only") {
      m = helmholtz_only_mode(c.domain, c.params, k[0]);
    } else if (case_name == "full-reflection-upper" || case_name == "full-reflection-lower") {
      m = full_reflection_mode(c.domain, c.params, case_name.back() == 'r' ? ModeCase::Upper : ModeCase::Lower, k);
    } else {
      ModeCase mc;
      try {
        mc = mode_case_from_string(case_name);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("--case", e.what());
      }
      m = eigenmode(c.domain, c.params, mc, k);
    }
  } catch (const DegenerateMode& e) {
    fmt::print(err, "DegenerateMode: {}\n", e.what());
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--k", e.what());
  }
  const FieldPair f = sample(m, g);
  const fs::path dir = out_dir(c);
  write_fields(dir, f);
  write_fields_vtk(dir, f, fmt::format("polmax {} mode ({},{},{})", case_name, k[0], k[1], k[2]));
  write_json((dir / "mode.json").string(),
             ojson{{"case", case_name}, {"entry", entry_json(m.entry)}, {"omega", m.params.omega}});
  RunConfig vc = c;
  vc.params = m.params;
  vc.has_omega = true;
  vc.source = SourceSpec{};
  write_verify_config(dir, vc, false);
  fmt::print(out, "{} mode ({},{},{}): omega^2 = {:.17g}; wrote {}\n", case_name, k[0], k[1], k[2], m.entry.value,
             dir.string());
  return kExitOk;
}

int cmd_manufacture(const RunConfig& c, const std::string& recipe, std::ostream& out, std::ostream& err) {
  require_omega(c);
  const Grid g = config_grid(c);
  ManufacturedCase mc;
  try {
    mc = manufacture(recipe, c.domain, c.params);
  } catch (const RecipeViolatesConstraints& e) {
    fmt::print(err, "{}\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--recipe", e.what());
  }
  const SampledCase s = sample(mc, g);
  const fs::path dir = out_dir(c);
  write_fields(dir, s.fields);
  write_sources(dir, s.sources);
  write_fields_vtk(dir, s.fields, "polmax manufactured " + recipe);
  RunConfig vc = c;
  write_verify_config(dir, vc, true);
  fmt::print(out, "manufactured '{}'; wrote {}\n", recipe, dir.string());
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_omega(c);
  const FieldPair f = read_fields(c);
  const SourcePair src = load_sources(c, f.grid());
  const ResidualReport r = verify(f, src, c.params);
  const ojson j = report_json(r, c.tol);
  out << json_text(j);
  const auto bad = failing_checks(r, c.tol);
  if (!bad.empty()) {
    std::string names;
    for (const auto& b : bad) names += (names.empty() ? "" : " ") + b;
    fmt::print(err, "verification failed: {}\n", names);
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_decompose(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Grid g = config_grid(c);
  const SourcePair src = load_sources(c, g);
  const fs::path dir = out_dir(c);
  ojson j;
  auto part = [&](const VectorField& f, Potential pot, const char* tilde, const char* grad, const char* key) {
    const Decomposition d = project(f, pot);
    for (int q = 0; q < 3; ++q) {
      write_field_file((dir / fmt::format("{}{}.pmf", tilde, q + 1)).string(),
                       {fmt::format("{}{}", tilde, q + 1), X3Kind::Nodal, d.tilde.c[q]});
      write_field_file((dir / fmt::format("{}{}.pmf", grad, q + 1)).string(),
                       {fmt::format("{}{}", grad, q + 1), X3Kind::Nodal, d.grad.c[q]});
    }
    const double nf = l2_norm(f), nt = l2_norm(d.tilde), ng = l2_norm(d.grad);
    const double ip = std::abs(inner(d.tilde, d.grad));
    j[key] = {{"norm_input", nf},
              {"norm_tilde", nt},
              {"norm_grad", ng},
              {"inner_tilde_grad", ip},
              {"orthogonality", nf > 0.0 ? ip / (nf * nf) : 0.0},
              {"max_gradient_pairing", max_gradient_pairing(d.tilde, pot)}};
  };
  part(src.f_e, Potential::X0, "f_tilde_e", "grad_phi", "e");
  part(src.f_h, Potential::Y0, "f_tilde_h", "grad_psi", "h");
  write_json((dir / "decompose.json").string(), j);
  out << json_text(j);
  return kExitOk;
}

int run_command(const std::string& cmd, const CliOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (const char* t = std::getenv("POLMAX_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(t, &end, 10);
      if (end == t || *end != '\0' || v < 1) throw ConfigError("POLMAX_THREADS", "POLMAX_THREADS must be a positive integer");
    }
    if (opt.config.empty()) throw ConfigError("--config", "missing --config <path>");
    RunConfig c = load_config(opt.config);
    // --out is relative to the working directory, the config key to the config file
    c.output = opt.out.empty() ? resolve_path(c, c.output) : fs::absolute(opt.out).string();
    if (cmd == "solve") return cmd_solve(c, out, err);
    if (cmd == "spectrum") {
      if (!opt.cutoff) throw ConfigError("--cutoff", "spectrum needs --cutoff <value>");
      return cmd_spectrum(c, *opt.cutoff, out, err);
    }
    if (cmd == "eigenmode") {
      if (opt.case_name.empty()) throw ConfigError("--case", "eigenmode needs --case <name>");
      if (!opt.k) throw ConfigError("--k", "eigenmode needs --k k1,k2,k3");
      return cmd_eigenmode(c, opt.case_name, *opt.k, out, err);
    }
    if (cmd == "manufacture") {
      std::string recipe = !opt.recipe.empty() ? opt.recipe : opt.case_name;
      if (recipe.empty() && c.source.kind == SourceSpec::Kind::Recipe) recipe = c.source.recipe;
      if (recipe.empty()) throw ConfigError("--recipe", "manufacture needs --recipe <name> or source.recipe");
      return cmd_manufacture(c, recipe, out, err);
    }
    if (cmd == "verify") return cmd_verify(c, out, err);
    if (cmd == "decompose") return cmd_decompose(c, out, err);
    throw ConfigError("<command>", "unknown command '" + cmd + "'");
  } catch (const ConfigError& e) {
    fmt::print(err, "config error [{}]: {}\n", e.key(), e.what());
  } catch (const FieldIoError& e) {
    fmt::print(err, "field file error: {}\n", e.what());
  } catch (const GeometryError& e) {
    fmt::print(err, "geometry error [{}]: {}\n", e.field(), e.what());
  } catch (const BasisError& e) {
    fmt::print(err, "shape error: {}\n", e.what());
  }
  return kExitInput;
}

}  // namespace polmax
