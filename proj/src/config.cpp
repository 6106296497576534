#include "polmax/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "polmax/fields.hpp"

namespace polmax {

namespace fs = std::filesystem;

namespace {

using json = nlohmann::json;

double get_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(path, fmt::format("missing key '{}'", path));
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(path, fmt::format("key '{}' must be a number", path));
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& key, const std::string& path, double fallback) {
  return obj.contains(key) ? get_number(obj, key, path) : fallback;
}

int get_count(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(path, fmt::format("missing key '{}'", path));
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(path, fmt::format("key '{}' must be a nonnegative integer", path));
  return v.get<int>();
}

const json& get_object(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(key, fmt::format("missing key '{}'", key));
  if (!obj.at(key).is_object()) throw ConfigError(key, fmt::format("key '{}' must be an object", key));
  return obj.at(key);
}

std::map<std::string, std::string> string_map(const json& obj, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, fmt::format("key '{}' must be an object of paths", path));
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_string()) throw ConfigError(path + "." + k, fmt::format("key '{}.{}' must be a path string", path, k));
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

RunConfig parse_config(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  RunConfig c;
  c.base_dir = base_dir;

  const json& dom = get_object(j, "domain");
  c.domain.l1 = get_number(dom, "l1", "domain.l1");
  c.domain.l2 = get_number(dom, "l2", "domain.l2");
  c.domain.l3_plus = get_number(dom, "l3_plus", "domain.l3_plus");
  c.domain.l3_minus = get_number(dom, "l3_minus", "domain.l3_minus");
  try {
    validate_domain(c.domain);
  } catch (const GeometryError& e) {
    throw ConfigError("domain." + e.field(), e.what());
  }

  if (j.contains("params")) {
    const json& p = get_object(j, "params");
    c.params.eps = get_number_or(p, "eps", "params.eps", 1.0);
    c.params.mu = get_number_or(p, "mu", "params.mu", 1.0);
    if (p.contains("omega") && p.contains("omega2"))
      throw ConfigError("params.omega", "give either 'params.omega' or 'params.omega2', not both");
    if (p.contains("omega")) {
      c.params.omega = get_number(p, "omega", "params.omega");
      c.has_omega = true;
    } else if (p.contains("omega2")) {
      const double w2 = get_number(p, "omega2", "params.omega2");
      if (!(w2 > 0.0)) throw ConfigError("params.omega2", "NonPositiveParameter(omega2): must be > 0");
      c.params.omega = std::sqrt(w2);
      c.has_omega = true;
    }
    try {
      validate_domain(c.domain, c.params);
    } catch (const GeometryError& e) {
      throw ConfigError("params." + e.field(), e.what());
    }
  }

  if (j.contains("grid")) {
    const json& g = get_object(j, "grid");
    c.n1 = get_count(g, "n1", "grid.n1");
    c.n2 = get_count(g, "n2", "grid.n2");
    c.n3_plus = get_count(g, "n3_plus", "grid.n3_plus");
    c.has_grid = true;
    (void)config_grid(c);
  }

  if (j.contains("source")) {
    const json& s = j.at("source");
    if (s.is_string() && s.get<std::string>() == "zero") {
      c.source.kind = SourceSpec::Kind::Zero;
    } else if (s.is_object() && s.contains("recipe")) {
      if (!s.at("recipe").is_string()) throw ConfigError("source.recipe", "key 'source.recipe' must be a string");
      c.source.kind = SourceSpec::Kind::Recipe;
      c.source.recipe = s.at("recipe").get<std::string>();
    } else if (s.is_object() && s.contains("files")) {
      c.source.kind = SourceSpec::Kind::Files;
      c.source.files = string_map(s.at("files"), "source.files");
      for (const char* k : kSourceKeys)
        if (!c.source.files.count(k))
          throw ConfigError(std::string("source.files.") + k, fmt::format("missing key 'source.files.{}'", k));
    } else if (s.is_object() && (s.empty() || s.contains("zero"))) {
      c.source.kind = SourceSpec::Kind::Zero;
    } else {
      throw ConfigError("source", "key 'source' must be \"zero\", {\"recipe\": ...} or {\"files\": {...}}");
    }
  }

  if (j.contains("output")) {
    if (!j.at("output").is_string()) throw ConfigError("output", "key 'output' must be a directory path");
    c.output = j.at("output").get<std::string>();
  }

  if (j.contains("tolerances")) {
    const json& t = get_object(j, "tolerances");
    c.tol.resonance = get_number_or(t, "resonance", "tolerances.resonance", c.tol.resonance);
    c.tol.weak = get_number_or(t, "weak", "tolerances.weak", c.tol.weak);
    c.tol.trace = get_number_or(t, "trace", "tolerances.trace", c.tol.trace);
    c.tol.strong = get_number_or(t, "strong", "tolerances.strong", c.tol.strong);
    c.tol.interp = get_number_or(t, "interp", "tolerances.interp", c.tol.interp);
    for (auto [v, k] : {std::pair{c.tol.resonance, "resonance"}, std::pair{c.tol.weak, "weak"},
                        std::pair{c.tol.trace, "trace"}, std::pair{c.tol.strong, "strong"},
                        std::pair{c.tol.interp, "interp"}})
      if (!(v > 0.0)) throw ConfigError(std::string("tolerances.") + k, fmt::format("tolerances.{} must be > 0", k));
  }

  if (j.contains("fields")) {
    c.fields = string_map(j.at("fields"), "fields");
    for (int q = 0; q < 6; ++q)
      if (!c.fields.count(comp_name(q)))
        throw ConfigError(std::string("fields.") + comp_name(q), fmt::format("missing key 'fields.{}'", comp_name(q)));
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("--config", "cannot open config file " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", fmt::format("{}: JSON parse error: {}", path, e.what()));
  }
  const fs::path dir = fs::path(path).parent_path();
  return parse_config(j, dir.empty() ? "." : dir.string());
}

std::string resolve_path(const RunConfig& c, const std::string& p) {
  const fs::path q(p);
  return q.is_absolute() ? p : (fs::path(c.base_dir) / q).string();
}

Grid config_grid(const RunConfig& c) {
  if (!c.has_grid) throw ConfigError("grid", "missing key 'grid'");
  try {
    return build_grid(c.domain, c.n1, c.n2, c.n3_plus);
  } catch (const GeometryError& e) {
    const std::string key = e.field() == "n3_minus" ? "grid.n3_plus" : "grid." + e.field();
    throw ConfigError(key, e.what());
  }
}

void require_omega(const RunConfig& c) {
  if (!c.has_omega) throw ConfigError("params.omega", "missing key 'params.omega' (or 'params.omega2')");
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["domain"] = {{"l1", c.domain.l1}, {"l2", c.domain.l2}, {"l3_plus", c.domain.l3_plus}, {"l3_minus", c.domain.l3_minus}};
  j["params"] = {{"eps", c.params.eps}, {"mu", c.params.mu}};
  if (c.has_omega) j["params"]["omega"] = c.params.omega;
  if (c.has_grid) j["grid"] = {{"n1", c.n1}, {"n2", c.n2}, {"n3_plus", c.n3_plus}};
  switch (c.source.kind) {
    case SourceSpec::Kind::Zero: j["source"] = "zero"; break;
    case SourceSpec::Kind::Recipe: j["source"] = {{"recipe", c.source.recipe}}; break;
    case SourceSpec::Kind::Files: {
      nlohmann::ordered_json files;
      for (const char* k : kSourceKeys) files[k] = c.source.files.at(k);
      j["source"] = {{"files", files}};
      break;
    }
  }
  j["output"] = c.output;
  j["tolerances"] = {{"resonance", c.tol.resonance}, {"weak", c.tol.weak}, {"trace", c.tol.trace},
                     {"strong", c.tol.strong}, {"interp", c.tol.interp}};
  if (!c.fields.empty()) {
    nlohmann::ordered_json f;
    for (int q = 0; q < 6; ++q) f[comp_name(q)] = c.fields.at(comp_name(q));
    j["fields"] = f;
  }
  return j;
}

}  // namespace polmax
