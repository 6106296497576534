#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "polmax/maxwell_verifier.hpp"

namespace polmax {

class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& what) : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

struct SourceSpec {
  enum class Kind { Zero, Recipe, Files };
  Kind kind = Kind::Zero;
  std::string recipe;
  std::map<std::string, std::string> files;  // f_h1 ... f_e3 -> path
};

struct RunConfig {
  DomainSpec domain;
  PhysicalParams params;
  bool has_omega = false;
  int n1 = 0, n2 = 0, n3_plus = 0;
  bool has_grid = false;
  SourceSpec source;
  std::string output = "polmax_out";
  Tolerances tol;
  std::map<std::string, std::string> fields;  // E1 ... H3 -> path
  std::string base_dir = ".";
};

RunConfig parse_config(const nlohmann::json& j, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

// path relative to the config file's directory unless absolute
std::string resolve_path(const RunConfig& c, const std::string& p);

Grid config_grid(const RunConfig& c);
void require_omega(const RunConfig& c);

nlohmann::ordered_json config_to_json(const RunConfig& c);

inline const char* kSourceKeys[6] = {"f_h1", "f_h2", "f_h3", "f_e1", "f_e2", "f_e3"};

}  // namespace polmax
