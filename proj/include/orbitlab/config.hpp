#pragma once

#include "orbitlab/serialize.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

struct BoundConfig {
  std::optional<long> t;  // t for the graph lemma, t_N for the bounds report
  long l = 1;
  double slack = 0;       // stands in for every o(1)
  double c0 = 1;
  std::string t_rule = "auto";  // auto | double_log | triple_log
  bool proof_variant = false;

  friend bool operator==(const BoundConfig&, const BoundConfig&) = default;
};

struct ExperimentConfig {
  std::vector<Polynomial> system;
  Rational seed;
  std::optional<GroupSpec> group;
  json set;  // set fragment, null means Gamma
  int depth = 8;
  std::vector<int> ladder;  // empty means powers of two up to depth
  BoundConfig bounds;
  std::optional<Polynomial> g;
  std::vector<Rational> query;
  Word word;
  bool relaxed = false;
  std::size_t budget = kDefaultBudget;
  long radius = 10;
  std::optional<std::string> out;
  std::optional<std::string> cache;
};

inline json config_to_json(const ExperimentConfig& c) {
  json sys = json::array();
  for (const auto& f : c.system) sys.push_back(f.str());
  json j{{"system", sys},
         {"seed", c.seed.str()},
         {"depth", c.depth},
         {"budget", c.budget},
         {"radius", c.radius},
         {"relaxed", c.relaxed}};
  if (c.group) j["group"] = group_to_json(*c.group);
  if (!c.set.is_null()) j["set"] = c.set;
  if (!c.ladder.empty()) j["ladder"] = c.ladder;
  json b{{"l", c.bounds.l},
         {"slack", c.bounds.slack},
         {"c0", c.bounds.c0},
         {"t_rule", c.bounds.t_rule},
         {"proof_variant", c.bounds.proof_variant}};
  if (c.bounds.t) b["t"] = *c.bounds.t;
  j["bounds"] = b;
  if (c.g) j["g"] = c.g->str();
  if (!c.query.empty()) {
    json q = json::array();
    for (const auto& x : c.query) q.push_back(x.str());
    j["query"] = q;
  }
  if (!c.word.empty()) j["word"] = c.word;
  if (c.out) j["out"] = *c.out;
  if (c.cache) j["cache"] = *c.cache;
  return j;
}

inline GroupPtr config_group(const ExperimentConfig& c) {
  return c.group ? std::make_shared<const GroupSpec>(*c.group) : nullptr;
}

/// The configured set, Gamma when no fragment is given.
inline SetPredicate config_set(const ExperimentConfig& c) {
  const GroupPtr g = config_group(c);
  if (c.set.is_null()) {
    if (!g) throw ConfigError("config: need a group or a set");
    return SetPredicate::gamma(g);
  }
  return set_from_json(c.set, g, c.radius);
}

inline SystemF config_system(const ExperimentConfig& c) {
  try {
    return SystemF(c.system);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("system: ") + e.what());
  }
}

inline ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig c;
  try {
    for (const auto& f : j.at("system")) c.system.push_back(polynomial_from_json(f));
    c.seed = rational_from_json(j.at("seed"));
    if (j.contains("group")) c.group = group_from_json(j.at("group"));
    if (j.contains("set")) c.set = j.at("set");
    c.depth = j.value("depth", c.depth);
    if (j.contains("ladder")) c.ladder = j.at("ladder").get<std::vector<int>>();
    if (j.contains("bounds")) {
      const auto& b = j.at("bounds");
      if (b.contains("t")) c.bounds.t = b.at("t").get<long>();
      c.bounds.l = b.value("l", c.bounds.l);
      c.bounds.slack = b.value("slack", c.bounds.slack);
      c.bounds.c0 = b.value("c0", c.bounds.c0);
      c.bounds.t_rule = b.value("t_rule", c.bounds.t_rule);
      c.bounds.proof_variant = b.value("proof_variant", c.bounds.proof_variant);
    }
    if (j.contains("g")) c.g = polynomial_from_json(j.at("g"));
    if (j.contains("query"))
      for (const auto& q : j.at("query")) c.query.push_back(rational_from_json(q));
    if (j.contains("word")) c.word = j.at("word").get<Word>();
    c.relaxed = j.value("relaxed", c.relaxed);
    c.budget = j.value("budget", c.budget);
    c.radius = j.value("radius", c.radius);
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    if (j.contains("cache")) c.cache = j.at("cache").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (c.system.empty()) throw ConfigError("config: system is empty");
  if (c.depth < 0) throw ConfigError("config: depth must be >= 0");
  if (c.bounds.l < 1) throw ConfigError("config: bounds.l must be >= 1");
  if (c.bounds.slack < 0) throw ConfigError("config: bounds.slack must be >= 0");
  if (!(c.bounds.c0 > 0)) throw ConfigError("config: bounds.c0 must be > 0");
  if (c.bounds.t_rule != "auto" && c.bounds.t_rule != "double_log" && c.bounds.t_rule != "triple_log")
    throw ConfigError("config: unknown t_rule '" + c.bounds.t_rule + "'");
  for (int N : c.ladder)
    if (N < 1) throw ConfigError("config: ladder entries must be >= 1");
  config_system(c);
  try {
    if (c.group || !c.set.is_null()) config_set(c);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config set: ") + e.what());
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

/// Sets `radius` on the config and on every B or C set fragment in it.
inline void override_radius(ExperimentConfig& c, long radius) {
  c.radius = radius;
  auto visit = [&](json& s, auto&& self) -> void {
    if (!s.is_object()) return;
    const auto kind = s.value("kind", std::string());
    if (kind == "B" || kind == "C") s["radius"] = radius;
    if (s.contains("inner")) self(s["inner"], self);
  };
  visit(c.set, visit);
}

}  // namespace orbitlab
