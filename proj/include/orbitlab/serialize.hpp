#pragma once

#include "orbitlab/graph.hpp"
#include "orbitlab/orbit.hpp"
#include "orbitlab/set_predicate.hpp"

#include "json.hpp"

#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitlab {

using nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ConfigError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline Polynomial polynomial_from_json(const json& j) {
  if (j.is_string()) return Polynomial::parse(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Polynomial(std::move(c));
  }
  throw ConfigError("expected a polynomial as \"[c0, c1, ...]\", got " + j.dump());
}

inline json big_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

inline json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(big_to_json(e));
  return out;
}

inline json to_json(const MembershipCertificate& c) {
  json j{{"kind", to_string(c.kind)}};
  switch (c.kind) {
    case CertificateKind::in_gamma:
      j["combination"] = to_json(c.combination);
      j["minus_one"] = c.minus_one;
      break;
    case CertificateKind::in_division:
      j["t"] = big_to_json(c.t);
      j["combination"] = to_json(c.combination);
      j["minus_one"] = c.minus_one;
      break;
    case CertificateKind::witness:
      j["y"] = c.y.str();
      j["z"] = c.z.str();
      j["t"] = big_to_json(c.t);
      j["combination"] = to_json(c.combination);
      j["minus_one"] = c.minus_one;
      j["radius"] = c.radius;
      break;
    case CertificateKind::no_witness:
      j["search_radius"] = c.radius;
      break;
    case CertificateKind::not_member:
      j["reason"] = c.reason;
      break;
  }
  return j;
}

inline json to_json(const LogScaleValue& v) { return {{"scale", to_string(v.scale)}, {"value", v.value}}; }

inline json group_to_json(const GroupSpec& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x.str());
  return {{"generators", gens}, {"include_minus_one", g.include_minus_one()}};
}

inline GroupSpec group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators")) throw ConfigError("group: expected {\"generators\": [...]}");
  std::vector<Rational> gens;
  for (const auto& g : j.at("generators")) gens.push_back(rational_from_json(g));
  try {
    return GroupSpec(std::move(gens), j.value("include_minus_one", false));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

/// Set fragment, e.g. {"kind": "C", "eps": "theta", "radius": 12}. Group-based
/// kinds use `group` unless the fragment carries its own "group".
inline SetPredicate set_from_json(const json& j, const GroupPtr& group, long default_radius = 10) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("set: expected {\"kind\": ...}");
  const auto kind = j.at("kind").get<std::string>();
  GroupPtr g = group;
  if (j.contains("group")) g = std::make_shared<const GroupSpec>(group_from_json(j.at("group")));
  auto need_group = [&] {
    if (!g) throw ConfigError("set '" + kind + "' needs a group");
    return g;
  };
  const long radius = j.value("radius", default_radius);
  if (kind == "gamma") return SetPredicate::gamma(need_group());
  if (kind == "division") return SetPredicate::division(need_group());
  if (kind == "B") return SetPredicate::b_set(need_group(), j.value("E", 0.0), radius);
  if (kind == "C") {
    const auto& eps = j.at("eps");
    if (eps.is_string() && eps.get<std::string>() == "theta") return SetPredicate::c_set_theta(need_group(), radius);
    return SetPredicate::c_set(need_group(), eps.get<double>(), radius);
  }
  if (kind == "height_ball") return SetPredicate::height_ball(j.at("H").get<double>());
  if (kind == "preimage")
    return SetPredicate::preimage(polynomial_from_json(j.at("g")), set_from_json(j.at("inner"), g, default_radius));
  if (kind == "finite_list") {
    std::vector<Rational> vals;
    for (const auto& v : j.at("values")) vals.push_back(rational_from_json(v));
    return SetPredicate::finite_list(std::move(vals));
  }
  throw ConfigError("set: unknown kind '" + kind + "'");
}

inline json set_to_json(const SetPredicate& s) {
  json j{{"kind", s.kind()}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SetPredicate::Gamma> || std::is_same_v<T, SetPredicate::Division>) {
          j["group"] = group_to_json(*v.group);
        } else if constexpr (std::is_same_v<T, SetPredicate::BSet>) {
          j["group"] = group_to_json(*v.group);
          j["E"] = v.E;
          j["radius"] = v.radius;
        } else if constexpr (std::is_same_v<T, SetPredicate::CSet>) {
          j["group"] = group_to_json(*v.group);
          j["eps"] = v.theta_schedule ? json("theta") : json(v.eps);
          j["radius"] = v.radius;
        } else if constexpr (std::is_same_v<T, SetPredicate::HeightBall>) {
          j["H"] = v.H;
        } else if constexpr (std::is_same_v<T, SetPredicate::Preimage>) {
          j["g"] = v.g.str();
          j["inner"] = set_to_json(*v.inner);
        } else {
          json vals = json::array();
          for (const auto& x : v.values) vals.push_back(x.str());
          j["values"] = vals;
        }
      },
      s.variant());
  return j;
}

inline json to_json(const OrbitRecord& r) {
  return {{"value", r.value.str()}, {"level", r.min_level}, {"word", r.witness}};
}

/// Orbit cache: JSON lines, one record per line, in orbit order.
inline void write_orbit_cache(std::ostream& os, const Orbit& orbit) {
  for (const auto& r : orbit.records) os << to_json(r).dump() << '\n';
}

/// Reloads a cache written by write_orbit_cache. The seed-return level is
/// recomputed from the reloaded values, which costs one map evaluation per
/// non-frontier record.
inline Orbit read_orbit_cache(std::istream& is, const SystemF& F) {
  Orbit orbit;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("orbit cache: ") + e.what());
    }
    OrbitRecord r{rational_from_json(j.at("value")), j.at("level").get<int>(), j.at("word").get<Word>()};
    if (static_cast<int>(r.witness.size()) != r.min_level)
      throw ConfigError("orbit cache: word length differs from level at " + r.value.str());
    if (!orbit.records.empty() && r.min_level < orbit.records.back().min_level)
      throw ConfigError("orbit cache: records out of level order");
    orbit.depth = std::max(orbit.depth, r.min_level);
    orbit.records.push_back(std::move(r));
  }
  if (orbit.records.empty() || orbit.records.front().min_level != 0)
    throw ConfigError("orbit cache: first record must be the seed at level 0");
  for (const auto& r : orbit.records)
    if (apply_word(F, r.witness, orbit.seed()) != r.value)
      throw ConfigError("orbit cache: word does not reproduce value " + r.value.str());
  for (const auto& r : orbit.records) {
    if (r.min_level >= orbit.depth) continue;
    for (std::size_t i = 0; i < F.size(); ++i)
      if (F[i](r.value) == orbit.seed()) {
        const int lvl = r.min_level + 1;
        if (!orbit.seed_return_level || lvl < *orbit.seed_return_level) orbit.seed_return_level = lvl;
      }
  }
  return orbit;
}

/// Graph export: {"vertices": ["p/q", ...], "edges": [[u, label, v], ...]}
inline json graph_to_json(const LabeledDigraph& G) {
  json verts = json::array();
  for (const auto& v : G.values()) verts.push_back(v.str());
  json edges = json::array();
  for (std::size_t u = 0; u < G.size(); ++u)
    for (int label = 1; label <= static_cast<int>(G.k()); ++label)
      if (auto v = G.successor(u, label)) edges.push_back({u, label, *v});
  return {{"vertices", verts}, {"edges", edges}};
}

}  // namespace orbitlab
