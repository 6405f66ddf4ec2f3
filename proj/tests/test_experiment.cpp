#include "orbitlab/experiment.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orbitlab;

namespace {

ExperimentConfig base(std::vector<const char*> system, const char* seed, int depth) {
  ExperimentConfig c;
  for (const char* p : system) c.system.push_back(Polynomial::parse(p));
  c.seed = Rational::parse(seed);
  c.group = GroupSpec({Rational(2)}, false);
  c.depth = depth;
  return c;
}

json value_of(const Report& r, const std::string& name) {
  const auto* q = r.find(name);
  if (!q) throw std::runtime_error("missing quantity " + name);
  return q->value;
}

json strip_time(json j) {
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST(Config, RoundTrip) {
  for (const auto& [kind, j] : canned_experiments()) {
    const auto c = config_from_json(j);
    EXPECT_EQ(config_to_json(config_from_json(config_to_json(c))), config_to_json(c)) << kind;
  }
}

TEST(Config, ShippedConfigsMatchBuiltIns) {
  std::vector<json> shipped;
  for (const auto& entry : std::filesystem::directory_iterator(ORBITLAB_CONFIG_DIR)) {
    std::ifstream in(entry.path());
    shipped.push_back(json::parse(in));
  }
  const auto canned = canned_experiments();
  EXPECT_EQ(shipped.size(), canned.size());
  for (const auto& [kind, j] : canned)
    EXPECT_NE(std::find(shipped.begin(), shipped.end(), j), shipped.end()) << kind;
}

TEST(Config, RejectsInvalidInput) {
  const json good = canned_experiments().front().second;
  auto with = [&](const char* key, json v) {
    json j = good;
    j[key] = std::move(v);
    return j;
  };
  EXPECT_THROW(config_from_json(json::array()), ConfigError);
  EXPECT_THROW(config_from_json(with("system", json::array())), ConfigError);
  EXPECT_THROW(config_from_json(with("system", {"[1, 1]"})), ConfigError);
  EXPECT_THROW(config_from_json(with("seed", "1/0")), ConfigError);
  EXPECT_THROW(config_from_json(with("depth", -1)), ConfigError);
  EXPECT_THROW(config_from_json(with("ladder", {0, 2})), ConfigError);
  EXPECT_THROW(config_from_json(with("bounds", {{"t_rule", "quadruple_log"}})), ConfigError);
  EXPECT_THROW(config_from_json(with("bounds", {{"c0", 0}})), ConfigError);
  EXPECT_THROW(config_from_json(with("set", {{"kind", "nonsense"}})), ConfigError);
  json no_seed = good;
  no_seed.erase("seed");
  EXPECT_THROW(config_from_json(no_seed), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, RadiusOverrideReachesNestedSets) {
  auto c = config_from_json(canned_experiments()[1].second);
  c.set = {{"kind", "preimage"}, {"g", "[0, 0, 1]"}, {"inner", {{"kind", "B"}, {"E", 1.0}, {"radius", 3}}}};
  override_radius(c, 7);
  EXPECT_EQ(c.radius, 7);
  EXPECT_EQ(c.set["inner"]["radius"], 7);
}

TEST(Experiments, FrequencyOfSquaring) {
  const Report r = run_frequency_experiment(base({"[0, 0, 1]"}, "2", 10));
  EXPECT_EQ(value_of(r, "max_T"), 10);
  EXPECT_DOUBLE_EQ(value_of(r, "ratio").get<double>(), 1.0);
  EXPECT_EQ(r.find_flag("low_frequency_hypothesis"), false);
  EXPECT_EQ(r.rows.size(), 5u);  // 1, 2, 4, 8, 10
}

TEST(Experiments, FrequencyOfSquarePlusOne) {
  const Report r = run_frequency_experiment(base({"[1, 0, 1]"}, "1", 10));
  EXPECT_EQ(value_of(r, "max_T"), 1);  // only 2 is a power of two
  EXPECT_EQ(r.find_flag("low_frequency_hypothesis"), true);
  EXPECT_EQ(r.find("thm44")->label, kBound);
}

TEST(Experiments, CountingSingleMap) {
  // k = 1: 3B(1,t) = 3t, so t_N = floor(count / 3)
  auto cfg = base({"[0, 0, 1]"}, "2", 7);
  const Report r = run_counting_experiment(cfg);
  EXPECT_EQ(value_of(r, "count"), 7);
  EXPECT_EQ(value_of(r, "admissible_t_N"), 2);
  EXPECT_EQ(r.find_flag("hypothesis_count_ge_3B"), true);
  EXPECT_EQ(r.find("cor62")->scale, "loglog");
  for (const auto& row : r.rows)
    if (!row[2].is_null()) {
      EXPECT_EQ(row[2].get<long>(), row[1].get<long>() / 3);
    }
}

TEST(Experiments, CountingTwoMaps) {
  const Report r = run_counting_experiment(base({"[0, 0, 1]", "[0, 0, 2]"}, "2", 5));
  EXPECT_EQ(value_of(r, "count"), 62);
  EXPECT_EQ(value_of(r, "admissible_t_N"), 4);
  EXPECT_NEAR(r.find("cor62")->value.get<double>(), 27.725887222397812, 1e-9);
}

TEST(Experiments, ProbeWithTrivialGroup) {
  auto cfg = base({"[2, 0, 1]"}, "0", 6);
  cfg.group = GroupSpec({Rational(1)}, false);
  cfg.g = Polynomial::parse("[-1, 0, 1]");
  const Report r = run_finiteness_probe(cfg);
  // g(0) = -1 is the only hit: later values grow and their images are never +-1
  EXPECT_EQ(value_of(r, "hit_count"), 1);
  EXPECT_EQ(value_of(r, "last_hit_level"), 0);
  EXPECT_EQ(r.find_flag("hypothesis_two_distinct_roots"), true);
  EXPECT_EQ(r.find_flag("no_hit_at_final_level"), true);
}

TEST(Experiments, ProbeWarnsOnRepeatedRoot) {
  auto cfg = base({"[2, 0, 1]"}, "0", 3);
  cfg.g = Polynomial::parse("[0, 0, 1]");
  const Report r = run_finiteness_probe(cfg);
  EXPECT_EQ(r.find_flag("hypothesis_two_distinct_roots"), false);
  EXPECT_FALSE(r.warnings.empty());
  cfg.g.reset();
  EXPECT_THROW(run_finiteness_probe(cfg), ConfigError);
}

TEST(Experiments, PairsFromConfiguredWord) {
  const auto cfg = config_from_json(canned_experiments()[5].second);
  const Report r = run_pairs_experiment(cfg);
  EXPECT_EQ(value_of(r, "T"), 3);
  EXPECT_EQ(value_of(r, "t"), 2);
  EXPECT_EQ(r.find_flag("all_pairs_verified"), true);
  EXPECT_EQ(r.find_flag("t_within_limit"), true);
}

TEST(Experiments, GraphReport) {
  auto cfg = base({"[0, 0, 1]", "[0, 0, 2]"}, "2", 4);
  cfg.bounds.t = 3;
  json graph;
  const Report r = run_graph_experiment(cfg, &graph);
  EXPECT_EQ(value_of(r, "vertices"), 31);
  EXPECT_EQ(value_of(r, "edges"), 30);
  EXPECT_EQ(value_of(r, "count"), 30);
  EXPECT_EQ(r.find_flag("edges_verified"), true);
  EXPECT_EQ(r.find_flag("hypothesis_count_ge_3B"), true);
  EXPECT_NEAR(r.find("thm61")->value.get<double>(), 1234609.954551582, 1e-5);
  EXPECT_FALSE(graph.is_null());
}

TEST(Experiments, BoundsReport) {
  const auto cfg = config_from_json(canned_experiments()[7].second);
  const Report r = run_bounds_report(cfg);
  EXPECT_NEAR(r.find("thm42")->value.get<double>(), 2872010.4514136305, 1e-6);
  EXPECT_NEAR(r.find("thm44")->value.get<double>(), 2639764.3192463943, 1e-6);
  for (const auto& q : r.quantities)
    if (q.label == std::string(kBound)) {
      EXPECT_FALSE(q.scale.empty()) << q.name;
      EXPECT_TRUE(q.params.is_object()) << q.name;
    }
}

TEST(Experiments, MemberCertificatesVerify) {
  const auto cfg = config_from_json(canned_experiments()[1].second);
  const Report r = run_member_experiment(cfg);
  EXPECT_EQ(r.find_flag("all_certificates_verified"), true);
  const json results = value_of(r, "results");
  ASSERT_EQ(results.size(), 3u);
  EXPECT_EQ(results[0]["certificate"]["y"], "2048");
  EXPECT_EQ(results[0]["certificate"]["z"], "3/2");
}

TEST(Experiments, OrbitResumesFromCache) {
  auto cfg = base({"[0, 0, 1]", "[0, 0, 2]"}, "2", 3);
  Orbit orbit;
  run_orbit_experiment(cfg, orbit);
  std::stringstream ss;
  write_orbit_cache(ss, orbit);
  Orbit reloaded = read_orbit_cache(ss, config_system(cfg));
  cfg.depth = 6;
  const Report resumed = run_orbit_experiment(cfg, reloaded);
  const Report fresh = run_orbit_experiment(cfg);
  EXPECT_EQ(resumed.rows, fresh.rows);
  Orbit other;
  other.records.push_back({Rational(3), 0, {}});
  EXPECT_THROW(run_orbit_experiment(cfg, other), ConfigError);
}

TEST(Experiments, BudgetStopIsPartial) {
  auto cfg = base({"[0, 0, 1]", "[1, 0, 1]", "[0, 0, 2]"}, "3", 12);
  cfg.budget = 200;
  const Report r = run_orbit_experiment(cfg);
  ASSERT_TRUE(r.budget_exceeded());
  EXPECT_LT(r.partial["deepest_completed"].get<int>(), 12);
}

TEST(Reports, JsonRoundTripAndLabels) {
  for (const auto& [kind, j] : canned_experiments()) {
    const Report r = run_experiment(kind, config_from_json(j));
    const json out = report_to_json(r);
    EXPECT_EQ(report_to_json(report_from_json(out)), out) << kind;
    for (const auto& q : out["quantities"]) {
      const std::string label = q["label"];
      EXPECT_TRUE(label == kMeasured || label == kBound || label == kThreshold || label == kDerived ||
                  label == kInput)
          << kind << " " << q["name"];
    }
  }
}

TEST(Reports, CsvAndTextShapes) {
  for (const auto& [kind, j] : canned_experiments()) {
    const Report r = run_experiment(kind, config_from_json(j));
    const std::string csv = emit_report(r, "csv");
    const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    EXPECT_EQ(lines, 1 + (r.columns.empty() ? r.quantities.size() : r.rows.size())) << kind;
    const std::string text = emit_report(r, "text");
    for (const auto& [name, value] : r.flags)
      EXPECT_NE(text.find("flag " + name + " = " + (value ? "true" : "false")), std::string::npos) << kind;
  }
  EXPECT_THROW(emit_report(Report{}, "xml"), ConfigError);
}

TEST(Reports, Deterministic) {
  for (const auto& [kind, j] : canned_experiments()) {
    const auto cfg = config_from_json(j);
    Report a = run_experiment(kind, cfg), b = run_experiment(kind, cfg);
    EXPECT_EQ(strip_time(report_to_json(a)), strip_time(report_to_json(b))) << kind;
    a.wall_time = b.wall_time = 0;
    EXPECT_EQ(emit_report(a, "csv"), emit_report(b, "csv")) << kind;
    EXPECT_EQ(emit_report(a, "text"), emit_report(b, "text")) << kind;
  }
}
