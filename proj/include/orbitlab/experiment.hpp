#pragma once

#include "orbitlab/config.hpp"
#include "orbitlab/graph.hpp"
#include "orbitlab/pairs.hpp"
#include "orbitlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline Report start_report(std::string kind, const ExperimentConfig& cfg) {
  Report r;
  r.kind = std::move(kind);
  r.inputs = config_to_json(cfg);
  r.slack = cfg.bounds.slack;
  r.c0 = cfg.bounds.c0;
  return r;
}

inline BoundParams bound_params(const ExperimentConfig& cfg, const SystemF& F, const GroupPtr& group, double N,
                                long t) {
  BoundParams p;
  p.N = N;
  p.d = F.max_degree();
  p.k = static_cast<long>(F.size());
  p.r = group ? static_cast<long>(group->rank()) : 0;
  p.t = t;
  p.l = cfg.bounds.l;
  p.slack = cfg.bounds.slack;
  p.c0 = cfg.bounds.c0;
  return p;
}

inline json params_json(const BoundParams& p) {
  return {{"N", p.N}, {"d", p.d}, {"k", p.k}, {"r", p.r}, {"t", p.t}, {"l", p.l}, {"slack", p.slack}, {"c0", p.c0}};
}

inline std::optional<LogScaleValue> try_bound(const std::string& name, const BoundParams& p) {
  try {
    return evaluate_theorem_bound(name, p);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

inline json bound_cell(const std::optional<LogScaleValue>& v) { return v ? num(v->value) : json(); }

/// Configured ladder, or powers of two up to depth plus depth itself. A theta
/// schedule needs N >= 16, so smaller rungs are dropped.
inline std::vector<int> ladder_for(const ExperimentConfig& cfg, const SetPredicate& S, Report& rep) {
  std::vector<int> ladder = cfg.ladder;
  if (ladder.empty()) {
    for (int n = 1; n < cfg.depth; n *= 2) ladder.push_back(n);
    if (cfg.depth >= 1) ladder.push_back(cfg.depth);
  }
  std::sort(ladder.begin(), ladder.end());
  ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());
  if (S.needs_instantiation()) {
    const auto before = ladder.size();
    std::erase_if(ladder, [](int n) { return n < 16; });
    if (ladder.size() != before) rep.warnings.push_back("theta schedule: ladder entries below N = 16 dropped");
  }
  if (ladder.empty()) throw ConfigError("ladder is empty (depth too small)");
  return ladder;
}

inline void mark_partial(Report& rep, const BudgetExceeded& e, long deepest) {
  rep.partial = {{"reason", e.what()}, {"deepest_completed", deepest}};
}

inline void warn_monomials(const SystemF& F, Report& rep) {
  for (std::size_t i = 0; i < F.size(); ++i)
    if (is_monomial(F[i]))
      rep.warnings.push_back("phi_" + std::to_string(i + 1) + " = " + F[i].str() +
                             " is a monomial; the pair-count bound assumes non-special curves");
}

}  // namespace detail

/// Orbit levels and their sizes; `orbit` may hold a reloaded cache to extend.
inline Report run_orbit_experiment(const ExperimentConfig& cfg, Orbit& orbit) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("orbit", cfg);
  const SystemF F = config_system(cfg);
  if (orbit.records.empty()) orbit.records.push_back({cfg.seed, 0, {}});
  if (orbit.seed() != cfg.seed) throw ConfigError("orbit cache seed " + orbit.seed().str() + " differs from config seed");
  try {
    extend_orbit(F, orbit, cfg.depth, cfg.budget);
  } catch (const BudgetExceeded& e) {
    detail::mark_partial(rep, e, orbit.depth);
  }
  rep.columns = {{"level", kInput, ""}, {"new_values", kMeasured, ""}, {"cumulative_values", kMeasured, ""}};
  std::vector<std::size_t> per_level(static_cast<std::size_t>(orbit.depth) + 1, 0);
  for (const auto& r : orbit.records) ++per_level[static_cast<std::size_t>(r.min_level)];
  std::size_t acc = 0;
  for (std::size_t n = 0; n < per_level.size(); ++n) rep.rows.push_back({n, per_level[n], acc += per_level[n]});
  rep.add("orbit_size", kMeasured, orbit.size());
  rep.add("depth", kMeasured, orbit.depth);
  rep.add("seed_return_level", kMeasured,
          orbit.seed_return_level ? json(*orbit.seed_return_level) : json());
  rep.flag("closed", orbit.closed);
  rep.wall_time = clock.seconds();
  return rep;
}

inline Report run_orbit_experiment(const ExperimentConfig& cfg) {
  Orbit orbit;
  return run_orbit_experiment(cfg, orbit);
}

/// Membership certificates for each query value against the configured set.
inline Report run_member_experiment(const ExperimentConfig& cfg) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("member", cfg);
  if (cfg.query.empty()) throw ConfigError("member: config needs a non-empty 'query'");
  const GroupPtr group = config_group(cfg);
  const SetPredicate S = config_set(cfg).instantiate(std::max(cfg.depth, 16));
  json results = json::array();
  bool all_verified = true;
  for (const auto& x : cfg.query) {
    json e{{"x", x.str()}, {"in_set", S.contains(x)}};
    if (auto cert = S.certify(x)) {
      e["certificate"] = to_json(*cert);
      if (cert->kind == CertificateKind::in_gamma || cert->kind == CertificateKind::in_division ||
          cert->kind == CertificateKind::witness) {
        const auto* gp = std::visit(
            [](const auto& s) -> const GroupSpec* {
              if constexpr (requires { s.group; }) return s.group.get();
              return nullptr;
            },
            S.variant());
        const bool ok = gp && verify_certificate(x, *gp, *cert);
        e["verified"] = ok;
        all_verified = all_verified && ok;
      }
    }
    results.push_back(e);
  }
  rep.add("results", kMeasured, results);
  rep.flag("all_certificates_verified", all_verified);
  rep.wall_time = clock.seconds();
  return rep;
}

/// max_T over all sequences along the ladder, against the frequency bound.
inline Report run_frequency_experiment(const ExperimentConfig& cfg) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("freq", cfg);
  const SystemF F = config_system(cfg);
  const GroupPtr group = config_group(cfg);
  const SetPredicate S = config_set(cfg);
  const bool theta = S.needs_instantiation();
  const std::string bound_name = theta ? "thm42" : "thm44";
  const auto ladder = detail::ladder_for(cfg, S, rep);
  rep.columns = {{"N", kInput, ""},
                 {"max_T", kMeasured, ""},
                 {"ratio", kDerived, ""},
                 {bound_name, kBound, "linear"}};
  std::vector<double> ratios;
  std::optional<MaxT> last;
  int lastN = 0;
  for (int N : ladder) {
    MaxT m;
    try {
      m = max_T_over_sequences(F, cfg.seed, N, S.instantiate(N), cfg.budget);
    } catch (const BudgetExceeded& e) {
      detail::mark_partial(rep, e, lastN);
      break;
    }
    const double ratio = static_cast<double>(m.count) / N;
    ratios.push_back(ratio);
    rep.rows.push_back({N, m.count, ratio,
                        detail::bound_cell(detail::try_bound(bound_name, detail::bound_params(cfg, F, group, N, 1)))});
    last = std::move(m);
    lastN = N;
  }
  if (last) {
    rep.add("N", kInput, lastN);
    rep.add("max_T", kMeasured, last->count);
    rep.add("witness_sequence", kMeasured, last->witness);
    rep.add("ratio", kDerived, ratios.back());
    const auto p = detail::bound_params(cfg, F, group, lastN, 1);
    if (auto b = detail::try_bound(bound_name, p))
      rep.add_bound(bound_name, *b, detail::params_json(p));
    else
      rep.warnings.push_back(bound_name + ": N = " + std::to_string(lastN) + " too small for the nested logs");
    if (theta) rep.add("eps", kDerived, theta_N(lastN, p.r));
  }
  // finite-N proxy for the limit statement: ratio never increases and ends below 1/2
  const bool nonincreasing = std::is_sorted(ratios.rbegin(), ratios.rend());
  rep.flag("low_frequency_hypothesis", !ratios.empty() && nonincreasing && ratios.back() < 0.5);
  rep.wall_time = clock.seconds();
  return rep;
}

inline long admissible_t(const BigInt& count, long k) {
  long t = 0;
  while (3 * tree_size_B(k, t + 1) <= count) ++t;
  return t;
}

/// Orbit-in-set counts along the ladder, the largest t with count >= 3B(k,t),
/// and the double (or triple) exponential bound at that t.
inline Report run_counting_experiment(const ExperimentConfig& cfg) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("count", cfg);
  const SystemF F = config_system(cfg);
  const GroupPtr group = config_group(cfg);
  const SetPredicate S = config_set(cfg);
  const bool theta = S.needs_instantiation();
  const std::string bound_name = theta ? "thm64" : "cor62";
  std::string rule = cfg.bounds.t_rule;
  if (rule == "auto") rule = theta ? "triple_log" : "double_log";
  detail::warn_monomials(F, rep);
  const auto ladder = detail::ladder_for(cfg, S, rep);
  const long k = static_cast<long>(F.size());
  rep.columns = {{"N", kInput, ""},
                 {"count", kMeasured, ""},
                 {"admissible_t_N", kDerived, ""},
                 {"threshold_3B", kThreshold, ""},
                 {"t_N_rule", kDerived, ""},
                 {bound_name, kBound, "loglog"}};
  if (theta) rep.columns.push_back({"theta_condition", kDerived, ""});

  Orbit orbit;
  orbit.records.push_back({cfg.seed, 0, {}});
  std::optional<std::vector<std::size_t>> fixed_ladder;
  std::size_t last_count = 0;
  long last_t = 0;
  int lastN = 0;
  for (int N : ladder) {
    try {
      extend_orbit(F, orbit, N, cfg.budget);
    } catch (const BudgetExceeded& e) {
      detail::mark_partial(rep, e, lastN);
      break;
    }
    std::size_t count;
    if (theta) {
      count = count_orbit_in_set_ladder(orbit, S.instantiate(N)).at(static_cast<std::size_t>(N - 1));
    } else {
      count = count_orbit_in_set_ladder(orbit, S).at(static_cast<std::size_t>(N - 1));
    }
    const long t = admissible_t(BigInt(static_cast<unsigned long>(count)), k);
    const auto p = detail::bound_params(cfg, F, group, N, t);
    std::optional<double> rule_value;
    try {
      rule_value = rule == "double_log" ? t_N_double_log_rule(N, p.d, p.slack) : t_N_triple_log_rule(N, p.d, p.slack);
    } catch (const std::domain_error&) {
    }
    std::vector<json> row{N,
                          count,
                          t > 0 ? json(t) : json(),
                          t > 0 ? json(big_to_json(3 * tree_size_B(k, t))) : json(),
                          rule_value ? num(*rule_value) : json(),
                          t > 0 ? detail::bound_cell(detail::try_bound(bound_name, p)) : json()};
    if (theta) {
      if (t > 0) {
        row.push_back(thm64_theta_condition(N, t, p.d, p.r, cfg.bounds.proof_variant).holds);
      } else {
        row.push_back(json());
      }
    }
    rep.rows.push_back(std::move(row));
    last_count = count;
    last_t = t;
    lastN = N;
  }
  if (lastN > 0) {
    rep.add("N", kInput, lastN);
    rep.add("count", kMeasured, last_count);
    rep.add("admissible_t_N", kDerived, last_t > 0 ? json(last_t) : json());
    if (last_t > 0) {
      rep.add("threshold_3B", kThreshold, big_to_json(3 * tree_size_B(k, last_t)));
      const auto p = detail::bound_params(cfg, F, group, lastN, last_t);
      if (auto b = detail::try_bound(bound_name, p))
        rep.add_bound(bound_name, *b, detail::params_json(p));
      else
        rep.warnings.push_back(bound_name + ": t_N = " + std::to_string(last_t) + " overflows the loglog scale");
      if (theta) {
        const auto c = thm64_theta_condition(lastN, last_t, p.d, p.r, cfg.bounds.proof_variant);
        rep.add("log_theta_N", kDerived, num(c.log_theta));
        rep.add("log_theta_rhs", kThreshold, num(c.log_rhs));
        rep.flag("theta_condition", c.holds);
      }
    } else {
      rep.warnings.push_back("admissible t_N undefined: count below 3B(k,1) = 3");
    }
    rep.add("t_rule", kInput, rule);
  }
  rep.flag("hypothesis_count_ge_3B", last_t > 0);
  rep.wall_time = clock.seconds();
  return rep;
}

/// Orbit values v with g(v) in the configured set (default B(Gamma-bar, 0)),
/// level by level; the last hit level is evidence of stabilisation only.
inline Report run_finiteness_probe(const ExperimentConfig& cfg) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("probe", cfg);
  if (!cfg.g) throw ConfigError("probe: config needs 'g'");
  const SystemF F = config_system(cfg);
  const Polynomial& g = *cfg.g;
  if (g.degree() < 1) throw ConfigError("probe: g must have degree >= 1");
  const GroupPtr group = config_group(cfg);
  ExperimentConfig inner_cfg = cfg;
  if (inner_cfg.set.is_null()) inner_cfg.set = {{"kind", "B"}, {"E", 0.0}};
  const SetPredicate inner = config_set(inner_cfg).instantiate(std::max(cfg.depth, 16));

  bool two_roots = has_two_distinct_roots(g);
  if (!two_roots) rep.warnings.push_back("g = " + g.str() + " has fewer than two distinct roots");
  for (std::size_t i = 0; i < F.size(); ++i)
    if (!has_two_distinct_roots(compose(g, F[i]))) {
      two_roots = false;
      rep.warnings.push_back("g o phi_" + std::to_string(i + 1) + " has fewer than two distinct roots");
    }
  rep.flag("hypothesis_two_distinct_roots", two_roots);

  Orbit orbit;
  orbit.records.push_back({cfg.seed, 0, {}});
  try {
    extend_orbit(F, orbit, cfg.depth, cfg.budget);
  } catch (const BudgetExceeded& e) {
    detail::mark_partial(rep, e, orbit.depth);
  }
  rep.columns = {{"level", kInput, ""},
                 {"values_at_level", kMeasured, ""},
                 {"hits_at_level", kMeasured, ""},
                 {"cumulative_hits", kMeasured, ""}};
  std::vector<std::size_t> values(static_cast<std::size_t>(orbit.depth) + 1, 0), hits(values.size(), 0);
  json hit_list = json::array();
  std::optional<int> last_hit;
  for (const auto& r : orbit.records) {
    ++values[static_cast<std::size_t>(r.min_level)];
    const Rational gv = g(r.value);
    if (!inner.contains(gv)) continue;
    ++hits[static_cast<std::size_t>(r.min_level)];
    json e{{"value", r.value.str()}, {"level", r.min_level}, {"word", r.witness}, {"g_value", gv.str()}};
    if (auto cert = inner.certify(gv)) e["certificate"] = to_json(*cert);
    hit_list.push_back(e);
    last_hit = std::max(last_hit.value_or(0), r.min_level);
  }
  std::size_t acc = 0;
  for (std::size_t n = 0; n < values.size(); ++n) rep.rows.push_back({n, values[n], hits[n], acc += hits[n]});
  rep.add("hits", kMeasured, hit_list);
  rep.add("hit_count", kMeasured, acc);
  rep.add("last_hit_level", kMeasured, last_hit ? json(*last_hit) : json());
  rep.add("depth", kMeasured, orbit.depth);
  rep.flag("no_hit_at_final_level", hits.back() == 0);
  rep.wall_time = clock.seconds();
  return rep;
}

/// Connected pairs read off the hit levels of one sequence (the configured
/// word, else the max_T witness).
inline Report run_pairs_experiment(const ExperimentConfig& cfg) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("pairs", cfg);
  const SystemF F = config_system(cfg);
  const int N = cfg.depth;
  if (N < 1) throw ConfigError("pairs: depth must be >= 1");
  const SetPredicate S = config_set(cfg).instantiate(std::max(N, 16));
  Word phi = cfg.word;
  if (phi.empty()) {
    phi = max_T_over_sequences(F, cfg.seed, N, S, cfg.budget).witness;
    rep.add("sequence_source", kInput, "max_T witness");
  } else {
    if (phi.size() < static_cast<std::size_t>(N)) throw ConfigError("pairs: word shorter than depth");
    rep.add("sequence_source", kInput, "config word");
  }
  PairExtraction ex;
  try {
    ex = extract_pairs(F, cfg.seed, N, S, phi, cfg.relaxed);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  json pairs = json::array();
  bool all_verified = true;
  for (const auto& p : ex.pairs) {
    const bool ok = apply_word(F, p.psi, p.u) == p.v;
    all_verified = all_verified && ok;
    pairs.push_back({{"u", p.u.str()}, {"v", p.v.str()}, {"level", p.level}, {"psi", p.psi}, {"verified", ok}});
  }
  const double tau = ex.tau;
  rep.add("sequence", kInput, json(Word(phi.begin(), phi.begin() + N)));
  rep.add("T", kMeasured, ex.T);
  rep.add("tau", kDerived, tau);
  rep.add("t", kMeasured, ex.t);
  rep.add("t_limit_2_over_tau", kThreshold, 2 / tau);
  rep.add("pair_indices", kMeasured, ex.pairs.size());
  rep.add("pair_floor_tau2N_over_8", kThreshold, tau * tau * N / 8);
  rep.add("pairs", kMeasured, pairs);
  rep.flag("hypothesis_tau_below_half", ex.hypothesis_holds);
  rep.flag("t_within_limit", static_cast<double>(ex.t) <= 2 / tau);
  rep.flag("pair_count_within_guarantee", static_cast<double>(ex.pairs.size()) >= tau * tau * N / 8);
  rep.flag("all_pairs_verified", all_verified);
  rep.wall_time = clock.seconds();
  return rep;
}

/// Orbit graph statistics and, when bounds.t is set, the witness-word search
/// (with the full count-versus-bound comparison when the set is Gamma).
inline Report run_graph_experiment(const ExperimentConfig& cfg, json* graph_export = nullptr) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("graph", cfg);
  const SystemF F = config_system(cfg);
  const GroupPtr group = config_group(cfg);
  const int N = cfg.depth;
  const SetPredicate S = config_set(cfg).instantiate(std::max(N, 16));
  const Orbit orbit = orbit_points(F, cfg.seed, N, cfg.budget);
  const OrbitGraph og = build_orbit_graph(F, orbit, S);
  std::size_t edges = 0;
  bool edges_ok = true;
  for (std::size_t u = 0; u < og.graph.size(); ++u)
    for (int label = 1; label <= static_cast<int>(F.size()); ++label)
      if (auto v = og.graph.successor(u, label)) {
        ++edges;
        edges_ok = edges_ok && F[static_cast<std::size_t>(label - 1)](og.graph.value(u)) == og.graph.value(*v);
      }
  if (graph_export) *graph_export = graph_to_json(og.graph);
  rep.add("vertices", kMeasured, og.graph.size());
  rep.add("edges", kMeasured, edges);
  rep.flag("edges_verified", edges_ok);
  if (cfg.bounds.t) {
    const long t = *cfg.bounds.t;
    const long l = cfg.bounds.l;
    if (t < 1) throw ConfigError("graph: bounds.t must be >= 1");
    const WitnessSearch ws = find_witness_words(og.graph, og.basepoint, og.in_set, static_cast<std::size_t>(t),
                                                static_cast<std::size_t>(l), static_cast<std::size_t>(N),
                                                WitnessMode::exhaustive, cfg.budget);
    json words = json::array();
    for (const auto& w : ws.words) words.push_back(w);
    rep.add("witness_words", kMeasured, words);
    rep.add("L_N", kMeasured, ws.L);
    rep.add("ball", kMeasured, ws.ball);
    rep.add("ball_in_A", kMeasured, ws.ball_in_A);
    rep.add("lemma_threshold", kThreshold, ws.threshold);
    rep.add("empirical_ratio", kDerived, ws.ratio);
    rep.flag("lemma_hypothesis", ws.hypothesis_met);
    if (S.kind() == "gamma" && t >= 3 * l) {
      detail::warn_monomials(F, rep);
      const std::size_t count = count_orbit_in_set_ladder(orbit, S).at(static_cast<std::size_t>(N - 1));
      const BigInt threshold = 3 * tree_size_B(static_cast<long>(F.size()), t);
      const auto p = detail::bound_params(cfg, F, group, N, t);
      const LogScaleValue bound = evaluate_theorem_bound("thm61", p);
      rep.add("count", kMeasured, count);
      rep.add("threshold_3B", kThreshold, big_to_json(threshold));
      rep.add_bound("thm61", bound, detail::params_json(p));
      rep.flag("hypothesis_count_ge_3B", BigInt(static_cast<unsigned long>(count)) >= threshold);
      rep.flag("count_within_bound", LogScaleValue::linear(static_cast<double>(count)) <= bound);
    } else if (S.kind() == "gamma") {
      rep.warnings.push_back("count-versus-bound comparison skipped: needs t >= 3l");
    }
  }
  rep.wall_time = clock.seconds();
  return rep;
}

/// Every explicit constant at the configured parameters (t from bounds.t, default 1).
inline Report run_bounds_report(const ExperimentConfig& cfg) {
  detail::Stopwatch clock;
  Report rep = detail::start_report("bounds", cfg);
  const SystemF F = config_system(cfg);
  const GroupPtr group = config_group(cfg);
  const long t = cfg.bounds.t.value_or(1);
  if (t < 1) throw ConfigError("bounds: t must be >= 1");
  const auto p = detail::bound_params(cfg, F, group, cfg.depth, t);
  const json params = detail::params_json(p);
  for (const auto& name : theorem_bound_names()) {
    try {
      rep.add_bound(name, evaluate_theorem_bound(name, p), params);
    } catch (const std::domain_error& e) {
      rep.warnings.push_back(name + ": " + e.what());
    }
  }
  const BigInt dt = big_pow(BigInt(p.d), static_cast<unsigned long>(t));
  const double Delta = dt.get_d() + 1;
  const double h = F.height();
  rep.add_bound("log_A", log_A(dt + 1, p.r), {{"n", big_to_json(dt + 1)}, {"r", p.r}});
  rep.add_bound("log_pair_count_bound", log_pair_count_bound(dt, p.r), {{"D", big_to_json(dt)}, {"r", p.r}});
  rep.add("tree_size_B", kDerived, big_to_json(tree_size_B(p.k, t)));
  rep.add_bound("zeta_inverse", LogScaleValue::log(zeta_inverse(Delta, h, p.r, p.c0)),
                {{"Delta", Delta}, {"h", h}, {"r", p.r}, {"c0", p.c0}});
  rep.add_bound("zeta_inverse_proof_variant", LogScaleValue::log(zeta_inverse_proof_variant(Delta, p.r, p.c0)),
                {{"Delta", Delta}, {"r", p.r}, {"c0", p.c0}});
  rep.add_bound("curve_intersection", log_curve_intersection_bound(h, Delta, p.slack),
                {{"h", h}, {"Delta", Delta}, {"slack", p.slack}});
  if (cfg.depth >= 16) {
    rep.add("theta_N", kDerived, num(theta_N(cfg.depth, p.r)));
    try {
      rep.add("t_N_double_log", kDerived, num(t_N_double_log_rule(cfg.depth, p.d, p.slack)));
      rep.add("t_N_triple_log", kDerived, num(t_N_triple_log_rule(cfg.depth, p.d, p.slack)));
    } catch (const std::domain_error& e) {
      rep.warnings.push_back(e.what());
    }
  }
  rep.wall_time = clock.seconds();
  return rep;
}

inline const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{"orbit", "member", "freq", "count", "pairs", "graph", "bounds", "probe"};
  return kinds;
}

inline Report run_experiment(const std::string& kind, const ExperimentConfig& cfg) {
  if (kind == "orbit") return run_orbit_experiment(cfg);
  if (kind == "member") return run_member_experiment(cfg);
  if (kind == "freq") return run_frequency_experiment(cfg);
  if (kind == "count") return run_counting_experiment(cfg);
  if (kind == "pairs") return run_pairs_experiment(cfg);
  if (kind == "graph") return run_graph_experiment(cfg);
  if (kind == "bounds") return run_bounds_report(cfg);
  if (kind == "probe") return run_finiteness_probe(cfg);
  throw ConfigError("unknown experiment '" + kind + "'");
}

/// The built-in experiment configurations, also shipped under configs/.
inline std::vector<std::pair<std::string, json>> canned_experiments() {
  const json two = {{"generators", {"2"}}, {"include_minus_one", false}};
  return {
      {"orbit", {{"system", {"[0, 0, 1]", "[0, 0, 2]"}}, {"seed", "2"}, {"group", two}, {"depth", 6}}},
      {"member",
       {{"system", {"[0, 0, 1]"}},
        {"seed", "2"},
        {"group", two},
        {"set", {{"kind", "C"}, {"eps", 0.13}, {"radius", 12}}},
        {"query", {"3072", "5", "1/3"}}}},
      {"freq", {{"system", {"[0, 0, 1]"}}, {"seed", "2"}, {"group", two}, {"depth", 10}}},
      {"freq", {{"system", {"[1, 0, 1]"}}, {"seed", "1"}, {"group", two}, {"depth", 10}}},
      {"count", {{"system", {"[0, 0, 1]", "[0, 0, 2]"}}, {"seed", "2"}, {"group", two}, {"depth", 5}}},
      {"pairs",
       {{"system", {"[-1, 0, 1]", "[0, 0, 1]"}},
        {"seed", "0"},
        {"group", {{"generators", {"2"}}, {"include_minus_one", true}}},
        {"depth", 8},
        {"word", {1, 1, 2, 2, 1, 1, 1, 1}}}},
      {"graph",
       {{"system", {"[0, 0, 1]", "[0, 0, 2]"}},
        {"seed", "2"},
        {"group", two},
        {"depth", 4},
        {"bounds", {{"t", 3}, {"l", 1}}}}},
      {"bounds", {{"system", {"[1, 0, 1]", "[0, 0, 2]"}}, {"seed", "1"}, {"group", two}, {"depth", 1000000},
                  {"bounds", {{"t", 3}, {"l", 1}}}}},
      {"probe", {{"system", {"[2, 0, 1]"}}, {"seed", "0"}, {"group", two}, {"depth", 6}, {"g", "[-1, 0, 1]"}}},
  };
}

}  // namespace orbitlab
