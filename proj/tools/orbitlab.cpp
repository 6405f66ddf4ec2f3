#include "orbitlab/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kBudgetExceeded = 2;
constexpr int kVerificationFailure = 3;

struct Options {
  std::string config;
  std::string out;
  std::string format = "json";
  std::optional<std::size_t> budget;
  std::optional<long> radius;
  std::optional<double> slack;
  std::optional<double> c0;
  std::string cache;
  std::string graph_out;
  std::uint64_t seed = 20240601;
};

orbitlab::ExperimentConfig load(const Options& o) {
  auto cfg = orbitlab::load_config(o.config);
  if (o.budget) cfg.budget = *o.budget;
  if (o.radius) orbitlab::override_radius(cfg, *o.radius);
  if (o.slack) cfg.bounds.slack = *o.slack;
  if (o.c0) cfg.bounds.c0 = *o.c0;
  if (cfg.bounds.slack < 0) throw orbitlab::ConfigError("--slack must be >= 0");
  if (!(cfg.bounds.c0 > 0)) throw orbitlab::ConfigError("--c0 must be > 0");
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw orbitlab::ConfigError("cannot write '" + path + "'");
  out << text;
}

int run_subcommand(const std::string& name, const Options& o) {
  if (name == "verify") {
    const auto results = orbitlab::run_acceptance(&std::cerr, o.seed);
    orbitlab::json j = orbitlab::json::array();
    bool ok = true;
    for (const auto& r : results) {
      j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
      ok = ok && r.passed;
    }
    write_output(o.out, j.dump(2) + "\n");
    return ok ? kOk : kVerificationFailure;
  }

  auto cfg = load(o);
  const std::string out_path = !o.out.empty() ? o.out : cfg.out.value_or("");
  orbitlab::Report rep;
  if (name == "orbit") {
    const std::string cache = !o.cache.empty() ? o.cache : cfg.cache.value_or("");
    orbitlab::Orbit orbit;
    if (!cache.empty() && std::filesystem::exists(cache)) {
      std::ifstream in(cache);
      orbit = orbitlab::read_orbit_cache(in, orbitlab::config_system(cfg));
    }
    rep = orbitlab::run_orbit_experiment(cfg, orbit);
    if (!cache.empty()) {
      std::ofstream out(cache);
      if (!out) throw orbitlab::ConfigError("cannot write cache '" + cache + "'");
      orbitlab::write_orbit_cache(out, orbit);
    }
  } else if (name == "graph") {
    orbitlab::json graph;
    rep = orbitlab::run_graph_experiment(cfg, &graph);
    if (!o.graph_out.empty()) write_output(o.graph_out, graph.dump(2) + "\n");
  } else {
    rep = orbitlab::run_experiment(name, cfg);
  }
  write_output(out_path, orbitlab::emit_report(rep, o.format));
  return rep.budget_exceeded() ? kBudgetExceeded : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitlab: exact orbit experiments for polynomial semigroups over Q"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"orbit", "expand the orbit level by level (resumable through --cache)"},
      {"member", "membership certificates for the config's query values"},
      {"freq", "max hit count over all sequences along an N ladder"},
      {"count", "orbit-in-set counts, admissible t_N and the matching bound"},
      {"pairs", "connected pairs read off the hit levels of one sequence"},
      {"graph", "orbit graph and the witness-word search"},
      {"bounds", "every explicit constant at the configured parameters"},
      {"probe", "orbit points whose image under g lands in the set"},
      {"verify", "run the acceptance criteria"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const bool is_verify = std::string(s.name) == "verify";
    if (!is_verify) {
      sub->add_option("--config", o.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
      sub->add_option("--format", o.format, "report format")
          ->check(CLI::IsMember({"json", "csv", "text"}));
      sub->add_option("--budget", o.budget, "maximum stored orbit values / word tuples");
      sub->add_option("--radius", o.radius, "witness search radius for B and C sets");
      sub->add_option("--slack", o.slack, "value used for every o(1) term");
      sub->add_option("--c0", o.c0, "constant c0 in the curve-intersection bound");
    } else {
      sub->add_option("--seed", o.seed, "random seed for the property suites");
    }
    sub->add_option("--out", o.out, "output path (default stdout)");
    if (std::string(s.name) == "orbit") sub->add_option("--cache", o.cache, "orbit cache (JSON lines) to resume from and update");
    if (std::string(s.name) == "graph") sub->add_option("--graph-out", o.graph_out, "write the graph export here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    return run_subcommand(app.get_subcommands().front()->get_name(), o);
  } catch (const orbitlab::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const orbitlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const orbitlab::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}
