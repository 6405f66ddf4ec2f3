#pragma once

#include "orbitlab/height.hpp"
#include "orbitlab/set_predicate.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orbitlab {

/// Finite sequence of letters in 1..k; letter i selects phi_i. Empty = identity.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// Thrown when an enumeration would exceed its budget. Functions that extend a
// structure in place leave it at the last completed level.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int completed_level)
      : std::runtime_error(what), completed_level_(completed_level) {}
  [[nodiscard]] int completed_level() const { return completed_level_; }

 private:
  int completed_level_;
};

inline void check_word(const SystemF& F, const Word& w) {
  for (int letter : w)
    if (letter < 1 || static_cast<std::size_t>(letter) > F.size())
      throw std::invalid_argument("word letter " + std::to_string(letter) + " outside 1.." +
                                  std::to_string(F.size()));
}

/// Phi^(n)(x) for the first n letters of w (all of w by default), applying w[0] first.
inline Rational apply_word(const SystemF& F, const Word& w, const Rational& x,
                           std::optional<std::size_t> n = std::nullopt) {
  check_word(F, w);
  const std::size_t len = n.value_or(w.size());
  if (len > w.size()) throw std::invalid_argument("apply_word: prefix longer than word");
  Rational v = x;
  for (std::size_t i = 0; i < len; ++i) v = F[static_cast<std::size_t>(w[i] - 1)](v);
  return v;
}

/// The composed map phi_{w_n} o ... o phi_{w_1}.
inline Polynomial word_polynomial(const SystemF& F, const Word& w) {
  check_word(F, w);
  Polynomial p = Polynomial::identity();
  for (int letter : w) p = compose(F[static_cast<std::size_t>(letter - 1)], p);
  return p;
}

/// All distinct compositions of exactly n maps, sorted; {X} for n = 0.
inline std::vector<Polynomial> level_set(const SystemF& F, int n, std::size_t budget = kDefaultBudget) {
  if (n < 0) throw std::invalid_argument("level_set: n must be >= 0");
  double words = 1;
  for (int i = 0; i < n; ++i) words *= static_cast<double>(F.size());
  if (words > static_cast<double>(budget))
    throw BudgetExceeded("level_set: k^n = " + std::to_string(words) + " exceeds budget", -1);
  std::set<Polynomial> level{Polynomial::identity()};
  for (int step = 0; step < n; ++step) {
    std::set<Polynomial> next;
    for (const auto& f : level)
      for (const auto& phi : F.polys()) next.insert(compose(phi, f));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

struct OrbitRecord {
  Rational value;
  int min_level = 0;
  Word witness;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

// Orbit of a seed truncated at `depth`, deduplicated by value. Records are
// ordered by level, then by witness word; the first record is the seed.
struct Orbit {
  std::vector<OrbitRecord> records;
  int depth = 0;
  /// Smallest level >= 1 at which the seed value reappears, if any so far.
  std::optional<int> seed_return_level;
  /// The last expansion round produced no new value.
  bool closed = false;

  [[nodiscard]] const Rational& seed() const { return records.front().value; }
  [[nodiscard]] std::size_t size() const { return records.size(); }
};

namespace detail {

inline void expand_orbit(const SystemF& F, Orbit& orbit, int N, std::size_t budget) {
  std::unordered_map<Rational, std::size_t, RationalHash> index;
  index.reserve(orbit.records.size() * 2);
  for (std::size_t i = 0; i < orbit.records.size(); ++i) index.emplace(orbit.records[i].value, i);
  std::size_t frontier_begin = 0;
  while (frontier_begin < orbit.records.size() && orbit.records[frontier_begin].min_level < orbit.depth)
    ++frontier_begin;

  while (orbit.depth < N) {
    const std::size_t frontier_end = orbit.records.size();
    std::vector<OrbitRecord> fresh;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t letter = 1; letter <= F.size(); ++letter) {
        Rational v = F[letter - 1](orbit.records[i].value);
        if (v == orbit.seed() && !orbit.seed_return_level) orbit.seed_return_level = orbit.depth + 1;
        if (index.count(v)) continue;
        Word w = orbit.records[i].witness;
        w.push_back(static_cast<int>(letter));
        index.emplace(v, frontier_end + fresh.size());
        fresh.push_back({std::move(v), orbit.depth + 1, std::move(w)});
        if (frontier_end + fresh.size() > budget) {
          for (std::size_t j = 0; j < fresh.size(); ++j) index.erase(fresh[j].value);
          throw BudgetExceeded("orbit: more than " + std::to_string(budget) + " values at level " +
                                   std::to_string(orbit.depth + 1),
                               orbit.depth);
        }
      }
    }
    orbit.closed = fresh.empty();
    for (auto& r : fresh) orbit.records.push_back(std::move(r));
    frontier_begin = frontier_end;
    ++orbit.depth;
    if (orbit.closed) {
      // nothing new can ever appear; later levels only revisit known values
      orbit.depth = std::max(orbit.depth, N);
      break;
    }
  }
}

}  // namespace detail

/// Breadth-first orbit of x up to level N, each value with its minimal level
/// and the lexicographically first word reaching it at that level.
inline Orbit orbit_points(const SystemF& F, const Rational& x, int N, std::size_t budget = kDefaultBudget) {
  if (N < 0) throw std::invalid_argument("orbit_points: N must be >= 0");
  Orbit orbit;
  orbit.records.push_back({x, 0, {}});
  detail::expand_orbit(F, orbit, N, budget);
  return orbit;
}

/// Continues an orbit (e.g. one reloaded from a cache) to depth N in place.
inline void extend_orbit(const SystemF& F, Orbit& orbit, int N, std::size_t budget = kDefaultBudget) {
  if (orbit.records.empty()) throw std::invalid_argument("extend_orbit: empty orbit");
  detail::expand_orbit(F, orbit, N, budget);
}

struct PreperiodicBudget {
  int max_depth = 16;
  std::size_t max_records = kDefaultBudget;
};

struct PreperiodicResult {
  bool finite = false;
  std::size_t orbit_size = 0;  // when finite
  int depth_reached = 0;
};

/// Finite iff some expansion round adds no new value within the budget.
inline PreperiodicResult detect_preperiodic(const SystemF& F, const Rational& x, PreperiodicBudget budget = {}) {
  Orbit orbit;
  orbit.records.push_back({x, 0, {}});
  PreperiodicResult res;
  for (int n = 1; n <= budget.max_depth; ++n) {
    try {
      detail::expand_orbit(F, orbit, n, budget.max_records);
    } catch (const BudgetExceeded&) {
      res.depth_reached = orbit.depth;
      return res;
    }
    if (orbit.closed) {
      res.finite = true;
      res.orbit_size = orbit.size();
      res.depth_reached = n;
      return res;
    }
  }
  res.depth_reached = orbit.depth;
  return res;
}

struct CountT {
  std::size_t count = 0;
  std::vector<int> hit_levels;
};

/// #{n in 1..N : Phi^(n)(x) in S}.
inline CountT count_T(const SystemF& F, const Word& phi, const Rational& x, int N, const SetPredicate& S) {
  if (N < 1 || phi.size() < static_cast<std::size_t>(N))
    throw std::invalid_argument("count_T: need |Phi| >= N >= 1");
  check_word(F, phi);
  CountT out;
  Rational v = x;
  for (int n = 1; n <= N; ++n) {
    v = F[static_cast<std::size_t>(phi[static_cast<std::size_t>(n - 1)] - 1)](v);
    if (S.contains(v)) {
      ++out.count;
      out.hit_levels.push_back(n);
    }
  }
  return out;
}

struct MaxT {
  std::size_t count = 0;
  Word witness;
};

/// max over all k^N sequences of T_{x,Phi}(N, S) by dynamic programming over
/// (value, remaining steps); the witness takes the smallest letter on ties.
inline MaxT max_T_over_sequences(const SystemF& F, const Rational& x, int N, const SetPredicate& S,
                                 std::size_t budget = kDefaultBudget) {
  if (N < 0) throw std::invalid_argument("max_T_over_sequences: N must be >= 0");
  struct Node {
    Rational value;
    std::optional<bool> in_set;
    std::vector<std::size_t> children;           // filled on first expansion
    std::vector<std::optional<std::size_t>> g;  // g[m], best count with m steps left
  };
  const std::size_t k = F.size();
  std::vector<Node> nodes;
  std::unordered_map<Rational, std::size_t, RationalHash> ids;
  auto intern = [&](Rational v) {
    auto [it, inserted] = ids.emplace(v, nodes.size());
    if (inserted) {
      if (nodes.size() >= budget)
        throw BudgetExceeded("max_T: more than " + std::to_string(budget) + " distinct values", -1);
      nodes.push_back({std::move(v), std::nullopt, {}, std::vector<std::optional<std::size_t>>(
                                                           static_cast<std::size_t>(N) + 1)});
    }
    return it->second;
  };
  auto children = [&](std::size_t id) -> const std::vector<std::size_t>& {
    if (nodes[id].children.empty()) {
      std::vector<std::size_t> c;
      c.reserve(k);
      for (std::size_t i = 0; i < k; ++i) c.push_back(intern(F[i](nodes[id].value)));
      nodes[id].children = std::move(c);
    }
    return nodes[id].children;
  };
  auto hit = [&](std::size_t id) {
    if (!nodes[id].in_set) nodes[id].in_set = S.contains(nodes[id].value);
    return *nodes[id].in_set ? std::size_t{1} : std::size_t{0};
  };

  // iterative post-order evaluation of g(id, m)
  auto solve = [&](std::size_t root, int m_root) {
    std::vector<std::pair<std::size_t, int>> stack{{root, m_root}};
    while (!stack.empty()) {
      auto [id, m] = stack.back();
      if (nodes[id].g[static_cast<std::size_t>(m)]) {
        stack.pop_back();
        continue;
      }
      if (m == 0) {
        nodes[id].g[0] = 0;
        stack.pop_back();
        continue;
      }
      const auto kids = children(id);
      bool ready = true;
      for (auto c : kids)
        if (!nodes[c].g[static_cast<std::size_t>(m - 1)]) {
          stack.emplace_back(c, m - 1);
          ready = false;
        }
      if (!ready) continue;
      std::size_t best = 0;
      for (auto c : kids) best = std::max(best, hit(c) + *nodes[c].g[static_cast<std::size_t>(m - 1)]);
      nodes[id].g[static_cast<std::size_t>(m)] = best;
      stack.pop_back();
    }
  };

  const std::size_t root = intern(x);
  solve(root, N);
  MaxT out;
  out.count = *nodes[root].g[static_cast<std::size_t>(N)];
  std::size_t id = root;
  for (int m = N; m > 0; --m) {
    const auto kids = children(id);
    const std::size_t target = *nodes[id].g[static_cast<std::size_t>(m)];
    for (std::size_t i = 0; i < k; ++i) {
      if (hit(kids[i]) + *nodes[kids[i]].g[static_cast<std::size_t>(m - 1)] == target) {
        out.witness.push_back(static_cast<int>(i + 1));
        id = kids[i];
        break;
      }
    }
  }
  return out;
}

/// Number of distinct values reachable by words of length 1..N lying in S, for
/// each N in 1..orbit.depth (index N-1). The seed counts only once it recurs.
inline std::vector<std::size_t> count_orbit_in_set_ladder(const Orbit& orbit, const SetPredicate& S) {
  std::vector<std::size_t> per_level(static_cast<std::size_t>(std::max(orbit.depth, 0)) + 1, 0);
  for (std::size_t i = 1; i < orbit.records.size(); ++i)
    if (S.contains(orbit.records[i].value)) ++per_level[static_cast<std::size_t>(orbit.records[i].min_level)];
  if (orbit.seed_return_level && S.contains(orbit.seed()))
    ++per_level[static_cast<std::size_t>(*orbit.seed_return_level)];
  std::vector<std::size_t> cumulative;
  std::size_t acc = 0;
  for (std::size_t n = 1; n < per_level.size(); ++n) cumulative.push_back(acc += per_level[n]);
  return cumulative;
}

/// #{v in S : v = f(x), f in F_n, 1 <= n <= N}.
inline std::size_t count_orbit_in_set(const SystemF& F, const Rational& x, int N, const SetPredicate& S,
                                      std::size_t budget = kDefaultBudget) {
  if (N < 1) throw std::invalid_argument("count_orbit_in_set: N must be >= 1");
  const Orbit orbit = orbit_points(F, x, N, budget);
  return count_orbit_in_set_ladder(orbit, S).at(static_cast<std::size_t>(N - 1));
}

}  // namespace orbitlab
