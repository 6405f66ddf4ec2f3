#pragma once

#include "orbitlab/bounds.hpp"
#include "orbitlab/orbit.hpp"

#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orbitlab {

// Directed graph whose vertices carry rational values and whose edges out of
// each vertex are labeled 1..k. An absent edge means the image left the
// vertex set; walks along it depart the graph.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;
  LabeledDigraph(std::size_t k, std::vector<Rational> values)
      : k_(k), values_(std::move(values)), succ_(values_.size(), std::vector<std::optional<std::size_t>>(k)) {
    if (k_ < 1) throw std::invalid_argument("LabeledDigraph: need k >= 1");
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!index_.emplace(values_[i], i).second)
        throw std::invalid_argument("LabeledDigraph: duplicate vertex " + values_[i].str());
  }

  void set_edge(std::size_t from, int label, std::size_t to) {
    check_label(label);
    if (from >= size() || to >= size()) throw std::out_of_range("LabeledDigraph: vertex out of range");
    succ_[from][static_cast<std::size_t>(label - 1)] = to;
  }

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] const Rational& value(std::size_t v) const { return values_.at(v); }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Rational& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::optional<std::size_t> successor(std::size_t v, int label) const {
    check_label(label);
    return succ_.at(v)[static_cast<std::size_t>(label - 1)];
  }

 private:
  void check_label(int label) const {
    if (label < 1 || static_cast<std::size_t>(label) > k_)
      throw std::out_of_range("LabeledDigraph: label " + std::to_string(label) + " outside 1..k");
  }

  std::size_t k_ = 1;
  std::vector<Rational> values_;
  std::vector<std::vector<std::optional<std::size_t>>> succ_;
  std::unordered_map<Rational, std::size_t, RationalHash> index_;
};

// The curve psi(X) - Y = 0.
struct CurveSpec {
  Polynomial psi;
  int Delta = 0;  // deg_X + deg_Y

  explicit CurveSpec(Polynomial p) : psi(std::move(p)), Delta(psi.degree() + 1) {
    if (psi.degree() < 1) throw std::invalid_argument("CurveSpec: need deg psi >= 1");
  }
};

/// psi(X) - Y is special iff psi is a monomial, i.e. the curve is aX^m - Y.
inline bool is_special_curve(const Polynomial& psi) {
  if (psi.degree() < 1) throw std::invalid_argument("is_special_curve: need deg psi >= 1");
  return is_monomial(psi);
}

class UnsupportedForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Classifies a bivariate F given as {(deg_X, deg_Y) -> coefficient}. Only
/// F = c (psi(X) - Y) is supported; anything else throws UnsupportedForm.
inline bool is_special_curve(const std::map<std::pair<int, int>, Rational>& terms) {
  std::optional<Rational> y_coeff;
  std::vector<Rational> x_part;
  for (const auto& [deg, c] : terms) {
    if (c.is_zero()) continue;
    const auto [dx, dy] = deg;
    if (dx < 0 || dy < 0) throw std::invalid_argument("is_special_curve: negative degree");
    if (dy == 1 && dx == 0) {
      y_coeff = c;
    } else if (dy == 0) {
      if (x_part.size() <= static_cast<std::size_t>(dx)) x_part.resize(static_cast<std::size_t>(dx) + 1, Rational(0));
      x_part[static_cast<std::size_t>(dx)] = c;
    } else {
      throw UnsupportedForm("is_special_curve: only curves psi(X) - Y are supported");
    }
  }
  if (!y_coeff) throw UnsupportedForm("is_special_curve: only curves psi(X) - Y are supported");
  return is_special_curve(Polynomial(x_part).scaled(-y_coeff->inverse()));
}

struct OrbitGraph {
  LabeledDigraph graph;
  std::size_t basepoint = 0;
  std::vector<bool> in_set;  // membership of each vertex in S
};

/// Vertices: x and the orbit values of level <= N lying in S. Edge (u, i) is
/// present iff phi_i(u) is a vertex.
inline OrbitGraph build_orbit_graph(const SystemF& F, const Orbit& orbit, const SetPredicate& S) {
  std::vector<Rational> values{orbit.seed()};
  std::vector<bool> member{S.contains(orbit.seed())};
  for (std::size_t i = 1; i < orbit.records.size(); ++i)
    if (S.contains(orbit.records[i].value)) {
      values.push_back(orbit.records[i].value);
      member.push_back(true);
    }
  OrbitGraph out{LabeledDigraph(F.size(), values), 0, std::move(member)};
  for (std::size_t u = 0; u < values.size(); ++u)
    for (std::size_t i = 0; i < F.size(); ++i)
      if (auto target = out.graph.index_of(F[i](values[u])))
        out.graph.set_edge(u, static_cast<int>(i + 1), *target);
  return out;
}

inline OrbitGraph build_orbit_graph(const SystemF& F, const Rational& x, int N, const SetPredicate& S,
                                    std::size_t budget = kDefaultBudget) {
  return build_orbit_graph(F, orbit_points(F, x, N, budget), S);
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first distances from u; kUnreachable where no path exists.
inline std::vector<std::size_t> distances_from(const LabeledDigraph& G, std::size_t u) {
  std::vector<std::size_t> dist(G.size(), kUnreachable);
  std::deque<std::size_t> queue{u};
  dist.at(u) = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (int label = 1; label <= static_cast<int>(G.k()); ++label)
      if (auto w = G.successor(v, label); w && dist[*w] == kUnreachable) {
        dist[*w] = dist[v] + 1;
        queue.push_back(*w);
      }
  }
  return dist;
}

inline std::optional<std::size_t> distance(const LabeledDigraph& G, std::size_t u, std::size_t v) {
  const std::size_t d = distances_from(G, u).at(v);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

/// End of the walk from u following the labels of omega; nullopt if it departs.
inline std::optional<std::size_t> walk_endpoint(const LabeledDigraph& G, std::size_t u, const Word& omega) {
  std::optional<std::size_t> v = u;
  for (int label : omega) {
    v = G.successor(*v, label);
    if (!v) return std::nullopt;
  }
  return v;
}

namespace detail {

inline std::size_t count_L(const std::vector<std::size_t>& dist, const std::vector<bool>& A,
                           const std::vector<const std::vector<std::optional<std::size_t>>*>& endpoints,
                           std::size_t N) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] > N) continue;
    bool ok = true;
    for (const auto* ends : endpoints) {
      const auto& e = (*ends)[v];
      if (!e || dist[*e] > N || !A[*e]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline std::vector<std::optional<std::size_t>> endpoints_of(const LabeledDigraph& G, const Word& w) {
  std::vector<std::optional<std::size_t>> out(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) out[v] = walk_endpoint(G, v, w);
  return out;
}

}  // namespace detail

/// #{v : d(u,v) <= N and, for every omega_i, omega_i(v) exists, d(u, omega_i(v)) <= N, omega_i(v) in A}
inline std::size_t L_N(const LabeledDigraph& G, std::size_t u, const std::vector<bool>& A,
                       const std::vector<Word>& words, std::size_t N) {
  if (words.empty()) throw std::invalid_argument("L_N: need at least one word");
  if (A.size() != G.size()) throw std::invalid_argument("L_N: A must have one flag per vertex");
  const auto dist = distances_from(G, u);
  std::vector<std::vector<std::optional<std::size_t>>> ends;
  ends.reserve(words.size());
  for (const auto& w : words) ends.push_back(detail::endpoints_of(G, w));
  std::vector<const std::vector<std::optional<std::size_t>>*> ptrs;
  for (const auto& e : ends) ptrs.push_back(&e);
  return detail::count_L(dist, A, ptrs, N);
}

/// #{v : d(u,v) <= N}
inline std::size_t ball_size(const LabeledDigraph& G, std::size_t u, std::size_t N) {
  std::size_t n = 0;
  for (auto d : distances_from(G, u))
    if (d <= N) ++n;
  return n;
}

/// Nonempty words of length <= t over 1..k in lexicographic order.
inline std::vector<Word> words_up_to(std::size_t k, std::size_t t) {
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self) -> void {
    for (std::size_t i = 1; i <= k; ++i) {
      w.push_back(static_cast<int>(i));
      out.push_back(w);
      if (w.size() < t) self(self);
      w.pop_back();
    }
  };
  if (t > 0) rec(rec);
  return out;
}

enum class WitnessMode { exhaustive, greedy };

struct WitnessSearch {
  std::vector<Word> words;
  std::size_t L = 0;
  std::size_t ball = 0;         // #{v : d(u,v) <= N}
  std::size_t ball_in_A = 0;    // #{v in A : d(u,v) <= N}
  double threshold = 0;         // max{3B(k,t), (3l/t) ball}
  bool hypothesis_met = false;  // ball_in_A >= threshold
  double ratio = 0;             // L B(k,t)^(l+1) / (t ball)
  bool heuristic = false;       // greedy mode: not a certified maximum
};

/// Word tuple (omega_1..omega_l), each nonempty of length <= t, maximizing L_N.
/// Exhaustive mode scans all tuples in lexicographic order and keeps the first
/// maximizer; greedy mode fixes one word at a time.
inline WitnessSearch find_witness_words(const LabeledDigraph& G, std::size_t u, const std::vector<bool>& A,
                                        std::size_t t, std::size_t l, std::size_t N,
                                        WitnessMode mode = WitnessMode::exhaustive,
                                        std::size_t budget = kDefaultBudget) {
  if (t < 1 || l < 1) throw std::invalid_argument("find_witness_words: need t, l >= 1");
  if (A.size() != G.size()) throw std::invalid_argument("find_witness_words: A must have one flag per vertex");
  const auto words = words_up_to(G.k(), t);
  if (mode == WitnessMode::exhaustive) {
    double tuples = 1;
    for (std::size_t i = 0; i < l; ++i) tuples *= static_cast<double>(words.size());
    if (tuples > static_cast<double>(budget))
      throw BudgetExceeded("find_witness_words: " + std::to_string(tuples) + " word tuples exceed budget", -1);
  }
  const auto dist = distances_from(G, u);
  std::vector<std::vector<std::optional<std::size_t>>> ends;
  ends.reserve(words.size());
  for (const auto& w : words) ends.push_back(detail::endpoints_of(G, w));

  WitnessSearch out;
  out.heuristic = mode == WitnessMode::greedy;
  std::vector<std::size_t> best_choice;
  bool found = false;
  if (mode == WitnessMode::exhaustive) {
    std::vector<std::size_t> choice(l, 0);
    std::vector<const std::vector<std::optional<std::size_t>>*> ptrs(l);
    while (true) {
      for (std::size_t i = 0; i < l; ++i) ptrs[i] = &ends[choice[i]];
      const std::size_t L = detail::count_L(dist, A, ptrs, N);
      if (!found || L > out.L) {
        out.L = L;
        best_choice = choice;
        found = true;
      }
      std::size_t i = l;
      while (i > 0 && ++choice[i - 1] == words.size()) choice[--i] = 0;
      if (i == 0) break;
    }
  } else {
    std::vector<const std::vector<std::optional<std::size_t>>*> ptrs;
    for (std::size_t slot = 0; slot < l; ++slot) {
      std::size_t best_w = 0, best_L = 0;
      ptrs.push_back(nullptr);
      for (std::size_t w = 0; w < words.size(); ++w) {
        ptrs.back() = &ends[w];
        const std::size_t L = detail::count_L(dist, A, ptrs, N);
        if (w == 0 || L > best_L) {
          best_L = L;
          best_w = w;
        }
      }
      ptrs.back() = &ends[best_w];
      best_choice.push_back(best_w);
      out.L = best_L;
    }
  }
  for (auto c : best_choice) out.words.push_back(words[c]);

  const double B = tree_size_B(static_cast<long>(G.k()), static_cast<long>(t)).get_d();
  for (std::size_t v = 0; v < G.size(); ++v)
    if (dist[v] <= N) {
      ++out.ball;
      if (A[v]) ++out.ball_in_A;
    }
  out.threshold = std::max(3 * B, 3.0 * static_cast<double>(l) / static_cast<double>(t) * static_cast<double>(out.ball));
  out.hypothesis_met = static_cast<double>(out.ball_in_A) >= out.threshold;
  out.ratio = static_cast<double>(out.L) * std::pow(B, static_cast<double>(l + 1)) /
              (static_cast<double>(t) * static_cast<double>(out.ball));
  return out;
}

struct Theorem61Report {
  std::size_t count = 0;        // #{v in Gamma : v = f(x), f in F_n, n <= N}
  BigInt threshold = 0;         // 3 B(k, t)
  bool hypothesis_met = false;  // count >= 3 B(k, t)
  WitnessSearch witness;
  LogScaleValue bound;          // B^(l+1)/t (d^t A(d^t+1, r) + d^t 2^(d^t+1))
  bool count_within_bound = false;
};

/// Orbit-in-group count against the graph-lemma bound, with the witness-word search on the orbit graph.
inline Theorem61Report theorem61_experiment(const SystemF& F, const Rational& x, const GroupPtr& group, int N,
                                            std::size_t t, std::size_t l, std::size_t budget = kDefaultBudget) {
  if (t < 3 * l) throw std::invalid_argument("theorem61_experiment: need t >= 3l");
  const SetPredicate S = SetPredicate::gamma(group);
  Theorem61Report rep;
  const Orbit orbit = orbit_points(F, x, N, budget);
  const OrbitGraph og = build_orbit_graph(F, orbit, S);
  rep.count = count_orbit_in_set_ladder(orbit, S).at(static_cast<std::size_t>(N - 1));
  rep.threshold = 3 * tree_size_B(static_cast<long>(F.size()), static_cast<long>(t));
  rep.hypothesis_met = BigInt(static_cast<unsigned long>(rep.count)) >= rep.threshold;
  rep.witness = find_witness_words(og.graph, og.basepoint, og.in_set, t, l, static_cast<std::size_t>(N),
                                   WitnessMode::exhaustive, budget);
  BoundParams p;
  p.d = F.max_degree();
  p.k = static_cast<long>(F.size());
  p.r = static_cast<long>(group->rank());
  p.t = static_cast<long>(t);
  p.l = static_cast<long>(l);
  rep.bound = evaluate_theorem_bound("thm61", p);
  rep.count_within_bound = LogScaleValue::linear(static_cast<double>(rep.count)) <= rep.bound;
  return rep;
}

}  // namespace orbitlab
