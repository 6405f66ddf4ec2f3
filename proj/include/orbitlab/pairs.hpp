#pragma once

#include "orbitlab/orbit.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace orbitlab {

struct GapResult {
  long r = 0;
  /// 1-based i with n_{i+1} - n_i = r
  std::vector<std::size_t> indices;
  /// 2 <= T < N/2 held, so r <= 2N/T and |indices| >= T(T-1)/(4N) are guaranteed
  bool hypothesis_holds = false;
};

/// For 0 <= n_1 < ... < n_T <= N, the most frequent consecutive gap among
/// gaps r <= 2N/T (smallest r on ties).
inline GapResult gap_lemma_find_r(const std::vector<long>& seq, long N) {
  const std::size_t T = seq.size();
  if (T < 2) throw std::invalid_argument("gap_lemma_find_r: need T >= 2");
  for (std::size_t i = 0; i < T; ++i) {
    if (seq[i] < 0 || seq[i] > N) throw std::invalid_argument("gap_lemma_find_r: values must lie in [0, N]");
    if (i && seq[i] <= seq[i - 1]) throw std::invalid_argument("gap_lemma_find_r: sequence not increasing");
  }
  GapResult res;
  res.hypothesis_holds = 2 * static_cast<long>(T) < N;
  const long r_max = (2 * N) / static_cast<long>(T);
  std::map<long, std::size_t> freq;
  for (std::size_t i = 0; i + 1 < T; ++i) {
    const long gap = seq[i + 1] - seq[i];
    if (gap <= r_max) ++freq[gap];
  }
  // some gap is <= N/(T-1) <= 2N/T, so freq is never empty
  std::size_t best = 0;
  for (const auto& [gap, count] : freq)
    if (count > best) {
      best = count;
      res.r = gap;
    }
  for (std::size_t i = 0; i + 1 < T; ++i)
    if (seq[i + 1] - seq[i] == res.r) res.indices.push_back(i + 1);
  return res;
}

struct ConnectedPair {
  Rational u;
  Rational v;
  int level = 0;  // u = Phi^(level)(x), v = Phi^(level + t)(x)
  Word psi;       // letters level+1 .. level+t of Phi
};

struct PairExtraction {
  std::size_t T = 0;
  double tau = 0;
  long t = 0;
  GapResult gap;
  std::vector<ConnectedPair> pairs;
  bool hypothesis_holds = false;  // T >= 2 and tau < 1/2
};

/// Pairs (u, v) in S^2 linked by one map of F_t, read off the hit levels of Phi.
/// Without `relaxed`, tau = T/N must be < 1/2.
inline PairExtraction extract_pairs(const SystemF& F, const Rational& x, int N, const SetPredicate& S,
                                    const Word& phi, bool relaxed = false) {
  const CountT hits = count_T(F, phi, x, N, S);
  PairExtraction out;
  out.T = hits.count;
  out.tau = static_cast<double>(hits.count) / N;
  if (out.T < 2) throw std::invalid_argument("extract_pairs: need T >= 2 hits, got " + std::to_string(out.T));
  out.hypothesis_holds = 2 * out.T < static_cast<std::size_t>(N);
  if (!out.hypothesis_holds && !relaxed) throw std::invalid_argument("extract_pairs: need tau < 1/2");

  std::vector<long> levels(hits.hit_levels.begin(), hits.hit_levels.end());
  out.gap = gap_lemma_find_r(levels, N);
  out.t = out.gap.r;

  std::vector<Rational> values{x};
  for (int n = 1; n <= N; ++n) values.push_back(F[static_cast<std::size_t>(phi[static_cast<std::size_t>(n - 1)] - 1)](values.back()));
  for (std::size_t i : out.gap.indices) {
    const int level = hits.hit_levels[i - 1];
    ConnectedPair p;
    p.level = level;
    p.u = values[static_cast<std::size_t>(level)];
    p.v = values[static_cast<std::size_t>(level + out.t)];
    p.psi.assign(phi.begin() + level, phi.begin() + level + out.t);
    out.pairs.push_back(std::move(p));
  }
  return out;
}

/// #{(u, v) in S^2 : psi(u) = v}
inline std::size_t count_pairs_brute(const Polynomial& psi, const std::vector<Rational>& S) {
  const std::set<Rational> members(S.begin(), S.end());
  std::size_t count = 0;
  for (const auto& u : members)
    if (members.count(psi(u))) ++count;
  return count;
}

}  // namespace orbitlab
