#pragma once

// Brute-force reference implementations. They share no code with the
// optimised paths beyond polynomial evaluation and set membership.

#include "orbitlab/graph.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace orbitlab::oracle {

/// All words of length exactly n over 1..k, lexicographic.
inline std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t a = 1; a <= k; ++a) {
        Word v = w;
        v.push_back(static_cast<int>(a));
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

/// max over all k^N sequences of #{n <= N : Phi^(n)(x) in S}.
inline std::size_t max_T(const SystemF& F, const Rational& x, int N, const SetPredicate& S) {
  std::map<Rational, bool> memo;
  auto in_S = [&](const Rational& v) {
    auto it = memo.find(v);
    if (it == memo.end()) it = memo.emplace(v, S.contains(v)).first;
    return it->second;
  };
  std::size_t best = 0;
  for (const auto& w : words_of_length(F.size(), static_cast<std::size_t>(N))) {
    Rational v = x;
    std::size_t hits = 0;
    for (int a : w) {
      v = F[static_cast<std::size_t>(a - 1)](v);
      if (in_S(v)) ++hits;
    }
    best = std::max(best, hits);
  }
  return best;
}

/// #{v in S : v = f(x) for a word f of length 1..N}, by evaluating every word.
inline std::size_t count_orbit_in_set(const SystemF& F, const Rational& x, int N, const SetPredicate& S) {
  std::set<Rational> reached;
  for (int n = 1; n <= N; ++n)
    for (const auto& w : words_of_length(F.size(), static_cast<std::size_t>(n))) {
      Rational v = x;
      for (int a : w) v = F[static_cast<std::size_t>(a - 1)](v);
      reached.insert(v);
    }
  std::size_t count = 0;
  for (const auto& v : reached)
    if (S.contains(v)) ++count;
  return count;
}

/// {(+-1) prod g_i^c_i : |c_i| <= bound}, with the sign only if include_minus_one.
inline std::set<Rational> enumerate_gamma(const std::vector<Rational>& gens, bool include_minus_one, long bound) {
  std::set<Rational> out{Rational(1)};
  for (const auto& g : gens) {
    std::set<Rational> next;
    std::vector<Rational> powers;
    for (long c = -bound; c <= bound; ++c) powers.push_back(g.pow(c));
    for (const auto& v : out)
      for (const auto& p : powers) next.insert(v * p);
    out = std::move(next);
  }
  if (include_minus_one) {
    std::set<Rational> signed_out = out;
    for (const auto& v : out) signed_out.insert(-v);
    out = std::move(signed_out);
  }
  return out;
}

/// Exponents of |x| over `primes` by repeated division; nullopt if another prime divides x.
inline std::optional<std::vector<long>> exponents(const Rational& x, const std::vector<long>& primes) {
  std::vector<long> e(primes.size(), 0);
  BigInt n = abs(x.num()), d = x.den();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const BigInt p = primes[i];
    while (n % p == 0) {
      n /= p;
      ++e[i];
    }
    while (d % p == 0) {
      d /= p;
      --e[i];
    }
  }
  if (n != 1 || d != 1) return std::nullopt;
  return e;
}

/// Membership decided by Gaussian elimination over Q on the exponent vectors.
/// Decides every x when the generators are independent; otherwise only those
/// outside the rational span. nullopt means undecided.
inline std::optional<bool> decide_gamma(const std::vector<Rational>& gens, bool include_minus_one, const Rational& x,
                                        const std::vector<long>& primes) {
  if (x.is_zero()) return false;
  const auto ex = exponents(x, primes);
  if (!ex) return false;
  const std::size_t m = gens.size(), P = primes.size();
  // augmented system: columns are generators, last column is x
  std::vector<std::vector<mpq_class>> M(P, std::vector<mpq_class>(m + 1));
  std::vector<int> gen_sign(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto eg = exponents(gens[j], primes);
    if (!eg) return std::nullopt;
    for (std::size_t i = 0; i < P; ++i) M[i][j] = (*eg)[i];
    gen_sign[j] = gens[j].sign();
  }
  for (std::size_t i = 0; i < P; ++i) M[i][m] = (*ex)[i];
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < P; ++col) {
    std::size_t sel = row;
    while (sel < P && M[sel][col] == 0) ++sel;
    if (sel == P) continue;
    std::swap(M[sel], M[row]);
    for (std::size_t i = 0; i < P; ++i) {
      if (i == row || M[i][col] == 0) continue;
      const mpq_class f = M[i][col] / M[row][col];
      for (std::size_t j = col; j <= m; ++j) M[i][j] -= f * M[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < P; ++i)
    if (M[i][m] != 0) return false;  // outside the rational span
  if (pivot_cols.size() < m) return std::nullopt;
  // independent generators: the unique solution must be integral
  int sign = 1;
  for (std::size_t r = 0; r < m; ++r) {
    mpq_class c = M[r][m] / M[r][pivot_cols[r]];
    if (c.get_den() != 1) return false;
    if (gen_sign[pivot_cols[r]] < 0 && mpz_odd_p(c.get_num().get_mpz_t())) sign = -sign;
  }
  return include_minus_one || sign == x.sign();
}

/// Node count of the complete k-ary tree of depth t-1: one node per path
/// from the root, i.e. per word of length < t.
inline std::size_t tree_nodes(std::size_t k, std::size_t t) {
  std::size_t total = 0;
  for (std::size_t n = 0; n < t; ++n) total += words_of_length(k, n).size();
  return total;
}

/// #{v : d(u, v) <= N} by an independent breadth-first search.
inline std::size_t ball(const LabeledDigraph& G, std::size_t u, std::size_t N) {
  std::vector<bool> seen(G.size(), false);
  std::vector<std::size_t> frontier{u};
  seen[u] = true;
  std::size_t count = 1;
  for (std::size_t step = 0; step < N && !frontier.empty(); ++step) {
    std::vector<std::size_t> next;
    for (auto v : frontier)
      for (int a = 1; a <= static_cast<int>(G.k()); ++a)
        if (auto w = G.successor(v, a); w && !seen[*w]) {
          seen[*w] = true;
          ++count;
          next.push_back(*w);
        }
    frontier = std::move(next);
  }
  return count;
}

/// Polynomial height as a sum of local contributions: the archimedean max
/// plus log max |c|_p over every prime p dividing a numerator or denominator.
inline double place_height(const Polynomial& f) {
  std::set<long> primes;
  auto collect = [&](BigInt n) {
    n = abs(n);
    for (long p = 2; n > 1; ++p) {
      if (BigInt(p) * p > n) {
        primes.insert(n.get_si());
        break;
      }
      while (n % p == 0) {
        primes.insert(p);
        n /= p;
      }
    }
  };
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    collect(c.num());
    collect(c.den());
  }
  double h = 0;
  {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& c : f.coeffs())
      if (!c.is_zero()) m = std::max(m, std::log(std::abs(c.raw().get_d())));
    h += m;
  }
  for (long p : primes) {
    long best = std::numeric_limits<long>::min();  // max of -v_p(c)
    for (const auto& c : f.coeffs()) {
      if (c.is_zero()) continue;
      long v = 0;
      BigInt n = c.num(), d = c.den();
      while (n % p == 0) {
        n /= p;
        ++v;
      }
      while (d % p == 0) {
        d /= p;
        --v;
      }
      best = std::max(best, -v);
    }
    h += static_cast<double>(best) * std::log(static_cast<double>(p));
  }
  return h;
}

}  // namespace orbitlab::oracle
