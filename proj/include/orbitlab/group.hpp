#pragma once

#include "orbitlab/height.hpp"
#include "orbitlab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitlab {

/// Relative slack applied when a floating height is compared with a threshold,
/// so that h(z) <= E holds when both sides are log of the same integer.
inline constexpr double kHeightTolerance = 1e-12;

inline bool height_within(double h, double threshold) {
  return h <= threshold + kHeightTolerance * std::max(1.0, std::fabs(threshold));
}

/// Primes dividing |n| by trial division. Intended for generator data, not orbit values.
inline std::vector<BigInt> prime_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> out;
  if (n <= 1) return out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Coordinates of a nonzero rational over a fixed prime set P: sign and the
// exponent of each prime, in the order of P.
struct ExponentVector {
  IntVector exponents;
  int sign = 1;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

struct SupportFactorization {
  ExponentVector vector;
  Rational cofactor;  // coprime to every prime of P, positive
};

/// x = sign * prod p^e_p * cofactor with cofactor coprime to P.
inline SupportFactorization factor_over_support(const Rational& x, const std::vector<BigInt>& primes) {
  if (x.is_zero()) throw std::invalid_argument("factor_over_support: zero has no factorization");
  BigInt num = abs(x.num());
  BigInt den = x.den();
  SupportFactorization out;
  out.vector.sign = x.sign();
  out.vector.exponents.reserve(primes.size());
  BigInt rest;
  for (const auto& p : primes) {
    long e = static_cast<long>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    num = rest;
    e -= static_cast<long>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    den = rest;
    out.vector.exponents.emplace_back(e);
  }
  out.cofactor = Rational(num, den);
  return out;
}

// Finitely generated subgroup of Q*, optionally with -1 adjoined.
class GroupSpec {
 public:
  GroupSpec() = default;
  GroupSpec(std::vector<Rational> generators, bool include_minus_one)
      : generators_(std::move(generators)), include_minus_one_(include_minus_one) {
    if (generators_.empty()) throw std::invalid_argument("GroupSpec: need at least one generator");
    for (const auto& g : generators_) {
      if (g.is_zero()) throw std::invalid_argument("GroupSpec: generator 0 is not a unit");
      for (auto* part : {&g.num(), &g.den()})
        for (auto& p : prime_divisors(*part)) primes_.push_back(p);
    }
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    IntMatrix rows;
    for (const auto& g : generators_) {
      auto f = factor_over_support(g, primes_);
      rows.push_back(f.vector.exponents);
      negative_.push_back(g.sign() < 0);
    }
    lattice_ = Lattice(std::move(rows), primes_.size());
  }

  [[nodiscard]] const std::vector<Rational>& generators() const { return generators_; }
  [[nodiscard]] bool include_minus_one() const { return include_minus_one_; }
  [[nodiscard]] const std::vector<BigInt>& primes() const { return primes_; }
  [[nodiscard]] const Lattice& lattice() const { return lattice_; }
  /// Rank of the exponent lattice (torsion from -1 does not count).
  [[nodiscard]] std::size_t rank() const { return lattice_.rank(); }

  /// sign * prod g_i^c_i, with an extra factor -1 when minus_one is set.
  [[nodiscard]] Rational product(const IntVector& combination, bool minus_one) const {
    if (combination.size() != generators_.size())
      throw std::invalid_argument("GroupSpec::product: combination length mismatch");
    Rational out(1);
    for (std::size_t i = 0; i < generators_.size(); ++i)
      out *= generators_[i].pow(combination[i].get_si());
    return minus_one ? -out : out;
  }

  /// Adjusts a combination realizing the exponent part of an element so that
  /// its sign is `target_sign`. Returns the minus_one flag, or nullopt if the
  /// sign cannot be realized.
  [[nodiscard]] std::optional<bool> realize_sign(IntVector& combination, int target_sign) const {
    const bool want_negative = target_sign < 0;
    if (parity(combination) == want_negative) return false;
    if (include_minus_one_) return true;
    for (const auto& rel : lattice_.relations()) {
      if (!parity(rel)) continue;
      for (std::size_t i = 0; i < combination.size(); ++i) combination[i] += rel[i];
      return false;
    }
    return std::nullopt;
  }

 private:
  // true iff prod sign(g_i)^c_i is negative
  [[nodiscard]] bool parity(const IntVector& c) const {
    BigInt s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (negative_[i]) s += c[i];
    return mpz_odd_p(s.get_mpz_t()) != 0;
  }

  std::vector<Rational> generators_;
  bool include_minus_one_ = false;
  std::vector<BigInt> primes_;
  std::vector<bool> negative_;
  Lattice lattice_;
};

enum class CertificateKind { in_gamma, in_division, witness, no_witness, not_member };

inline const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::in_gamma: return "in_gamma";
    case CertificateKind::in_division: return "in_division";
    case CertificateKind::witness: return "witness";
    case CertificateKind::no_witness: return "no_witness";
    case CertificateKind::not_member: return "not_member";
  }
  return "?";
}

// Result of a membership query. Positive kinds carry enough data to rebuild
// the queried value exactly:
//   in_gamma:    x   = product(combination, minus_one)
//   in_division: x^t = product(combination, minus_one)
//   witness:     x = y z, y^t = product(combination, minus_one)
struct MembershipCertificate {
  CertificateKind kind = CertificateKind::not_member;
  IntVector combination;
  bool minus_one = false;
  BigInt t = 1;
  Rational y;
  Rational z;
  long radius = 0;
  std::string reason;

  [[nodiscard]] bool positive() const {
    return kind == CertificateKind::in_gamma || kind == CertificateKind::in_division ||
           kind == CertificateKind::witness;
  }
};

inline MembershipCertificate not_member(std::string reason) {
  MembershipCertificate c;
  c.kind = CertificateKind::not_member;
  c.reason = std::move(reason);
  return c;
}

inline MembershipCertificate member_gamma(const Rational& x, const GroupSpec& group) {
  if (x.is_zero()) throw std::invalid_argument("member_gamma: x must be nonzero");
  auto f = factor_over_support(x, group.primes());
  if (f.cofactor != Rational(1)) return not_member("support");
  auto comb = group.lattice().combination(f.vector.exponents);
  if (!comb) return not_member("lattice");
  auto minus_one = group.realize_sign(*comb, f.vector.sign);
  if (!minus_one) return not_member("sign");
  MembershipCertificate c;
  c.kind = CertificateKind::in_gamma;
  c.combination = std::move(*comb);
  c.minus_one = *minus_one;
  return c;
}

/// Membership in the division group {x : x^t in group for some t >= 1}, with minimal t.
inline MembershipCertificate member_division_group(const Rational& x, const GroupSpec& group) {
  if (x.is_zero()) throw std::invalid_argument("member_division_group: x must be nonzero");
  auto f = factor_over_support(x, group.primes());
  if (f.cofactor != Rational(1)) return not_member("support");
  auto t0 = group.lattice().division_index(f.vector.exponents);
  if (!t0) return not_member("span");
  // torsion of Q* is {+-1}: if the sign fails at t0 it succeeds at 2 t0
  for (BigInt t : {*t0, BigInt(2 * *t0)}) {
    IntVector scaled = f.vector.exponents;
    for (auto& e : scaled) e *= t;
    auto comb = group.lattice().combination(scaled);
    const int sign = (f.vector.sign < 0 && mpz_odd_p(t.get_mpz_t())) ? -1 : 1;
    auto minus_one = group.realize_sign(*comb, sign);
    if (!minus_one) continue;
    MembershipCertificate c;
    c.kind = CertificateKind::in_division;
    c.t = t;
    c.combination = std::move(*comb);
    c.minus_one = *minus_one;
    return c;
  }
  throw std::logic_error("member_division_group: sign not realizable at 2t");
}

/// Re-derives the queried value from a positive certificate and compares exactly.
inline bool verify_certificate(const Rational& x, const GroupSpec& group,
                               const MembershipCertificate& cert) {
  switch (cert.kind) {
    case CertificateKind::in_gamma:
      return group.product(cert.combination, cert.minus_one) == x;
    case CertificateKind::in_division:
      return group.product(cert.combination, cert.minus_one) == x.pow(cert.t.get_si());
    case CertificateKind::witness:
      return cert.y * cert.z == x &&
             group.product(cert.combination, cert.minus_one) == cert.y.pow(cert.t.get_si());
    default:
      return false;
  }
}

namespace detail {

inline BigInt prime_power_product(const std::vector<BigInt>& primes, const IntVector& exps, int side) {
  BigInt out = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const long e = exps[i].get_si() * side;
    if (e > 0) out *= big_pow(primes[i], static_cast<unsigned long>(e));
  }
  return out;
}

// Bounded search for x = y z with y in the division group. `accept(h_z, h_y)`
// decides whether a candidate qualifies. Candidates y have integer exponent
// vectors within `radius` of x's support exponents, lying in the rational span
// of the group lattice, and the sign of x. Winner: smallest max(|num z|, den z),
// then lexicographically smallest exponent vector of y.
template <class Accept>
MembershipCertificate witness_search(const Rational& x, const GroupSpec& group, long radius,
                                     Accept accept) {
  if (x.is_zero()) throw std::invalid_argument("witness search: x must be nonzero");
  if (radius < 0) throw std::invalid_argument("witness search: radius must be >= 0");
  const auto& primes = group.primes();
  const auto f = factor_over_support(x, group.primes());
  const std::size_t m = primes.size();
  const bool full_rank = group.rank() == m;

  std::optional<BigInt> best_mag;
  IntVector best_exps;
  IntVector lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = f.vector.exponents[i] - radius;
    hi[i] = f.vector.exponents[i] + radius;
  }
  IntVector a = lo;
  // odometer with the last coordinate fastest: lexicographic order
  auto advance = [&] {
    for (std::size_t i = m; i-- > 0;) {
      if (a[i] < hi[i]) {
        ++a[i];
        return true;
      }
      a[i] = lo[i];
    }
    return false;
  };

  do {
    if (!full_rank && !group.lattice().in_span(a)) continue;
    IntVector diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = f.vector.exponents[i] - a[i];
    const BigInt z_num = abs(f.cofactor.num()) * prime_power_product(primes, diff, 1);
    const BigInt z_den = f.cofactor.den() * prime_power_product(primes, diff, -1);
    const BigInt z_mag = z_num > z_den ? z_num : z_den;
    // on ties the lexicographically earlier candidate stays
    if (best_mag && z_mag >= *best_mag) continue;
    const BigInt y_num = prime_power_product(primes, a, 1);
    const BigInt y_den = prime_power_product(primes, a, -1);
    const double h_y = log_abs(y_num > y_den ? y_num : y_den);
    if (accept(log_abs(z_mag), h_y)) {
      best_mag = z_mag;
      best_exps = a;
    }
  } while (advance());

  if (!best_mag) {
    MembershipCertificate c;
    c.kind = CertificateKind::no_witness;
    c.radius = radius;
    return c;
  }
  Rational y(prime_power_product(primes, best_exps, 1), prime_power_product(primes, best_exps, -1));
  if (x.sign() < 0) y = -y;
  auto ycert = member_division_group(y, group);
  MembershipCertificate c;
  c.kind = CertificateKind::witness;
  c.y = y;
  c.z = x / y;
  c.t = ycert.t;
  c.combination = std::move(ycert.combination);
  c.minus_one = ycert.minus_one;
  c.radius = radius;
  return c;
}

}  // namespace detail

/// x = y z with y in the division group and h(z) <= E, searched within `radius`.
inline MembershipCertificate member_B(const Rational& x, const GroupSpec& group, double E, long radius) {
  if (E < 0) throw std::invalid_argument("member_B: E must be >= 0");
  return detail::witness_search(x, group, radius,
                                [E](double h_z, double) { return height_within(h_z, E); });
}

/// x = y z with y in the division group and h(z) <= eps (1 + h(y)), searched within `radius`.
inline MembershipCertificate member_C(const Rational& x, const GroupSpec& group, double eps, long radius) {
  if (eps < 0) throw std::invalid_argument("member_C: eps must be >= 0");
  return detail::witness_search(x, group, radius, [eps](double h_z, double h_y) {
    return height_within(h_z, eps * (1.0 + h_y));
  });
}

/// All nonzero rationals of height <= H, sorted ascending.
inline std::vector<Rational> enumerate_height_ball(double H, long max_bound = 100000) {
  if (H < 0) throw std::invalid_argument("enumerate_height_ball: H must be >= 0");
  if (H > std::log(static_cast<double>(max_bound)) + 1.0)
    throw std::invalid_argument("enumerate_height_ball: H too large to enumerate");
  long M = static_cast<long>(std::floor(std::exp(H)));
  while (height_within(std::log(static_cast<double>(M + 1)), H)) ++M;
  while (M > 1 && !height_within(std::log(static_cast<double>(M)), H)) --M;
  if (M > max_bound) throw std::invalid_argument("enumerate_height_ball: ball too large");
  std::vector<Rational> out;
  for (long p = 1; p <= M; ++p)
    for (long q = 1; q <= M; ++q)
      if (std::gcd(p, q) == 1) {
        out.emplace_back(BigInt(p), BigInt(q));
        out.emplace_back(BigInt(-p), BigInt(q));
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbitlab
