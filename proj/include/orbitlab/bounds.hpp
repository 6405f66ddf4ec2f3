#pragma once

#include "orbitlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitlab {

enum class Scale { linear = 0, log = 1, loglog = 2 };

inline const char* to_string(Scale s) {
  switch (s) {
    case Scale::linear: return "linear";
    case Scale::log: return "log";
    case Scale::loglog: return "loglog";
  }
  return "?";
}

// A positive quantity stored as itself, its log, or its log log. Values from
// different scales compare after lifting both to the coarser scale; quantities
// <= 1 all collapse to -inf at loglog scale.
struct LogScaleValue {
  Scale scale = Scale::linear;
  double value = 0.0;

  static LogScaleValue linear(double v) { return {Scale::linear, v}; }
  static LogScaleValue log(double v) { return {Scale::log, v}; }
  static LogScaleValue loglog(double v) { return {Scale::loglog, v}; }

  [[nodiscard]] double at(Scale target) const {
    double v = value;
    for (int s = static_cast<int>(scale); s < static_cast<int>(target); ++s)
      v = v > 0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    for (int s = static_cast<int>(scale); s > static_cast<int>(target); --s) v = std::exp(v);
    return v;
  }

  friend std::partial_ordering operator<=>(const LogScaleValue& a, const LogScaleValue& b) {
    const Scale s = std::max(a.scale, b.scale);
    return a.at(s) <=> b.at(s);
  }
  friend bool operator==(const LogScaleValue& a, const LogScaleValue& b) {
    return (a <=> b) == std::partial_ordering::equivalent;
  }
};

/// log(a + b) for quantities given by their logs, without overflow.
inline double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

// Prefer log scale while it stays finite; fall back to loglog.
inline LogScaleValue from_log(double log_value, double loglog_value) {
  if (std::isfinite(log_value)) return LogScaleValue::log(log_value);
  return LogScaleValue::loglog(loglog_value);
}

/// The quantity a + b.
inline LogScaleValue log_sum(const LogScaleValue& a, const LogScaleValue& b) {
  const double la = a.at(Scale::log), lb = b.at(Scale::log);
  if (std::isfinite(la) && std::isfinite(lb)) return LogScaleValue::log(log_add_exp(la, lb));
  const double lla = a.at(Scale::loglog), llb = b.at(Scale::loglog);
  // the smaller term is negligible: e^{e^m} + e^{e^n} = e^{e^m (1 + o(1))}
  const double hi = std::max(lla, llb), lo = std::min(lla, llb);
  const double log_hi = std::exp(hi);
  if (!std::isfinite(log_hi)) return LogScaleValue::loglog(hi);
  return LogScaleValue::loglog(std::log(log_hi + std::log1p(std::exp(std::exp(lo) - log_hi))));
}

/// The quantity a * b.
inline LogScaleValue log_product(const LogScaleValue& a, const LogScaleValue& b) {
  const double la = a.at(Scale::log), lb = b.at(Scale::log);
  if (std::isfinite(la + lb)) return LogScaleValue::log(la + lb);
  const double lla = a.at(Scale::loglog), llb = b.at(Scale::loglog);
  return LogScaleValue::loglog(log_add_exp(lla, llb));
}

/// Node count of the complete k-ary tree of depth t - 1.
inline BigInt tree_size_B(long k, long t) {
  if (k < 1 || t < 1) throw std::invalid_argument("tree_size_B: need k, t >= 1");
  if (k == 1) return BigInt(t);
  return (big_pow(BigInt(k), static_cast<unsigned long>(t)) - 1) / (k - 1);
}

/// log A(n, r) where A(n, r) = (8n)^(4 n^4 (n + r + 1)); loglog scale once the log overflows.
inline LogScaleValue log_A(const BigInt& n, long r) {
  if (n < 1 || r < 0) throw std::invalid_argument("log_A: need n >= 1, r >= 0");
  const BigInt factor = 4 * big_pow(n, 4) * (n + r + 1);
  const double log8n = std::log(8.0) + log_abs(n);
  return from_log(factor.get_d() * log8n, log_abs(factor) + std::log(log8n));
}

/// log(D A(D+1, r) + D 2^(D+1)), the pair-count bound for a non-monomial of degree D.
inline LogScaleValue log_pair_count_bound(const BigInt& D, long r) {
  if (D < 1) throw std::invalid_argument("log_pair_count_bound: need D >= 1");
  const LogScaleValue logD = LogScaleValue::log(log_abs(D));
  const LogScaleValue first = log_product(logD, log_A(D + 1, r));
  const BigInt exp2 = D + 1;
  const LogScaleValue second =
      log_product(logD, from_log(exp2.get_d() * std::log(2.0), log_abs(exp2) + std::log(std::log(2.0))));
  return log_sum(first, second);
}

/// log of zeta^-1 = c0 exp(2 Delta^2) Delta^(7r+22) (Delta + h) (log Delta)^6.
inline double zeta_inverse(double Delta, double h, long r, double c0) {
  if (Delta < 2) throw std::invalid_argument("zeta_inverse: need Delta >= 2");
  if (h < 0 || r < 0 || c0 <= 0) throw std::invalid_argument("zeta_inverse: need h >= 0, r >= 0, c0 > 0");
  return std::log(c0) + 2 * Delta * Delta + (7.0 * r + 22.0) * std::log(Delta) + std::log(Delta + h) +
         6 * std::log(std::log(Delta));
}

/// Variant used inside the frequency proofs: exponent 7r+23 with (Delta + h) absorbed.
inline double zeta_inverse_proof_variant(double Delta, long r, double c0) {
  if (Delta < 2) throw std::invalid_argument("zeta_inverse: need Delta >= 2");
  if (r < 0 || c0 <= 0) throw std::invalid_argument("zeta_inverse: need r >= 0, c0 > 0");
  return std::log(c0) + 2 * Delta * Delta + (7.0 * r + 23.0) * std::log(Delta) +
         6 * std::log(std::log(Delta));
}

/// log log of exp((h + 1) exp((2 + slack) Delta^2)).
inline LogScaleValue log_curve_intersection_bound(double h, double Delta, double slack) {
  if (h < 0 || slack < 0) throw std::invalid_argument("log_curve_intersection_bound: need h, slack >= 0");
  return LogScaleValue::loglog(std::log(h + 1) + (2 + slack) * Delta * Delta);
}

inline double log_theta_N(double N, long r) {
  if (N < 16) throw std::domain_error("theta_N: need N >= 16");
  if (r < 0) throw std::domain_error("theta_N: need r >= 0");
  const double ll = std::log(std::log(N));
  return -2 * ll - (3.5 * r + 12) * std::log(ll);
}

/// theta_N = (log N)^-2 (log log N)^(-7r/2 - 12)
inline double theta_N(double N, long r) { return std::exp(log_theta_N(N, r)); }

struct ThetaCondition {
  double log_theta = 0;
  double log_rhs = 0;
  bool holds = false;
};

/// theta_N <= exp(d^(-2 t_N)) d^(X (-7r - 24)) with X = N as stated, or X = t_N
/// for the proof variant.
inline ThetaCondition thm64_theta_condition(double N, long t_N, long d, long r, bool proof_variant) {
  if (d < 2 || t_N < 1) throw std::domain_error("thm64 condition: need d >= 2, t_N >= 1");
  ThetaCondition c;
  c.log_theta = log_theta_N(N, r);
  const double X = proof_variant ? static_cast<double>(t_N) : N;
  c.log_rhs = std::pow(static_cast<double>(d), -2.0 * t_N) - X * (7.0 * r + 24.0) * std::log(d);
  c.holds = c.log_theta <= c.log_rhs;
  return c;
}

/// t_N ~ log log((10 log d + s) N / log log N) / (10 log d + s)
inline double t_N_double_log_rule(double N, long d, double slack) {
  const double c = 10 * std::log(static_cast<double>(d)) + slack;
  const double inner = c * N / std::log(std::log(N));
  if (!(N > std::exp(1.0)) || inner <= std::exp(1.0)) throw std::domain_error("t_N rule: N too small");
  return std::log(std::log(inner)) / c;
}

/// t_N ~ log log log((4 log d + s) N / log log log N) / (4 log d + s)
inline double t_N_triple_log_rule(double N, long d, double slack) {
  const double c = 4 * std::log(static_cast<double>(d)) + slack;
  if (!(N > std::exp(std::exp(1.0)))) throw std::domain_error("t_N rule: N too small");
  const double inner = c * N / std::log(std::log(std::log(N)));
  if (inner <= std::exp(std::exp(1.0))) throw std::domain_error("t_N rule: N too small");
  return std::log(std::log(std::log(inner))) / c;
}

struct BoundParams {
  double N = 0;
  long d = 2;
  long k = 1;
  long r = 1;
  long t = 1;  // t for thm61, t_N for cor62/thm64
  long l = 1;
  double slack = 0;
  double c0 = 1;
};

inline const std::vector<std::string>& theorem_bound_names() {
  static const std::vector<std::string> names{"thm42", "thm44", "cor43", "cor45", "thm61", "cor62", "thm64"};
  return names;
}

/// Right-hand side of the named asymptotic bound with o(1) replaced by `slack`.
///   thm42 / thm44: linear;  cor43 / cor45 / thm61: log;  cor62 / thm64: loglog.
inline LogScaleValue evaluate_theorem_bound(const std::string& name, const BoundParams& p) {
  if (p.d < 2) throw std::domain_error(name + ": need d >= 2");
  const double logd = std::log(static_cast<double>(p.d));
  auto freq = [&](double coef, int nested) {
    double denom = p.N;
    for (int i = 0; i < nested; ++i) {
      if (!(denom > 0)) throw std::domain_error(name + ": N too small for nested logs");
      denom = std::log(denom);
    }
    if (!(denom > 0)) throw std::domain_error(name + ": N too small for nested logs");
    return (coef * logd + p.slack) * p.N / denom;
  };
  if (name == "thm42") return LogScaleValue::linear(freq(4, 3));
  if (name == "thm44") return LogScaleValue::linear(freq(10, 2));
  if (name == "cor43" || name == "cor45") {
    if (p.k < 1) throw std::domain_error(name + ": need k >= 1");
    const double base = name == "cor43" ? freq(4, 3) : freq(10, 2);
    return LogScaleValue::log(p.N * std::log(static_cast<double>(p.k)) + std::log(base));
  }
  if (name == "thm61") {
    if (p.k < 1 || p.t < 1 || p.l < 1) throw std::domain_error("thm61: need k, t, l >= 1");
    const double logB = log_abs(tree_size_B(p.k, p.t));
    const LogScaleValue prefactor =
        LogScaleValue::log(static_cast<double>(p.l + 1) * logB - std::log(static_cast<double>(p.t)));
    return log_product(prefactor, log_pair_count_bound(big_pow(BigInt(p.d), static_cast<unsigned long>(p.t)), p.r));
  }
  if (name == "cor62") return LogScaleValue::loglog((10 * logd + p.slack) * static_cast<double>(p.t));
  if (name == "thm64") {
    const double v = std::exp((4 * logd + p.slack) * static_cast<double>(p.t));
    if (!std::isfinite(v)) throw std::domain_error("thm64: t_N too large for loglog scale");
    return LogScaleValue::loglog(v);
  }
  throw std::invalid_argument("unknown bound '" + name + "'");
}

}  // namespace orbitlab
