#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitlab {

using BigInt = mpz_class;

/// Natural log of |n| without converting n to a double first. Returns -inf for 0.
inline double log_abs(const BigInt& n) {
  if (sgn(n) == 0) return -HUGE_VAL;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53) return std::log(std::fabs(n.get_d()));
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline std::size_t hash_big(const BigInt& n) {
  std::size_t h = static_cast<std::size_t>(sgn(n) + 1);
  const std::size_t limbs = mpz_size(n.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    auto limb = static_cast<std::size_t>(mpz_getlimbn(n.get_mpz_t(), i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& n, const BigInt& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p" with an optional leading minus.
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t' && c != '\n') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto valid_int = [](std::string_view part, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    return Rational(BigInt(num), BigInt(den));
  }

  [[nodiscard]] std::string str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  [[nodiscard]] const BigInt& num() const { return q_.get_num(); }
  [[nodiscard]] const BigInt& den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }

  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
  }
  /// Integer power; negative exponents invert.
  [[nodiscard]] Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    auto ue = static_cast<unsigned long>(e);
    return Rational(big_pow(num(), ue), big_pow(den(), ue));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    return hash_big(r.num()) * 31 + hash_big(r.den());
  }
};

}  // namespace orbitlab
