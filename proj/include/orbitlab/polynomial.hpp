#pragma once

#include "orbitlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitlab {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of X^i;
// the leading entry is nonzero, and the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }
  /// a * X^m
  static Polynomial monomial(const Rational& a, std::size_t m) {
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = a;
    return Polynomial(std::move(c));
  }

  /// Parses a coefficient list, lowest degree first: "[1, 0, 2]" is 2X^2 + 1.
  static Polynomial parse(std::string_view text) {
    std::string s(text);
    const auto open = s.find('[');
    const auto close = s.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw std::invalid_argument("Polynomial: expected '[c0, c1, ...]' got '" + s + "'");
    std::vector<Rational> coeffs;
    std::string body = s.substr(open + 1, close - open - 1);
    if (body.find_first_not_of(" \t\n") == std::string::npos) return Polynomial();
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      coeffs.push_back(Rational::parse(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
  }

  [[nodiscard]] std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].str();
    }
    return out + "]";
  }

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const Rational& leading() const {
    if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return c_.back();
  }
  [[nodiscard]] Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  [[nodiscard]] Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b.scaled(Rational(-1));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  [[nodiscard]] Polynomial scaled(const Rational& s) const {
    std::vector<Rational> c = c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  [[nodiscard]] Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  // Total order by degree, then coefficients from the constant term up.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// outer(inner(X)), by Horner's scheme over polynomials.
inline Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  Polynomial acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial::constant(*it);
  return acc;
}

/// Quotient and remainder of Euclidean division over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead_inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (f.is_zero()) continue;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Monic gcd over Q; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inverse());
}

/// True iff f has exactly one nonzero coefficient; constants count.
inline bool is_monomial(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_monomial: zero polynomial");
  return std::count_if(f.coeffs().begin(), f.coeffs().end(),
                       [](const Rational& c) { return !c.is_zero(); }) == 1;
}

/// Degree of the squarefree part g / gcd(g, g') is at least 2.
inline bool has_two_distinct_roots(const Polynomial& g) {
  if (g.degree() < 1) throw std::invalid_argument("has_two_distinct_roots: constant polynomial");
  const Polynomial squarefree = divmod(g, gcd(g, g.derivative())).first;
  return squarefree.degree() >= 2;
}

}  // namespace orbitlab
