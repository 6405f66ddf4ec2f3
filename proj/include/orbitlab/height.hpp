#pragma once

#include "orbitlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace orbitlab {

/// Weil height of x over Q, log max(|num|, den). Zero has height 0 by convention.
inline double height_rational(const Rational& x) {
  if (x.is_zero()) return 0.0;
  return cmp(abs(x.num()), x.den()) >= 0 ? log_abs(x.num()) : log_abs(x.den());
}

/// max(|num|, den) as an exact integer; orders values by height without rounding.
inline BigInt height_magnitude(const Rational& x) {
  BigInt n = abs(x.num());
  return n > x.den() ? n : x.den();
}

/// Coefficients scaled to coprime integers (leading sign kept).
inline std::vector<BigInt> primitive_integer_coeffs(const Polynomial& f) {
  BigInt lcm_den = 1;
  for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, c.den());
  std::vector<BigInt> ints;
  ints.reserve(f.coeffs().size());
  BigInt content = 0;
  for (const auto& c : f.coeffs()) {
    BigInt v = c.num() * (lcm_den / c.den());
    content = gcd(content, v);
    ints.push_back(std::move(v));
  }
  if (content != 0)
    for (auto& v : ints) v /= content;
  return ints;
}

/// Height of a polynomial as a point of projective space: log of the largest
/// coefficient once coefficients are coprime integers.
inline double height_polynomial(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("height_polynomial: zero polynomial");
  BigInt best = 0;
  for (const auto& v : primitive_integer_coeffs(f))
    if (abs(v) > best) best = abs(v);
  return log_abs(best);
}

// A finite set {phi_1, ..., phi_k} of polynomials of degree >= 2.
class SystemF {
 public:
  SystemF() = default;
  explicit SystemF(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw std::invalid_argument("SystemF: need at least one polynomial");
    for (const auto& p : polys_) {
      if (p.degree() < 2)
        throw std::invalid_argument("SystemF: polynomial " + p.str() + " has degree < 2");
      max_degree_ = std::max(max_degree_, p.degree());
      height_ = std::max(height_, height_polynomial(p));
    }
  }

  [[nodiscard]] std::size_t size() const { return polys_.size(); }
  [[nodiscard]] const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
  [[nodiscard]] const std::vector<Polynomial>& polys() const { return polys_; }
  [[nodiscard]] int max_degree() const { return max_degree_; }
  /// h(F) = max_i h(phi_i)
  [[nodiscard]] double height() const { return height_; }

 private:
  std::vector<Polynomial> polys_;
  int max_degree_ = 0;
  double height_ = 0.0;
};

/// Upper bound on h(phi) for phi a composition of n maps from a system of
/// maximal degree d and height hF:
///   (d^n - 1)/(d - 1) * hF + d^2 (d^(n-1) - 1)/(d - 1) * log 8
inline double composition_height_bound(int d, int n, double hF) {
  if (d < 2 || n < 1) throw std::invalid_argument("composition_height_bound: need d >= 2, n >= 1");
  const double dd = d;
  const double geo_n = (std::pow(dd, n) - 1.0) / (dd - 1.0);
  const double geo_n1 = (std::pow(dd, n - 1) - 1.0) / (dd - 1.0);
  return geo_n * hF + dd * dd * geo_n1 * std::log(8.0);
}

}  // namespace orbitlab
