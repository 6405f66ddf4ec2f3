#pragma once

#include "orbitlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbitlab {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

// Integer lattice spanned by the rows of a generator matrix, kept in row
// Hermite normal form together with the unimodular transform that produced it.
//
// For generators G (n x m) we hold U (n x n, det = +-1) with U G = [H; 0]:
// the first rank() rows of U G are the echelon basis H, the remaining rows of U
// span the integer relations among the generators.
class Lattice {
 public:
  Lattice() = default;

  Lattice(IntMatrix generators, std::size_t dim)
      : dim_(dim), num_generators_(generators.size()) {
    const std::size_t n = generators.size();
    for (const auto& row : generators)
      if (row.size() != dim) throw std::invalid_argument("Lattice: ragged generator matrix");
    IntMatrix a = std::move(generators);
    IntMatrix u(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    std::size_t piv = 0;
    for (std::size_t col = 0; col < dim && piv < n; ++col) {
      for (std::size_t j = piv + 1; j < n; ++j) {
        if (a[j][col] == 0) continue;
        if (a[piv][col] == 0) {
          std::swap(a[piv], a[j]);
          std::swap(u[piv], u[j]);
          continue;
        }
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[piv][col].get_mpz_t(),
                   a[j][col].get_mpz_t());
        const BigInt ap = a[piv][col] / g;
        const BigInt aj = a[j][col] / g;
        combine(a[piv], a[j], s, t, ap, aj);
        combine(u[piv], u[j], s, t, ap, aj);
      }
      if (a[piv][col] == 0) continue;
      if (a[piv][col] < 0) {
        negate(a[piv]);
        negate(u[piv]);
      }
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < piv; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[piv][col].get_mpz_t());
        if (q == 0) continue;
        axpy(a[i], a[piv], -q);
        axpy(u[i], u[piv], -q);
      }
      pivots_.push_back(col);
      ++piv;
    }
    basis_.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(piv));
    transform_.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(piv));
    relations_.assign(u.begin() + static_cast<std::ptrdiff_t>(piv), u.end());
  }

  [[nodiscard]] std::size_t rank() const { return basis_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t num_generators() const { return num_generators_; }
  [[nodiscard]] const IntMatrix& basis() const { return basis_; }
  /// Integer kernel basis of the generator matrix (relations among generators).
  [[nodiscard]] const IntMatrix& relations() const { return relations_; }

  /// Coordinates of v in the echelon basis, if v lies in its rational span.
  [[nodiscard]] std::optional<std::vector<mpq_class>> coordinates(const IntVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Lattice: dimension mismatch");
    std::vector<mpq_class> coords(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
      mpq_class acc = v[pivots_[j]];
      for (std::size_t i = 0; i < j; ++i) acc -= coords[i] * basis_[i][pivots_[j]];
      coords[j] = acc / basis_[j][pivots_[j]];
      coords[j].canonicalize();
    }
    for (std::size_t col = 0; col < dim_; ++col) {
      mpq_class acc = 0;
      for (std::size_t j = 0; j < rank(); ++j) acc += coords[j] * basis_[j][col];
      if (acc != v[col]) return std::nullopt;
    }
    return coords;
  }

  [[nodiscard]] bool in_span(const IntVector& v) const { return coordinates(v).has_value(); }

  /// Smallest t >= 1 with t*v in the lattice, if v is in the rational span.
  [[nodiscard]] std::optional<BigInt> division_index(const IntVector& v) const {
    auto coords = coordinates(v);
    if (!coords) return std::nullopt;
    BigInt t = 1;
    for (const auto& c : *coords) t = lcm(t, BigInt(c.get_den()));
    return t;
  }

  /// Integer combination c of the original generators with c G = v, if v is in the lattice.
  [[nodiscard]] std::optional<IntVector> combination(const IntVector& v) const {
    auto coords = coordinates(v);
    if (!coords) return std::nullopt;
    IntVector c(num_generators_, 0);
    for (std::size_t j = 0; j < rank(); ++j) {
      if ((*coords)[j].get_den() != 1) return std::nullopt;
      axpy(c, transform_[j], (*coords)[j].get_num());
    }
    return c;
  }

 private:
  static void combine(IntVector& x, IntVector& y, const BigInt& s, const BigInt& t,
                      const BigInt& xp, const BigInt& yp) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      BigInt nx = s * x[k] + t * y[k];
      BigInt ny = xp * y[k] - yp * x[k];
      x[k] = std::move(nx);
      y[k] = std::move(ny);
    }
  }
  static void negate(IntVector& x) {
    for (auto& v : x) v = -v;
  }
  static void axpy(IntVector& y, const IntVector& x, const BigInt& a) {
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
  }

  std::size_t dim_ = 0;
  std::size_t num_generators_ = 0;
  std::vector<std::size_t> pivots_;
  IntMatrix basis_;
  IntMatrix transform_;
  IntMatrix relations_;
};

}  // namespace orbitlab
