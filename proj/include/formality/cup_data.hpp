#pragma once

#include <vector>

#include "formality/linalg/rank.hpp"

namespace formality {

/// The degree-one cup product mu: H^1 wedge H^1 -> H^2 as an exact tensor.
/// mu(e_i ^ e_j) for i < j is stored at pair_index(i, j), in lexicographic
/// pair order (0,1), (0,2), ..., (1,2), ...
class CupData {
 public:
  CupData() = default;
  CupData(std::size_t b1, std::size_t b2) : b1_(b1), b2_(b2), mu_(pair_count(b1), RationalVector(b2)) {}

  static std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

  std::size_t b1() const { return b1_; }
  std::size_t b2() const { return b2_; }
  std::size_t pairs() const { return mu_.size(); }

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    require(i < j && j < b1_, "cup pair index out of range");
    // pairs before row i: sum_{r<i} (b1 - 1 - r)
    return i * (2 * b1_ - i - 1) / 2 + (j - i - 1);
  }

  std::pair<std::size_t, std::size_t> pair_at(std::size_t index) const {
    for (std::size_t i = 0; i < b1_; ++i)
      for (std::size_t j = i + 1; j < b1_; ++j)
        if (pair_index(i, j) == index) return {i, j};
    throw InputError("cup pair index out of range");
  }

  const RationalVector& mu(std::size_t index) const { return mu_[index]; }

  void set(std::size_t i, std::size_t j, RationalVector value) {
    require(value.size() == b2_, "cup value has the wrong length");
    if (i == j) {
      require(is_zero_vector(value), "cup square of a degree-one class must vanish");
      return;
    }
    if (i > j) {
      std::swap(i, j);
      for (auto& x : value) x = -x;
    }
    mu_[pair_index(i, j)] = std::move(value);
  }

  /// mu(e_i ^ e_j) for any i, j (antisymmetric, zero on the diagonal).
  RationalVector value(std::size_t i, std::size_t j) const {
    require(i < b1_ && j < b1_, "cup index out of range");
    if (i == j) return RationalVector(b2_);
    if (i < j) return mu_[pair_index(i, j)];
    RationalVector v = mu_[pair_index(j, i)];
    for (auto& x : v) x = -x;
    return v;
  }

  /// mu(x ^ y) for arbitrary vectors x, y in H^1.
  RationalVector evaluate(std::span<const Rational> x, std::span<const Rational> y) const {
    require(x.size() == b1_ && y.size() == b1_, "cup argument has the wrong length");
    RationalVector out(b2_);
    for (std::size_t i = 0; i < b1_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < b1_; ++j) {
        if (i == j || y[j] == 0) continue;
        const Rational k = x[i] * y[j];
        const RationalVector& m = mu_[pair_index(std::min(i, j), std::max(i, j))];
        const bool flip = i > j;
        for (std::size_t r = 0; r < b2_; ++r)
          if (m[r] != 0) out[r] += flip ? Rational(-k * m[r]) : Rational(k * m[r]);
      }
    }
    return out;
  }

  /// Matrix of lambda_x = mu(x ^ .): H^1 -> H^2, shape b2 x b1.
  RationalMatrix lambda(std::span<const Rational> x) const {
    require(x.size() == b1_, "resonance point has the wrong length");
    RationalMatrix m(b2_, b1_);
    RationalVector ej(b1_);
    for (std::size_t j = 0; j < b1_; ++j) {
      ej[j] = 1;
      RationalVector col = evaluate(x, ej);
      for (std::size_t r = 0; r < b2_; ++r) m(r, j) = col[r];
      ej[j] = 0;
    }
    return m;
  }

  /// The cup tensor as a b2 x C(b1,2) matrix; its transpose's row space is
  /// the image of the comultiplication H_2 -> H_1 wedge H_1.
  RationalMatrix tensor_matrix() const {
    RationalMatrix m(b2_, mu_.size());
    for (std::size_t p = 0; p < mu_.size(); ++p)
      for (std::size_t r = 0; r < b2_; ++r) m(r, p) = mu_[p][r];
    return m;
  }

  bool is_zero() const {
    for (const auto& v : mu_)
      if (!is_zero_vector(v)) return false;
    return true;
  }

  /// Cup data in the basis e'_k = sum_i P(i, k) e_i of H^1.
  CupData change_basis(const RationalMatrix& P) const {
    require(P.rows() == b1_ && P.cols() == b1_, "change of basis has the wrong shape");
    CupData out(b1_, b2_);
    for (std::size_t k = 0; k < b1_; ++k)
      for (std::size_t l = k + 1; l < b1_; ++l) {
        RationalVector ek(b1_), el(b1_);
        for (std::size_t i = 0; i < b1_; ++i) {
          ek[i] = P(i, k);
          el[i] = P(i, l);
        }
        out.set(k, l, evaluate(ek, el));
      }
    return out;
  }

  friend bool operator==(const CupData&, const CupData&) = default;

  // Families used throughout the tests and the CLI.

  /// Free group F_n (or a wedge of n circles): all cup products vanish.
  static CupData zero(std::size_t n) { return CupData(n, 0); }

  /// Torus T^n in degrees one and two: H^2 = wedge^2 H^1.
  static CupData torus(std::size_t n) {
    CupData c(n, pair_count(n));
    for (std::size_t p = 0; p < c.pairs(); ++p) c.mu_[p][p] = 1;
    return c;
  }

  /// Closed orientable surface of genus g, basis x_1, y_1, ..., x_g, y_g with
  /// x_i y_i = omega.
  static CupData surface(std::size_t g) {
    CupData c(2 * g, g > 0 ? 1 : 0);
    for (std::size_t i = 0; i < g; ++i) c.set(2 * i, 2 * i + 1, RationalVector{Rational(1)});
    return c;
  }

  /// Cup data of a product space: H^1 = H^1(X) + H^1(Y), H^2 keeps only the
  /// wedge-type summands H^2(X) + H^2(Y) + H^1(X) (x) H^1(Y).
  static CupData product(const CupData& x, const CupData& y) {
    const std::size_t n = x.b1_ + y.b1_;
    const std::size_t b2 = x.b2_ + y.b2_ + x.b1_ * y.b1_;
    CupData c(n, b2);
    for (std::size_t i = 0; i < x.b1_; ++i)
      for (std::size_t j = i + 1; j < x.b1_; ++j) {
        RationalVector v(b2);
        for (std::size_t r = 0; r < x.b2_; ++r) v[r] = x.value(i, j)[r];
        c.set(i, j, v);
      }
    for (std::size_t i = 0; i < y.b1_; ++i)
      for (std::size_t j = i + 1; j < y.b1_; ++j) {
        RationalVector v(b2);
        for (std::size_t r = 0; r < y.b2_; ++r) v[x.b2_ + r] = y.value(i, j)[r];
        c.set(x.b1_ + i, x.b1_ + j, v);
      }
    for (std::size_t i = 0; i < x.b1_; ++i)
      for (std::size_t j = 0; j < y.b1_; ++j) {
        RationalVector v(b2);
        v[x.b2_ + y.b2_ + i * y.b1_ + j] = 1;
        c.set(i, x.b1_ + j, v);
      }
    return c;
  }

  /// Block sum: mu = mu_X + mu_Y with no mixed products (a wedge X v Y).
  static CupData wedge(const CupData& x, const CupData& y) {
    CupData c(x.b1_ + y.b1_, x.b2_ + y.b2_);
    for (std::size_t i = 0; i < x.b1_; ++i)
      for (std::size_t j = i + 1; j < x.b1_; ++j) {
        RationalVector v(c.b2_);
        for (std::size_t r = 0; r < x.b2_; ++r) v[r] = x.value(i, j)[r];
        c.set(i, j, v);
      }
    for (std::size_t i = 0; i < y.b1_; ++i)
      for (std::size_t j = i + 1; j < y.b1_; ++j) {
        RationalVector v(c.b2_);
        for (std::size_t r = 0; r < y.b2_; ++r) v[x.b2_ + r] = y.value(i, j)[r];
        c.set(x.b1_ + i, x.b1_ + j, v);
      }
    return c;
  }

 private:
  std::size_t b1_ = 0;
  std::size_t b2_ = 0;
  std::vector<RationalVector> mu_;
};

}  // namespace formality
