#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "formality/linalg/matrix.hpp"

namespace formality {

/// Univariate polynomial with integer coefficients, constant term first.
/// The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<int> coeffs) {
    for (int x : coeffs) c_.emplace_back(x);
    trim();
  }

  static IntPolynomial monomial(std::size_t degree, Integer coeff = 1) {
    std::vector<Integer> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
  }
  // t^m - 1
  static IntPolynomial x_pow_minus_one(std::size_t m) {
    std::vector<Integer> c(m + 1);
    c[0] = -1;
    c[m] = 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
  bool monic() const { return !c_.empty() && c_.back() == 1; }
  bool constant() const { return c_.size() <= 1; }

  Integer operator()(const Integer& t) const {
    Integer acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  template <class T>
  Matrix<T> evaluate(const Matrix<T>& m) const {
    require(m.square(), "polynomial evaluated at a non-square matrix");
    Matrix<T> acc(m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * m;
      for (std::size_t k = 0; k < m.rows(); ++k) acc(k, k) += T(c_[i]);
    }
    return acc;
  }

  IntPolynomial derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(d));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
  }

  // Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> c = c_;
    for (auto& x : c) x /= g;
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  IntPolynomial pow(std::size_t e) const {
    IntPolynomial out{1};
    for (std::size_t i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  std::string str(char var = 't') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Integer& a = c_[i];
      if (a == 0) continue;
      Integer mag = abs(a);
      if (first)
        os << (a < 0 ? "-" : "");
      else
        os << (a < 0 ? " - " : " + ");
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) {
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

/// Quotient and remainder of a by b, for b with leading coefficient +-1 or when
/// the division is known to be exact. Throws if a non-integral quotient arises.
inline std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b) {
  require(!b.is_zero(), "polynomial division by zero");
  std::vector<Integer> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {IntPolynomial{}, a};
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Integer& lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % lead != 0) throw InternalError("non-integral polynomial quotient");
    Integer k = top / lead;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= k * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(k);
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem))};
}

/// Primitive gcd over Z[t] (positive leading coefficient), via the primitive
/// pseudo-remainder sequence.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    std::vector<Integer> scaled = a.coeffs();
    Integer f = 1;
    for (long i = 0; i <= a.degree() - b.degree(); ++i) f *= b.leading();
    for (auto& x : scaled) x *= f;
    IntPolynomial r = divmod(IntPolynomial(std::move(scaled)), b).second.primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recurrence;
/// every division in it is exact over Z.
inline IntPolynomial char_poly(const IntegerMatrix& M) {
  require(M.square(), "characteristic polynomial of a non-square matrix");
  const std::size_t n = M.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntegerMatrix Mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix next = M * Mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    Mk = std::move(next);
    IntegerMatrix AM = M * Mk;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    if (tr % static_cast<long>(k) != 0) throw InternalError("Faddeev-LeVerrier: inexact division");
    c[n - k] = -tr / static_cast<long>(k);
  }
  return IntPolynomial(std::move(c));
}

inline std::size_t euler_phi(std::size_t m) {
  std::size_t result = m;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Largest m with phi(m) <= degree. Uses phi(m) >= sqrt(m/2).
inline std::size_t cyclotomic_index_bound(std::size_t degree) {
  std::size_t best = 1;
  for (std::size_t m = 1; m <= 2 * degree * degree + 2; ++m)
    if (euler_phi(m) <= degree) best = m;
  return best;
}

/// m-th cyclotomic polynomial.
inline IntPolynomial cyclotomic(std::size_t m) {
  require(m >= 1, "cyclotomic index must be positive");
  IntPolynomial p = IntPolynomial::x_pow_minus_one(m);
  for (std::size_t d = 1; d < m; ++d)
    if (m % d == 0) p = divmod(p, cyclotomic(d)).first;
  return p;
}

/// Kronecker criterion: a monic integer polynomial has all roots on the unit
/// circle iff it is a product of cyclotomic polynomials. Decided by stripping
/// gcd(f, t^m - 1) for every m with phi(m) <= deg f.
inline bool is_cyclotomic_product(IntPolynomial f) {
  require(!f.is_zero() && f.monic(), "cyclotomic test needs a monic polynomial");
  if (f.degree() == 0) return true;
  if (abs(f.coeff(0)) != 1) return false;
  const std::size_t bound = cyclotomic_index_bound(static_cast<std::size_t>(f.degree()));
  for (std::size_t m = 1; m <= bound && !f.constant(); ++m) {
    IntPolynomial xm = IntPolynomial::x_pow_minus_one(m);
    for (;;) {
      IntPolynomial g = poly_gcd(f, xm);
      if (g.degree() < 1) break;
      f = divmod(f, g).first;
    }
  }
  return f.constant();
}

struct PolyFactor {
  IntPolynomial poly;
  std::size_t multiplicity = 1;
  bool cyclotomic = false;
  std::size_t cyclotomic_index = 0;    // m when poly == Phi_m
  bool certified_irreducible = true;   // false for unanalysed high-degree residues
};

namespace detail {

inline std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> out;
  Integer a = abs(n);
  if (a == 0) return out;
  for (Integer d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  return out;
}

// Splits a monic square-free non-cyclotomic residue of small degree into
// irreducible factors: rational roots first, then quadratic pairs for quartics.
inline std::vector<IntPolynomial> split_small(IntPolynomial f, bool& certified) {
  std::vector<IntPolynomial> out;
  certified = true;
  bool found = true;
  while (found && f.degree() > 1) {
    found = false;
    for (const auto& d : divisors_of(f.coeff(0))) {
      for (int s : {1, -1}) {
        Integer root = d * s;
        if (f(root) != 0) continue;
        IntPolynomial lin{0, 1};
        lin = lin - IntPolynomial(std::vector<Integer>{root});
        out.push_back(lin);
        f = divmod(f, lin).first;
        found = true;
        break;
      }
      if (found) break;
    }
    if (f.coeff(0) == 0 && f.degree() >= 1) {
      out.push_back(IntPolynomial{0, 1});
      f = divmod(f, IntPolynomial{0, 1}).first;
      found = true;
    }
  }
  if (f.degree() == 4) {
    // (t^2 + a t + b)(t^2 + c t + d) with b d = f0, a + c = f3.
    const Integer f0 = f.coeff(0), f1 = f.coeff(1), f2 = f.coeff(2), f3 = f.coeff(3);
    for (const auto& bd : divisors_of(f0)) {
      for (int s : {1, -1}) {
        Integer b = bd * s, d = f0 / b;
        // a + c = f3, a d + b c = f1, b + d + a c = f2
        // a (d - b) = f1 - b f3
        std::vector<Integer> candidates;
        if (d != b) {
          Integer num = f1 - b * f3;
          if (num % (d - b) == 0) candidates.push_back(num / (d - b));
        } else {
          // a c = f2 - 2b, a + c = f3: a is a root of x^2 - f3 x + (f2 - 2b)
          Integer disc = f3 * f3 - 4 * (f2 - 2 * b);
          if (disc >= 0) {
            Integer r = boost::multiprecision::sqrt(disc);
            if (r * r == disc && (f3 + r) % 2 == 0) candidates.push_back((f3 + r) / 2);
          }
        }
        for (const auto& a : candidates) {
          IntPolynomial q1(std::vector<Integer>{b, a, 1});
          IntPolynomial q2(std::vector<Integer>{d, f3 - a, 1});
          if (q1 * q2 == f) {
            out.push_back(q1);
            out.push_back(q2);
            return out;
          }
        }
      }
    }
  }
  if (f.degree() > 4) certified = false;
  if (f.degree() >= 1) out.push_back(f);
  return out;
}

}  // namespace detail

/// Factorisation of a monic integer polynomial: square-free decomposition,
/// cyclotomic stripping, then rational-root / quadratic analysis of residues
/// up to degree four. Higher-degree non-cyclotomic residues are returned
/// whole with certified_irreducible = false.
inline std::vector<PolyFactor> factor_monic(const IntPolynomial& f) {
  require(!f.is_zero() && f.monic(), "factorisation needs a monic polynomial");
  std::vector<PolyFactor> out;
  // Yun's square-free decomposition.
  std::vector<std::pair<IntPolynomial, std::size_t>> squarefree;
  if (f.degree() >= 1) {
    IntPolynomial a = f;
    IntPolynomial b = a.derivative();
    IntPolynomial c = poly_gcd(a, b);
    IntPolynomial w = divmod(a, c).first.primitive_part();
    std::size_t i = 1;
    while (w.degree() >= 1) {
      IntPolynomial next_w = poly_gcd(w, c);
      IntPolynomial piece = divmod(w, next_w).first.primitive_part();
      if (piece.degree() >= 1) squarefree.push_back({piece, i});
      c = divmod(c, next_w).first.primitive_part();
      w = next_w;
      ++i;
    }
  }
  for (auto& [piece, mult] : squarefree) {
    IntPolynomial rest = piece;
    const std::size_t bound = cyclotomic_index_bound(static_cast<std::size_t>(piece.degree()));
    for (std::size_t m = 1; m <= bound && rest.degree() >= 1; ++m) {
      IntPolynomial phi = cyclotomic(m);
      if (phi.degree() > rest.degree()) continue;
      auto [q, r] = divmod(rest, phi);
      if (!r.is_zero()) continue;
      out.push_back({phi, mult, true, m, true});
      rest = q;
    }
    if (rest.degree() >= 1) {
      bool certified = true;
      for (auto& p : detail::split_small(rest, certified)) {
        if (p.leading() < 0) p = IntPolynomial{} - p;
        out.push_back({p, mult, false, 0, certified});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

}  // namespace formality
