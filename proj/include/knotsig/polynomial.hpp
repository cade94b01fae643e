#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace knotsig {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial, coefficients stored lowest degree first.
// The representation is kept trimmed, so the zero polynomial has no coefficients.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const R& a) { return Polynomial(std::vector<R>{a}); }
  static Polynomial monomial(const R& a, std::size_t k) {
    std::vector<R> c(k + 1, R(0));
    c[k] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& leading() const { return c_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = X(acc * x + X(*it));
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = R(c_[k] * static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const R& s, Polynomial p) {
    for (auto& x : p.c_) x *= s;
    p.trim();
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(R(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<R> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& p);

// Positive rational multiple of p with coprime integer coefficients.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);
Integer content(const IntPoly& p);

// Euclidean division over Q: a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Exact division over Z[x]; throws std::domain_error if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

RatPoly make_monic(const RatPoly& p);

// Sign (-1, 0, +1) of p at an exact rational point, evaluated over the integers.
int sign_at(const IntPoly& p, const Rational& x);

std::string to_string(const IntPoly& p, std::string_view var = "z");

}  // namespace knotsig
