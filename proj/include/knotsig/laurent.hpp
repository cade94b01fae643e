#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/polynomial.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

// Integer Laurent polynomial sum_k c_k t^k, k >= min_exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_exponent, IntPoly body);

  int min_exponent() const noexcept { return min_exp_; }
  int max_exponent() const noexcept { return min_exp_ + body_.degree(); }
  bool is_zero() const noexcept { return body_.is_zero(); }
  Integer coefficient(int k) const;

  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int min_exp_ = 0;
  IntPoly body_;
};

// Reciprocal Laurent polynomial: c_k = c_{-k}. This is the home of the
// Alexander polynomial, normalized so that Delta(1) = 1.
class SymmetricLaurentPoly {
 public:
  SymmetricLaurentPoly() = default;
  // Throws Error{NotReciprocal}.
  explicit SymmetricLaurentPoly(const LaurentPoly& p);
  // From the coefficients c_0, c_1, ..., c_d of t^0, t^{+-1}, ..., t^{+-d}.
  static SymmetricLaurentPoly from_half(std::vector<Integer> half);

  // Largest d with c_d != 0 (0 for constants and for the zero polynomial).
  int half_degree() const noexcept;
  Integer coefficient(int k) const;
  // Coefficients of t^{-d}, ..., t^{d}.
  std::vector<Integer> coefficients() const;
  const std::vector<Integer>& half() const noexcept { return half_; }

  Integer value_at_one() const;
  Integer value_at_minus_one() const;
  LaurentPoly laurent() const;

  friend bool operator==(const SymmetricLaurentPoly&, const SymmetricLaurentPoly&) = default;

 private:
  std::vector<Integer> half_;
};

std::string to_string(const SymmetricLaurentPoly& p);

// Polynomial P in z = t + 1/t with Delta(t) = P(t + 1/t).
using ZPoly = IntPoly;

// Delta(t) = t^{-g} det(tV - V^T), computed by fraction-free elimination over
// Z[t] and sign-normalized so that Delta(1) = 1. This equals det(A(t)) for
// A(t) = t^{1/2} V - t^{-1/2} V^T without ever forming half-integer powers.
SymmetricLaurentPoly alexander_poly(const SeifertMatrix& v);

// Determinant of a square matrix over Z[t] (Bareiss).
IntPoly polynomial_determinant(std::vector<std::vector<IntPoly>> m);

// Rewrites Delta in the basis t^k + t^{-k} = T_k(z), T_{k+1} = z T_k - T_{k-1}.
// The result is verified by re-expansion.
ZPoly to_z_poly(const SymmetricLaurentPoly& delta);

// P(t + 1/t) as a Laurent polynomial in t.
LaurentPoly expand_z_poly(const ZPoly& p);

struct SquarefreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
  int multiplicity = 0;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

// Yun decomposition over Q; factors are returned in increasing multiplicity.
// Throws Error{ZeroPolynomial}.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& p);

// Sturm sequence of a square-free polynomial, each member rescaled by a
// positive rational to a primitive integer polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  int variations(const Rational& x) const;
  // Number of distinct real roots in (a, b); a < b and neither may be a root.
  int count_roots(const Rational& a, const Rational& b) const;
  const std::vector<IntPoly>& members() const noexcept { return seq_; }

 private:
  std::vector<IntPoly> seq_;
};

// Root z* of a square-free factor of P isolated in (lo, hi), -2 <= lo < hi <= 2,
// with unit-circle angle phi = arccos(z*/2) in (angle_lo, angle_hi).
struct UnitRootWitness {
  IntPoly factor;
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  Rational angle_lo;
  Rational angle_hi;

  bool simple() const noexcept { return multiplicity == 1; }
  friend bool operator==(const UnitRootWitness&, const UnitRootWitness&) = default;
};

constexpr unsigned kDefaultRefineBits = 32;

// Isolates every real root of P in (-2, 2), i.e. every unit-circle root
// t = e^{i phi} of Delta, z = 2 cos phi. Output sorted by increasing z with
// pairwise disjoint closed intervals of width <= 2^-refine_bits lying strictly
// inside (-2, 2). Throws Error{ZeroPolynomial | RootAtPlusMinusOne}.
std::vector<UnitRootWitness> isolate_unit_roots(const ZPoly& p,
                                                unsigned refine_bits = kDefaultRefineBits);

// Shrinks the witness interval to width <= 2^-bits (never widens it).
void refine_witness(UnitRootWitness& w, unsigned bits);

// Rational bounds on arccos(z/2) over [lo, hi], rounded outward on a dyadic grid.
std::pair<Rational, Rational> angle_bounds(const Rational& lo, const Rational& hi);

struct SimpleRootResult {
  bool holds = false;
  std::vector<UnitRootWitness> witnesses;
};

SimpleRootResult has_simple_unit_root(const std::vector<UnitRootWitness>& witnesses);

}  // namespace knotsig
