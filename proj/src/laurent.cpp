#include "knotsig/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "knotsig/error.hpp"

namespace knotsig {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int min_exponent, IntPoly body) : min_exp_(min_exponent) {
  const auto& c = body.coeffs();
  std::size_t skip = 0;
  while (skip < c.size() && c[skip] == 0) ++skip;
  if (skip == c.size()) {
    min_exp_ = 0;
    return;
  }
  body_ = IntPoly(std::vector<Integer>(c.begin() + static_cast<long>(skip), c.end()));
  min_exp_ += static_cast<int>(skip);
}

Integer LaurentPoly::coefficient(int k) const {
  if (is_zero() || k < min_exp_) return 0;
  return body_.coeff(static_cast<std::size_t>(k - min_exp_));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  return LaurentPoly(min_exp_ + o.min_exp_, body_ * o.body_);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(min_exp_, o.min_exp_);
  const IntPoly a = IntPoly::monomial(Integer(1), static_cast<std::size_t>(min_exp_ - lo)) * body_;
  const IntPoly b =
      IntPoly::monomial(Integer(1), static_cast<std::size_t>(o.min_exp_ - lo)) * o.body_;
  return LaurentPoly(lo, a + b);
}

// ------------------------------------------------------- SymmetricLaurentPoly

SymmetricLaurentPoly::SymmetricLaurentPoly(const LaurentPoly& p) {
  if (p.is_zero()) return;
  const int d = std::max(-p.min_exponent(), p.max_exponent());
  for (int k = 1; k <= d; ++k) {
    if (p.coefficient(k) != p.coefficient(-k)) {
      throw Error(ErrorCode::NotReciprocal, "coefficient of t^" + std::to_string(k) +
                                                " differs from that of t^" + std::to_string(-k));
    }
  }
  half_.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) half_.push_back(p.coefficient(k));
}

SymmetricLaurentPoly SymmetricLaurentPoly::from_half(std::vector<Integer> half) {
  while (!half.empty() && half.back() == 0) half.pop_back();
  SymmetricLaurentPoly p;
  p.half_ = std::move(half);
  return p;
}

int SymmetricLaurentPoly::half_degree() const noexcept {
  return half_.empty() ? 0 : static_cast<int>(half_.size()) - 1;
}

Integer SymmetricLaurentPoly::coefficient(int k) const {
  const auto idx = static_cast<std::size_t>(k < 0 ? -k : k);
  return idx < half_.size() ? half_[idx] : Integer(0);
}

std::vector<Integer> SymmetricLaurentPoly::coefficients() const {
  std::vector<Integer> out;
  const int d = half_degree();
  if (half_.empty()) return {Integer(0)};
  for (int k = -d; k <= d; ++k) out.push_back(coefficient(k));
  return out;
}

Integer SymmetricLaurentPoly::value_at_one() const {
  Integer s = 0;
  for (int k = -half_degree(); k <= half_degree(); ++k) s += coefficient(k);
  return s;
}

Integer SymmetricLaurentPoly::value_at_minus_one() const {
  Integer s = 0;
  for (int k = -half_degree(); k <= half_degree(); ++k) {
    s += (k % 2 == 0) ? coefficient(k) : Integer(-coefficient(k));
  }
  return s;
}

LaurentPoly SymmetricLaurentPoly::laurent() const {
  if (half_.empty()) return {};
  const int d = half_degree();
  std::vector<Integer> body;
  for (int k = -d; k <= d; ++k) body.push_back(coefficient(k));
  return LaurentPoly(-d, IntPoly(std::move(body)));
}

std::string to_string(const SymmetricLaurentPoly& p) {
  if (p.half().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const int d = p.half_degree();
  for (int k = d; k >= -d; --k) {
    const Integer a = p.coefficient(k);
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k == 1) out << "t";
    if (k != 0 && k != 1) out << "t^" << k;
  }
  return out.str();
}

// ---------------------------------------------------------- Alexander polynomial

IntPoly polynomial_determinant(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(Integer(1));
  IntPoly prev = IntPoly::constant(Integer(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes this division exact.
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = IntPoly{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

SymmetricLaurentPoly alexander_poly(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  const auto& e = v.entries();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = IntPoly{Integer(-e(j, i)), e(i, j)};

  IntPoly det = polynomial_determinant(std::move(m));
  const Integer at_one = det.evaluate(Integer(1));
  if (at_one == -1) {
    det = -det;
  } else if (at_one != 1) {
    throw Error(ErrorCode::InternalNormalization,
                "Delta(1) = " + at_one.get_str() + " is not a unit; the matrix is not a Seifert matrix");
  }
  try {
    return SymmetricLaurentPoly(LaurentPoly(-static_cast<int>(v.genus()), det));
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalNormalization, std::string("det(tV - V^T) ") + e.what());
  }
}

ZPoly to_z_poly(const SymmetricLaurentPoly& delta) {
  const int d = delta.half_degree();
  // cheb[k] = t^k + t^{-k} written in z.
  std::vector<IntPoly> cheb;
  cheb.push_back(IntPoly{Integer(2)});
  cheb.push_back(IntPoly{Integer(0), Integer(1)});
  const IntPoly z{Integer(0), Integer(1)};
  for (int k = 2; k <= d; ++k) {
    cheb.push_back(z * cheb[static_cast<std::size_t>(k - 1)] - cheb[static_cast<std::size_t>(k - 2)]);
  }
  IntPoly p = IntPoly::constant(delta.coefficient(0));
  for (int k = 1; k <= d; ++k) p += delta.coefficient(k) * cheb[static_cast<std::size_t>(k)];

  if (!(expand_z_poly(p) == delta.laurent())) {
    throw Error(ErrorCode::InternalInconsistency, "P(t + 1/t) does not reproduce Delta");
  }
  return p;
}

LaurentPoly expand_z_poly(const ZPoly& p) {
  const LaurentPoly z_in_t(-1, IntPoly{Integer(1), Integer(0), Integer(1)});
  LaurentPoly acc;
  LaurentPoly power(0, IntPoly{Integer(1)});
  for (int k = 0; k <= p.degree(); ++k) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c != 0) acc = acc + LaurentPoly(0, IntPoly{c}) * power;
    power = power * z_in_t;
  }
  return acc;
}

// ------------------------------------------------------ Square-free decomposition

namespace {

IntPoly normalized_factor(const RatPoly& p) {
  IntPoly f = primitive_part(p);
  if (!f.is_zero() && f.leading() < 0) f = -f;
  return f;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot decompose the zero polynomial");
  std::vector<SquarefreeFactor> out;
  const RatPoly f = to_rational(p);
  const RatPoly df = f.derivative();
  const RatPoly a = gcd(f, df);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(df, a).first;
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const RatPoly ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    if (ai.degree() > 0) out.push_back({normalized_factor(ai), i});
  }

  IntPoly product = IntPoly::constant(Integer(1));
  for (const auto& sf : out) product = product * sf.factor.pow(static_cast<unsigned>(sf.multiplicity));
  IntPoly target = primitive_part(p);
  if (target.leading() < 0) target = -target;
  if (!(product == target)) {
    throw Error(ErrorCode::InternalInconsistency, "square-free factors do not reproduce the input");
  }
  return out;
}

// ----------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of zero");
  seq_.push_back(primitive_part(p));
  if (p.degree() == 0) return;
  seq_.push_back(primitive_part(p.derivative()));
  RatPoly a = to_rational(seq_[0]);
  RatPoly b = to_rational(seq_[1]);
  while (true) {
    RatPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    // primitive_part rescales by a positive factor, preserving the sign pattern.
    IntPoly next = primitive_part(-r);
    seq_.push_back(next);
    a = std::move(b);
    b = to_rational(next);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& s : seq_) {
    const int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

// ----------------------------------------------------------- Root isolation

namespace {

Rational width(const UnitRootWitness& w) { return w.hi - w.lo; }

Rational dyadic(unsigned bits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(Integer(1), den);
}

void isolate_in(const IntPoly& f, const SturmSequence& sturm, Rational lo, Rational hi, int count,
                int multiplicity, std::vector<UnitRootWitness>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({f, lo, hi, multiplicity, {}, {}});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sign_at(f, mid) != 0) {
    isolate_in(f, sturm, lo, mid, sturm.count_roots(lo, mid), multiplicity, out);
    isolate_in(f, sturm, mid, hi, sturm.count_roots(mid, hi), multiplicity, out);
    return;
  }
  // The midpoint is itself a (rational) root: cut out a small window around it.
  Rational delta = (hi - lo) / 4;
  while (true) {
    const Rational a = mid - delta;
    const Rational b = mid + delta;
    if (sign_at(f, a) != 0 && sign_at(f, b) != 0 && sturm.count_roots(a, b) == 1) {
      isolate_in(f, sturm, lo, a, sturm.count_roots(lo, a), multiplicity, out);
      out.push_back({f, a, b, multiplicity, {}, {}});
      isolate_in(f, sturm, b, hi, sturm.count_roots(b, hi), multiplicity, out);
      return;
    }
    delta /= 2;
  }
}

// One bisection step on an isolating interval of a simple root.
void bisect(UnitRootWitness& w) {
  const Rational mid = (w.lo + w.hi) / 2;
  const int s_mid = sign_at(w.factor, mid);
  if (s_mid == 0) {
    const Rational quarter = (w.hi - w.lo) / 4;
    w.lo = mid - quarter;
    w.hi = mid + quarter;
    return;
  }
  if (s_mid == sign_at(w.factor, w.lo)) {
    w.lo = mid;
  } else {
    w.hi = mid;
  }
}

}  // namespace

void refine_witness(UnitRootWitness& w, unsigned bits) {
  const Rational target = dyadic(bits);
  while (width(w) > target) bisect(w);
  std::tie(w.angle_lo, w.angle_hi) = angle_bounds(w.lo, w.hi);
}

std::pair<Rational, Rational> angle_bounds(const Rational& lo, const Rational& hi) {
  constexpr double kGrid = 281474976710656.0;  // 2^48
  const double upper_pi = std::nextafter(std::numbers::pi, 4.0);
  auto margin = [](double x) {
    const double s = 1.0 - x * x;
    if (s < 1e-8) return 1e-12 + 4e-8;
    return 1e-12 + 1e-15 / std::sqrt(s);
  };
  const double x_hi = std::clamp(hi.get_d() / 2.0, -1.0, 1.0);
  const double x_lo = std::clamp(lo.get_d() / 2.0, -1.0, 1.0);
  double a_lo = std::acos(x_hi) - margin(x_hi);
  double a_hi = std::acos(x_lo) + margin(x_lo);
  a_lo = std::max(0.0, std::floor(a_lo * kGrid) / kGrid);
  a_hi = std::min(upper_pi, std::ceil(a_hi * kGrid) / kGrid);
  return {Rational(a_lo), Rational(a_hi)};
}

std::vector<UnitRootWitness> isolate_unit_roots(const ZPoly& p, unsigned refine_bits) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "P is identically zero");
  const Rational two(2);
  const Rational minus_two(-2);
  if (sign_at(p, two) == 0) throw Error(ErrorCode::RootAtPlusMinusOne, "Delta(1) = 0");
  if (sign_at(p, minus_two) == 0) throw Error(ErrorCode::RootAtPlusMinusOne, "Delta(-1) = 0");

  std::vector<UnitRootWitness> out;
  for (const auto& sf : squarefree_decompose(p)) {
    const SturmSequence sturm(sf.factor);
    isolate_in(sf.factor, sturm, minus_two, two, sturm.count_roots(minus_two, two), sf.multiplicity,
               out);
  }
  for (auto& w : out) refine_witness(w, refine_bits);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  // Different factors never share a root, so overlapping neighbours separate
  // after finitely many bisections.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& w : out) {
      while (w.lo <= minus_two || w.hi >= two) {
        bisect(w);
        changed = true;
      }
    }
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].hi >= out[i + 1].lo) {
        bisect(out[i]);
        bisect(out[i + 1]);
        changed = true;
      }
    }
    if (changed) {
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    }
  }
  for (auto& w : out) std::tie(w.angle_lo, w.angle_hi) = angle_bounds(w.lo, w.hi);
  return out;
}

SimpleRootResult has_simple_unit_root(const std::vector<UnitRootWitness>& witnesses) {
  SimpleRootResult r;
  for (const auto& w : witnesses) {
    if (w.simple()) r.witnesses.push_back(w);
  }
  r.holds = !r.witnesses.empty();
  return r;
}

}  // namespace knotsig
