#include "knotsig/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace knotsig {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& x : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    c.push_back(q);
  }
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& x : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    Rational scaled = x * Rational(den);
    c.push_back(scaled.get_num());
  }
  return primitive_part(IntPoly(std::move(c)));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / lead;
    if (f == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  const Integer& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

int sign_at(const IntPoly& p, const Rational& x) {
  // Evaluate den^n * p(num/den), which has the sign of p(x) because den > 0.
  if (p.is_zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  const auto& c = p.coeffs();
  // Horner in homogeneous form: acc = sum c_k num^k den^(n-k).
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

std::string to_string(const IntPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& a = p.coeffs()[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

}  // namespace knotsig
