#include "knotsig/inertia.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "knotsig/error.hpp"

namespace knotsig {

namespace {

constexpr int kSampleRetries = 3;
constexpr unsigned kRetryBits = 16;

int sign_variations(const std::vector<Rational>& c) {
  int count = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Integer isqrt_floor(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
  return r;
}

// (2 - z)/(2 + z) = tan^2(phi/2) for z = 2 cos phi.
Rational tan_half_squared(const Rational& z) { return (Rational(2) - z) / (Rational(2) + z); }

}  // namespace

// ----------------------------------------------------------- UnitCirclePoint

UnitCirclePoint UnitCirclePoint::from_tan_half(Rational u) {
  if (u <= 0) throw std::invalid_argument("tan-half-angle parameter must be positive");
  return UnitCirclePoint(std::move(u));
}

GaussianRational UnitCirclePoint::omega() const {
  if (!u_) return {Rational(-1), Rational(0)};
  const Rational& u = *u_;
  const Rational den = 1 + u * u;
  return {(1 - u * u) / den, 2 * u / den};
}

Rational UnitCirclePoint::z() const { return 2 * omega().re; }

double UnitCirclePoint::phi() const {
  if (!u_) return std::acos(-1.0);
  return 2.0 * std::atan(u_->get_d());
}

// ----------------------------------------------------------- B matrix

GaussianMatrix b_matrix_at(const SeifertMatrix& v, const UnitCirclePoint& p) {
  const std::size_t n = v.size();
  const GaussianRational w = p.omega();
  const GaussianRational a = GaussianRational(1) - w;
  const GaussianRational b = a.conj();
  const auto& e = v.entries();
  GaussianMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = a * GaussianRational(Rational(e(i, j))) + b * GaussianRational(Rational(e(j, i)));
    }
  return h;
}

// ----------------------------------------------------------- inertia

RatPoly characteristic_polynomial(const GaussianMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<GaussianRational> c(n + 1);
  c[n] = GaussianRational(1);
  GaussianMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    GaussianMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        GaussianRational acc;
        for (std::size_t l = 0; l < n; ++l) acc += h(i, l) * m(l, j);
        if (i == j) acc += c[n - k + 1];
        next(i, j) = acc;
      }
    m = std::move(next);
    GaussianRational trace;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += h(i, l) * m(l, i);
    const Rational scale(-1, static_cast<long>(k));
    c[n - k] = GaussianRational(trace.re * scale, trace.im * scale);
  }
  std::vector<Rational> real;
  real.reserve(n + 1);
  for (const auto& x : c) {
    if (!x.is_real()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "characteristic polynomial has a non-real coefficient; matrix is not Hermitian");
    }
    real.push_back(x.re);
  }
  return RatPoly(std::move(real));
}

Inertia inertia(const GaussianMatrix& h) {
  const RatPoly chi = characteristic_polynomial(h);
  const auto& c = chi.coeffs();
  Inertia r;
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  r.zeros = static_cast<int>(z);
  std::vector<Rational> stripped(c.begin() + static_cast<long>(z), c.end());
  r.positives = sign_variations(stripped);
  for (std::size_t k = 0; k < stripped.size(); ++k) {
    // p(-x): flip odd powers (relative to the original exponent k + z).
    if ((k + z) % 2 == 1) stripped[k] = -stripped[k];
  }
  r.negatives = sign_variations(stripped);
  return r;
}

Inertia inertia(const IntMatrix& symmetric) {
  GaussianMatrix h(symmetric.rows(), symmetric.cols());
  for (std::size_t i = 0; i < symmetric.rows(); ++i)
    for (std::size_t j = 0; j < symmetric.cols(); ++j) h(i, j) = GaussianRational(Rational(symmetric(i, j)));
  return inertia(h);
}

GaussianRational determinant(const GaussianMatrix& input) {
  const std::size_t n = input.rows();
  GaussianMatrix m = input;
  GaussianRational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == GaussianRational(0)) ++p;
    if (p == n) return GaussianRational(0);
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det = det * m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == GaussianRational(0)) continue;
      const GaussianRational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

// ----------------------------------------------------------- sampling

Rational rational_between_squares(const Rational& lo, const std::optional<Rational>& hi) {
  if (!hi) {
    // (isqrt(floor(4 lo)) + 1)^2 > 4 lo >= lo.
    return Rational(isqrt_floor(4 * lo) + 1);
  }
  if (!(lo < *hi)) throw std::invalid_argument("empty square range");
  const Rational target = (lo + *hi) / 2;
  for (unsigned k = 0;; ++k) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    const Rational scale_sq(scale * scale);
    const Integer m = isqrt_floor(target * scale_sq);
    for (const Integer& cand : {m, Integer(m + 1)}) {
      if (cand <= 0) continue;
      const Rational u(cand, scale);
      const Rational u2 = u * u;
      if (lo < u2 && u2 < *hi) return u;
    }
  }
}

namespace {

// Sample for the k-th arc (0 <= k <= jumps.size()), jumps sorted by increasing phi.
UnitCirclePoint arc_sample(const std::vector<UnitRootWitness>& jumps, std::size_t k) {
  // In z the arc is (z_low, z_high); u^2 = (2 - z)/(2 + z) decreases in z.
  const Rational s_lo = k == 0 ? Rational(0) : tan_half_squared(jumps[k - 1].lo);
  std::optional<Rational> s_hi;
  if (k < jumps.size()) s_hi = tan_half_squared(jumps[k].hi);
  return UnitCirclePoint::from_tan_half(rational_between_squares(s_lo, s_hi));
}

}  // namespace

SignatureProfile signature_profile(const SeifertMatrix& v, std::vector<UnitRootWitness> witnesses) {
  std::sort(witnesses.begin(), witnesses.end(), [](const auto& a, const auto& b) { return a.lo > b.lo; });
  for (std::size_t i = 0; i + 1 < witnesses.size(); ++i) {
    if (!(witnesses[i + 1].hi < witnesses[i].lo)) {
      throw std::invalid_argument("isolating intervals must be pairwise disjoint");
    }
  }

  for (int attempt = 0;; ++attempt) {
    SignatureProfile prof;
    prof.jumps = witnesses;
    bool singular = false;
    for (std::size_t k = 0; k <= witnesses.size(); ++k) {
      const UnitCirclePoint p = arc_sample(witnesses, k);
      const Inertia in = inertia(b_matrix_at(v, p));
      if (in.zeros > 0) {
        singular = true;
        break;
      }
      prof.plateaus.push_back(in.signature());
      prof.samples.push_back(p);
    }
    if (singular) {
      if (attempt + 1 >= kSampleRetries) {
        throw Error(ErrorCode::SampleOnRoot, "B is singular at a sample between isolated roots");
      }
      for (auto& w : witnesses) {
        const Rational wd = w.hi - w.lo;
        unsigned bits = 0;
        for (Rational x = wd; x < 1; x *= 2) ++bits;
        refine_witness(w, bits + kRetryBits);
      }
      continue;
    }

    const Inertia at_minus_one = inertia(symmetrized_form(v));
    if (at_minus_one.zeros > 0) {
      throw Error(ErrorCode::InternalInconsistency, "V + V^T is singular although Delta(-1) is odd");
    }
    prof.value_at_minus_one = at_minus_one.signature();
    if (prof.plateaus.front() != 0) {
      throw Error(ErrorCode::InternalInconsistency,
                  "signature near omega = 1 is " + std::to_string(prof.plateaus.front()) + ", expected 0");
    }
    if (prof.plateaus.back() != prof.value_at_minus_one) {
      throw Error(ErrorCode::InternalInconsistency,
                  "last plateau disagrees with the signature of V + V^T");
    }
    return prof;
  }
}

std::vector<JumpReport> jump_reports(const SignatureProfile& profile) {
  std::vector<JumpReport> out;
  for (std::size_t k = 0; k < profile.jumps.size(); ++k) {
    JumpReport r;
    r.root = profile.jumps[k];
    r.left_value = profile.plateaus[k];
    r.right_value = profile.plateaus[k + 1];
    r.jump = r.right_value - r.left_value;
    r.odd_multiplicity = r.root.multiplicity % 2 == 1;
    r.transversal_simple = r.root.multiplicity == 1;
    out.push_back(std::move(r));
  }
  return out;
}

bool det_sign_crosscheck(const SeifertMatrix& v, const SignatureProfile& profile) {
  const int g = static_cast<int>(v.genus());
  const ZPoly p = to_z_poly(alexander_poly(v));
  if (profile.samples.size() != profile.plateaus.size()) return false;

  std::vector<int> det_signs;
  for (std::size_t k = 0; k < profile.samples.size(); ++k) {
    const UnitCirclePoint& s = profile.samples[k];
    const GaussianRational d = determinant(b_matrix_at(v, s));
    if (!d.is_real() || d.re == 0) return false;

    const Rational z = s.z();
    Rational factor = 1;
    for (int i = 0; i < g; ++i) factor *= z - 2;
    if (d.re != factor * to_rational(p).evaluate(z)) return false;

    const int sigma = profile.plateaus[k];
    if ((2 * g - sigma) % 2 != 0) return false;
    const int negatives = (2 * g - sigma) / 2;
    const int predicted = negatives % 2 == 0 ? 1 : -1;
    if (sgn(d.re) != predicted) return false;
    det_signs.push_back(predicted);
  }
  for (std::size_t k = 0; k < profile.jumps.size(); ++k) {
    const bool flips = det_signs[k] != det_signs[k + 1];
    const bool odd = profile.jumps[k].multiplicity % 2 == 1;
    if (flips != odd) return false;
  }
  return true;
}

SignatureProfile to_paper_parametrization(SignatureProfile profile) {
  if (profile.half_angles) return profile;
  for (auto& w : profile.jumps) {
    w.angle_lo /= 2;
    w.angle_hi /= 2;
  }
  profile.half_angles = true;
  return profile;
}

}  // namespace knotsig
