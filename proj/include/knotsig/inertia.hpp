#pragma once

#include <optional>
#include <vector>

#include "knotsig/laurent.hpp"
#include "knotsig/matrix.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  // Needed by the Matrix/Polynomial templates, which build scalars from ints.
  GaussianRational(int r) : re(r), im(0) {}

  GaussianRational conj() const { return {re, -im}; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussianMatrix = Matrix<GaussianRational>;

// Point omega = ((1 - u^2) + 2u i) / (1 + u^2) of the upper unit semicircle,
// u = tan(phi/2) > 0, together with the limit point omega = -1 (u = infinity).
class UnitCirclePoint {
 public:
  // Throws std::invalid_argument unless u > 0.
  static UnitCirclePoint from_tan_half(Rational u);
  static UnitCirclePoint minus_one() { return UnitCirclePoint(); }

  bool is_minus_one() const noexcept { return !u_.has_value(); }
  const std::optional<Rational>& tan_half() const noexcept { return u_; }
  GaussianRational omega() const;
  // z = omega + conj(omega) = 2 cos phi.
  Rational z() const;
  double phi() const;

  friend bool operator==(const UnitCirclePoint&, const UnitCirclePoint&) = default;

 private:
  UnitCirclePoint() = default;
  explicit UnitCirclePoint(Rational u) : u_(std::move(u)) {}

  std::optional<Rational> u_;
};

// B(omega) = (omega^{-1/2} - omega^{1/2}) A(omega) with A(t) = t^{1/2} V - t^{-1/2} V^T.
// Multiplying out, B(omega) = V - omega^{-1} V^T - omega V + V^T, and on the
// unit circle omega^{-1} = conj(omega), so
//     B(omega) = (1 - omega) V + (1 - conj(omega)) V^T,
// which is Hermitian with Gaussian-rational entries at every tan-half-angle point.
// At omega = -1 this is 2 (V + V^T).
GaussianMatrix b_matrix_at(const SeifertMatrix& v, const UnitCirclePoint& p);

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;

  int signature() const noexcept { return positives - negatives; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// det(x I - H); the coefficients of a Hermitian matrix's characteristic
// polynomial are real. Faddeev-LeVerrier over Q(i).
RatPoly characteristic_polynomial(const GaussianMatrix& h);

// Exact inertia of a Hermitian matrix. The characteristic polynomial is
// real-rooted, so Descartes' sign rule counts positive (resp. negative) roots
// exactly once the zero root has been stripped.
Inertia inertia(const GaussianMatrix& h);
Inertia inertia(const IntMatrix& symmetric);

// Determinant over Q(i) by Gaussian elimination (independent of the
// characteristic polynomial route).
GaussianRational determinant(const GaussianMatrix& h);

// Step function phi -> Sign B(e^{i phi}) on the upper semicircle.
struct SignatureProfile {
  // Unit roots sorted by increasing angle (decreasing z).
  std::vector<UnitRootWitness> jumps;
  // plateaus[k] is the signature on the open arc between jumps[k-1] and jumps[k];
  // plateaus.front() is the limit phi -> 0+, plateaus.back() the arc through phi = pi.
  std::vector<int> plateaus;
  // The exact rational sample used for each plateau.
  std::vector<UnitCirclePoint> samples;
  int value_at_minus_one = 0;
  // Angles bound alpha = phi/2 rather than phi (reporting only).
  bool half_angles = false;

  friend bool operator==(const SignatureProfile&, const SignatureProfile&) = default;
};

// Witnesses must come from isolate_unit_roots(to_z_poly(alexander_poly(v))).
// Throws Error{SampleOnRoot} if a sample stays singular after bounded
// refinement, and Error{InternalInconsistency} if the first plateau is not 0 or
// the last plateau disagrees with the value at omega = -1.
SignatureProfile signature_profile(const SeifertMatrix& v, std::vector<UnitRootWitness> witnesses);

struct JumpReport {
  UnitRootWitness root;
  int left_value = 0;
  int right_value = 0;
  int jump = 0;
  bool odd_multiplicity = false;
  // A simple root of Delta has exactly one eigenvalue branch of B crossing
  // zero, and it crosses transversely; nothing is claimed otherwise.
  bool transversal_simple = false;

  friend bool operator==(const JumpReport&, const JumpReport&) = default;
};

std::vector<JumpReport> jump_reports(const SignatureProfile& profile);

// Checks, at every plateau sample, that
//   det B(omega) = (z - 2)^g Delta(omega) = (z - 2)^g P(z)
// exactly, that its sign is (-1)^{(2g - sigma)/2}, and that det B changes sign
// across a root exactly when the root has odd multiplicity.
bool det_sign_crosscheck(const SeifertMatrix& v, const SignatureProfile& profile);

// Same step data, angle bounds halved: the jump at omega = e^{i phi} is
// reported at t = e^{i alpha} with alpha = phi/2, since the signature is read
// as a function of t with omega = t^2.
SignatureProfile to_paper_parametrization(SignatureProfile profile);

// Chooses a rational u > 0 with lo < u^2 < hi, near the middle of the range;
// hi empty means unbounded.
Rational rational_between_squares(const Rational& lo, const std::optional<Rational>& hi);

}  // namespace knotsig
