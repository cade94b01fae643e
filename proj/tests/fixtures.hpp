#pragma once

// Shared fixtures and floating-point oracles for the test suites. The oracles
// use Eigen in double precision and never call into the exact code paths they
// are compared against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "knotsig/seifert.hpp"

namespace knotsig::testing {

inline SeifertMatrix trefoil() { return SeifertMatrix::validate(IntMatrix{{-1, 1}, {0, -1}}, "trefoil"); }
inline SeifertMatrix figure_eight() { return SeifertMatrix::validate(IntMatrix{{1, 1}, {0, -1}}, "figure-8"); }
inline SeifertMatrix unknot() { return SeifertMatrix::validate(IntMatrix{}, "unknot"); }
inline SeifertMatrix torus_2_5() {
  return SeifertMatrix::validate(
      IntMatrix{{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}, "T(2,5)");
}
inline SeifertMatrix granny() { return block_sum(trefoil(), trefoil()); }
inline SeifertMatrix square_knot() { return block_sum(trefoil(), mirror(trefoil())); }

// Genus-one Seifert matrix [[a, b + 1], [b, c]]; V - V^T is the standard
// symplectic form for every choice of a, b, c.
inline SeifertMatrix genus_one(long a, long b, long c) {
  return SeifertMatrix::validate(IntMatrix{{a, b + 1}, {b, c}});
}

// Random unimodular matrix: product of elementary row additions and swaps.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n, Integer(1), Integer(0));
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int c = coin(rng);
    if (c == 0) {
      u.swap_rows(i, j);
    } else {
      const long k = c == 1 ? -1 : 1;
      for (std::size_t col = 0; col < n; ++col) u(i, col) += k * u(j, col);
    }
  }
  return u;
}

// Block sum of 1..max_blocks random genus-one blocks.
inline SeifertMatrix random_seed(std::mt19937& rng, int max_blocks = 3) {
  std::uniform_int_distribution<int> blocks(1, max_blocks);
  std::uniform_int_distribution<long> entry(-3, 3);
  SeifertMatrix v = unknot();
  const int nb = blocks(rng);
  for (int b = 0; b < nb; ++b) {
    const long a = entry(rng);
    const long off = entry(rng);
    const long c = entry(rng);
    v = block_sum(v, genus_one(a, off, c));
  }
  return v;
}

// ------------------------------------------------------------- oracles

inline Eigen::MatrixXcd b_matrix_double(const SeifertMatrix& v, double phi) {
  const auto n = static_cast<Eigen::Index>(v.size());
  const std::complex<double> w = std::polar(1.0, phi);
  Eigen::MatrixXcd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double vij = v.entries()(i, j).get_d();
      const double vji = v.entries()(j, i).get_d();
      b(i, j) = (1.0 - w) * vij + (1.0 - std::conj(w)) * vji;
    }
  return b;
}

struct FloatInertia {
  int positives = 0, negatives = 0, near_zero = 0;
  double min_abs = INFINITY;
  int signature() const { return positives - negatives; }
};

inline FloatInertia float_inertia(const Eigen::MatrixXcd& h, double tol = 1e-9) {
  FloatInertia r;
  if (h.rows() == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    r.min_abs = std::min(r.min_abs, std::abs(l));
    if (l > tol) ++r.positives;
    else if (l < -tol) ++r.negatives;
    else ++r.near_zero;
  }
  return r;
}

inline double eval_double(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Distinct real roots in (lo, hi): companion-matrix eigenvalues, polished by
// bisection where a sign change brackets them.
inline std::vector<double> float_real_roots(std::vector<double> c, double lo, double hi) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> out;
  if (n < 1) return out;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<double> cand;
  for (int i = 0; i < n; ++i) {
    const auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) < 1e-6 && ev.real() > lo && ev.real() < hi) cand.push_back(ev.real());
  }
  std::sort(cand.begin(), cand.end());
  for (double x : cand) {
    if (!out.empty() && std::abs(x - out.back()) < 1e-6) continue;
    double a = x - 1e-7, b = x + 1e-7;
    double fa = eval_double(c, a), fb = eval_double(c, b);
    if (fa * fb < 0) {
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = eval_double(c, m);
        if (fm == 0) { a = b = m; break; }
        if ((fm < 0) == (fa < 0)) { a = m; fa = fm; } else { b = m; }
      }
      x = 0.5 * (a + b);
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace knotsig::testing
