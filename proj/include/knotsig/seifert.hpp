#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/matrix.hpp"

namespace knotsig {

// Square integer matrix read from input, before any validation.
struct RawMatrix {
  std::vector<std::vector<Integer>> rows;
};

// Linking matrix of a Seifert surface: V_ij = lk(x_i, x_j^+) for a basis of
// H_1(F). Invariant: even size 2g and det(V - V^T) = 1. Immutable.
class SeifertMatrix {
 public:
  // Throws Error{NonSquare | OddSize | NonSymplectic}.
  static SeifertMatrix validate(const IntMatrix& entries, std::optional<std::string> name = {});
  static SeifertMatrix validate(const RawMatrix& entries, std::optional<std::string> name = {});

  const IntMatrix& entries() const noexcept { return v_; }
  const std::optional<std::string>& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return v_.rows(); }
  std::size_t genus() const noexcept { return v_.rows() / 2; }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

 private:
  explicit SeifertMatrix(IntMatrix v, std::optional<std::string> name)
      : v_(std::move(v)), name_(std::move(name)) {}

  IntMatrix v_;
  std::optional<std::string> name_;
};

// Hypotheses on the knot exterior M that a Seifert matrix cannot decide.
struct KnotMetadata {
  bool assume_irreducible = true;
  bool assume_homology_sphere = true;
  bool assume_m0_prime = false;

  friend bool operator==(const KnotMetadata&, const KnotMetadata&) = default;
};

std::size_t genus(const SeifertMatrix& v);

// Block-diagonal sum (connected sum of the underlying knots).
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// -V^T.
SeifertMatrix mirror(const SeifertMatrix& v);

// V + V^T, which equals B(-1)/2.
IntMatrix symmetrized_form(const SeifertMatrix& v);

// U^T V U. U must be unimodular (det = +-1) for the result to stay a Seifert
// matrix of the same knot; that is re-checked by validation.
SeifertMatrix congruence(const SeifertMatrix& v, const IntMatrix& u);

}  // namespace knotsig
