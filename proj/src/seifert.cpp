#include "knotsig/seifert.hpp"

#include "knotsig/error.hpp"

namespace knotsig {

SeifertMatrix SeifertMatrix::validate(const IntMatrix& entries, std::optional<std::string> name) {
  if (entries.rows() != entries.cols()) {
    throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(entries.rows()) + "x" +
                                          std::to_string(entries.cols()));
  }
  if (entries.rows() % 2 != 0) {
    throw Error(ErrorCode::OddSize, "size " + std::to_string(entries.rows()) + " is odd");
  }
  const Integer d = determinant(entries - entries.transpose());
  if (d != 1) {
    throw Error(ErrorCode::NonSymplectic, "det(V - V^T) = " + d.get_str() + ", expected 1");
  }
  return SeifertMatrix(entries, std::move(name));
}

SeifertMatrix SeifertMatrix::validate(const RawMatrix& raw, std::optional<std::string> name) {
  const std::size_t n = raw.rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.rows[i].size() != n) {
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(raw.rows[i].size()) +
                                            " entries, expected " + std::to_string(n));
    }
  }
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = raw.rows[i][j];
  return validate(m, std::move(name));
}

std::size_t genus(const SeifertMatrix& v) { return v.genus(); }

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  IntMatrix r(n + m, n + m, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a.entries()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r(n + i, n + j) = b.entries()(i, j);
  return SeifertMatrix::validate(r);
}

SeifertMatrix mirror(const SeifertMatrix& v) {
  return SeifertMatrix::validate(-v.entries().transpose(), v.name());
}

IntMatrix symmetrized_form(const SeifertMatrix& v) {
  return v.entries() + v.entries().transpose();
}

SeifertMatrix congruence(const SeifertMatrix& v, const IntMatrix& u) {
  return SeifertMatrix::validate(u.transpose() * v.entries() * u, v.name());
}

}  // namespace knotsig
