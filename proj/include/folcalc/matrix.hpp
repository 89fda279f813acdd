#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "folcalc/rational.hpp"

namespace folcalc {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix&) const = default;

  /// Principal submatrix on the given row/column indices.
  Matrix principal(std::span<const std::size_t> idx) const {
    Matrix out(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = (*this)(idx[a], idx[b]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

namespace linalg {

/// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1, computed by
/// fraction-free Bareiss elimination without row exchanges. Elimination stops
/// at the first vanishing minor; later entries are then absent.
std::vector<Integer> leading_principal_minors(IntMatrix a);

/// True iff every leading principal minor of -A is positive (Sylvester).
bool is_negative_definite(const IntMatrix& a);

Integer determinant(IntMatrix a);

/// Solves A x = b exactly. Pivot rows are taken as the first nonzero entry in
/// each column. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve(const IntMatrix& a, std::span<const Rational> b);

}  // namespace linalg
}  // namespace folcalc
