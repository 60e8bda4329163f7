#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "apw/rational.hpp"

namespace apw {

/// Dense matrix over Q, row-major. Immutable use after construction is the
/// intended pattern; operations below are pure functions.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;  // m·x
  Matrix transposed() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q, computed by fraction-free (Bareiss) elimination on a
/// denominator-cleared copy. Pivot: largest magnitude in the current column,
/// ties to the lowest row index, columns scanned left to right.
std::size_t rank(const Matrix& m);

/// Basis of the right null space { v : m·v = 0 }. Size is cols - rank.
/// Canonical: the standard free-column basis for the Bareiss pivot set.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Some x with m·x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve(const Matrix& m,
                                           const std::vector<Rational>& b);

struct SubspaceDims {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_sum = 0;
  std::size_t dim_meet = 0;
};

/// Dimensions of row spans A, B, A+B and (by the dimension formula) A∩B.
/// Requires equal ambient dimension (cols).
SubspaceDims subspace_dim_sum(const Matrix& a, const Matrix& b);

}  // namespace apw
