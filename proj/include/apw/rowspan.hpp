#pragma once

#include <cstddef>
#include <vector>

#include "apw/rational.hpp"

namespace apw {

/// Incrementally built subspace of Q^n kept in reduced row echelon form.
/// The RREF basis of a subspace is unique, so two RowSpans describe the same
/// subspace iff they compare equal; this is what makes degreewise ideal
/// comparison exact and order-independent.
class RowSpan {
 public:
  explicit RowSpan(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the span; if a nonzero residual remains it is
  /// normalised and adjoined. Returns true when the dimension grew.
  bool insert(std::vector<Rational> v);

  bool contains(const std::vector<Rational>& v) const;

  /// Canonical representative of v modulo the span (pivot coords eliminated).
  std::vector<Rational> residual(std::vector<Rational> v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Rows sorted by pivot column; each pivot is 1 and is the only nonzero
  /// entry in its column.
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Non-pivot columns, ascending: coordinates for a complement.
  std::vector<std::size_t> complement() const;

  bool operator==(const RowSpan& other) const = default;

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

}  // namespace apw
