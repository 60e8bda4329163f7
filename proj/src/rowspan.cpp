#include "apw/rowspan.hpp"

#include <algorithm>

#include "apw/errors.hpp"

namespace apw {

namespace {

// v -= c * row, skipping zero entries of row from position `from`.
void axpy(std::vector<Rational>& v, const Rational& c,
          const std::vector<Rational>& row, std::size_t from) {
  for (std::size_t j = from; j < row.size(); ++j)
    if (sgn(row[j]) != 0) v[j] -= c * row[j];
}

}  // namespace

bool RowSpan::insert(std::vector<Rational> v) {
  if (v.size() != cols_) throw input_error("RowSpan: wrong vector length");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (sgn(c) != 0) axpy(v, Rational(c), rows_[k], pivots_[k]);
  }
  std::size_t piv = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn(v[j]) != 0) { piv = j; break; }
  if (piv == cols_) return false;
  if (v[piv] != 1) {
    const Rational inv = Rational(1) / v[piv];
    for (std::size_t j = piv; j < cols_; ++j)
      if (sgn(v[j]) != 0) v[j] *= inv;
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = rows_[k][piv];
    if (sgn(c) != 0) axpy(rows_[k], Rational(c), v, piv);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool RowSpan::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> r = residual(v);
  for (const Rational& c : r)
    if (sgn(c) != 0) return false;
  return true;
}

std::vector<Rational> RowSpan::residual(std::vector<Rational> v) const {
  if (v.size() != cols_) throw input_error("RowSpan: wrong vector length");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (sgn(c) != 0) axpy(v, Rational(c), rows_[k], pivots_[k]);
  }
  return v;
}

std::vector<std::size_t> RowSpan::complement() const {
  std::vector<std::size_t> out;
  out.reserve(cols_ - pivots_.size());
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

}  // namespace apw
