#include "apw/matrix.hpp"

#include <utility>

#include "apw/errors.hpp"

namespace apw {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw input_error("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  std::vector<Rational> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw input_error("matrix-vector dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // full width (may include rhs)
  std::vector<std::size_t> pivot_cols;     // strictly increasing
  std::size_t rank() const { return pivot_cols.size(); }
};

// Rows scaled to integers; scaling does not change rank, kernel or solvability.
std::vector<std::vector<Integer>> integerize(const Matrix& m,
                                             const std::vector<Rational>* rhs) {
  std::vector<std::vector<Integer>> out(m.rows());
  const std::size_t width = m.cols() + (rhs ? 1 : 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row = m.row(i);
    if (rhs) row.push_back((*rhs)[i]);
    Integer l = denominator_lcm(row);
    out[i].resize(width);
    for (std::size_t j = 0; j < width; ++j) {
      Rational scaled = row[j] * Rational(l);
      out[i][j] = scaled.get_num();  // exact: l cleared every denominator
    }
  }
  return out;
}

// One-step fraction-free elimination (Bareiss). Pivots are chosen per column,
// largest magnitude first, ties to the lowest row index; only the first
// `pivot_limit` columns are eligible as pivots but full rows are updated so
// an augmented column stays consistent.
Echelon bareiss(std::vector<std::vector<Integer>> m, std::size_t pivot_limit) {
  Echelon e;
  const std::size_t nrows = m.size();
  const std::size_t width = nrows ? m[0].size() : 0;
  Integer prev = 1;
  std::size_t done = 0;
  for (std::size_t col = 0; col < pivot_limit && done < nrows; ++col) {
    std::size_t best = nrows;
    for (std::size_t i = done; i < nrows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      if (best == nrows ||
          mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) > 0)
        best = i;
    }
    if (best == nrows) continue;
    std::swap(m[done], m[best]);
    const Integer piv = m[done][col];
    for (std::size_t i = done + 1; i < nrows; ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col + 1; j < width; ++j) {
        Integer num = piv * m[i][j] - factor * m[done][j];
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        check_internal(sgn(r) == 0, "Bareiss division not exact");
        m[i][j] = q;
      }
      m[i][col] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(col);
    ++done;
  }
  e.rows = std::move(m);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(integerize(m, nullptr), m.cols()).rank();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<std::vector<Rational>> basis;
  if (n == 0) return basis;
  Echelon e = (m.rows() == 0) ? Echelon{} : bareiss(integerize(m, nullptr), n);
  const std::size_t r = e.rank();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t k = r; k-- > 0;) {
      const std::size_t p = e.pivot_cols[k];
      Rational s = 0;
      for (std::size_t j = p + 1; j < n; ++j)
        if (sgn(e.rows[k][j]) != 0 && x[j] != 0)
          s += Rational(e.rows[k][j]) * x[j];
      x[p] = -s / Rational(e.rows[k][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m,
                                           const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw input_error("solve: rhs length != rows");
  const std::size_t n = m.cols();
  if (m.rows() == 0) return std::vector<Rational>(n, Rational(0));
  Echelon e = bareiss(integerize(m, &b), n);
  const std::size_t r = e.rank();
  for (std::size_t i = r; i < e.rows.size(); ++i)
    if (sgn(e.rows[i][n]) != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t p = e.pivot_cols[k];
    Rational s(e.rows[k][n]);
    for (std::size_t j = p + 1; j < n; ++j)
      if (sgn(e.rows[k][j]) != 0 && x[j] != 0)
        s -= Rational(e.rows[k][j]) * x[j];
    x[p] = s / Rational(e.rows[k][p]);
  }
  return x;
}

SubspaceDims subspace_dim_sum(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw input_error("subspace_dim_sum: ambient dimension mismatch");
  SubspaceDims d;
  d.dim_a = rank(a);
  d.dim_b = rank(b);
  const std::size_t cols = a.rows() ? a.cols() : b.cols();
  Matrix stacked(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) stacked.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
  d.dim_sum = rank(stacked);
  d.dim_meet = d.dim_a + d.dim_b - d.dim_sum;
  return d;
}

}  // namespace apw
