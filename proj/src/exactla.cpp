#include "freepi/exactla.hpp"

#include <utility>

#include "freepi/errors.hpp"

namespace freepi {

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const Scalar> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DimensionMismatch("appended row has wrong width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Vector operator*(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector dimension mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (v[c] != 0 && m(r, c) != 0) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(lead_row, k) != 0) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

bool in_column_span(const Matrix& basis, std::span<const Scalar> v) {
  if (v.size() != basis.rows()) throw DimensionMismatch("vector length does not match basis rows");
  Matrix augmented(basis.rows(), basis.cols() + 1);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (std::size_t c = 0; c < basis.cols(); ++c) augmented(r, c) = basis(r, c);
    augmented(r, basis.cols()) = v[r];
  }
  return rank(augmented) == rank(basis);
}

Scalar l1_norm(std::span<const Scalar> v) {
  Scalar s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

}  // namespace freepi

namespace freepi {

bool RowReducer::add(Vector row) {
  if (row.size() != width_) throw DimensionMismatch("row width does not match reducer");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar factor = row[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t k = 0; k < width_; ++k)
      if (rows_[i][k] != 0) row[k] -= factor * rows_[i][k];
  }
  std::size_t lead = 0;
  while (lead < width_ && row[lead] == 0) ++lead;
  if (lead == width_) return false;
  const Scalar inv = 1 / row[lead];
  for (auto& x : row)
    if (x != 0) x *= inv;
  // Keep the stored rows fully reduced against the new pivot.
  for (auto& r : rows_) {
    const Scalar factor = r[lead];
    if (factor == 0) continue;
    for (std::size_t k = 0; k < width_; ++k)
      if (row[k] != 0) r[k] -= factor * row[k];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(lead);
  return true;
}

}  // namespace freepi
