#include "pcurve/linalg.hpp"

#include <algorithm>

#include "pcurve/error.hpp"

namespace pcurve {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(std::move(field), rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::InconsistentBasis, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& a) { return a.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::twisted(int power) const {
  const int k = static_cast<int>(field_->degree());
  const unsigned times = static_cast<unsigned>(((power % k) + k) % k);
  Matrix t = *this;
  if (times == 0) return t;
  for (auto& a : t.data_) a = a.frobenius(times);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const FieldElement& a = at(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const FieldElement& b = rhs.at(l, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector out(rows_, field_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const FieldElement inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_reduce(m).pivots.size();
}

std::vector<Vector> nullspace(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field()->zero());
    v[free] = m.field()->one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(m.field(), 0, 0);
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field()->one();
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  return inv;
}

SpanSolver::SpanSolver(Field field, std::size_t ambient, std::span<const Vector> basis)
    : basis_(Matrix::from_columns(field, ambient, basis)) {
  // Independent rows of the basis matrix are the pivot columns of its transpose.
  const RowEchelon e = row_reduce(basis_.transpose());
  if (e.pivots.size() != basis.size())
    throw Error(ErrorCode::InconsistentBasis, "basis vectors are linearly dependent");
  rows_ = e.pivots;
  Matrix block(field, rows_.size(), basis.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t c = 0; c < basis.size(); ++c) block.at(i, c) = basis_.at(rows_[i], c);
  auto inv = inverse(block);
  if (!inv) throw Error(ErrorCode::InconsistentBasis, "selected block is singular");
  block_inverse_ = std::move(*inv);
}

std::optional<Vector> SpanSolver::solve(std::span<const FieldElement> v) const {
  if (v.size() != basis_.rows()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector picked;
  picked.reserve(rows_.size());
  for (auto r : rows_) picked.push_back(v[r]);
  Vector c = block_inverse_ * std::span<const FieldElement>(picked);
  const Vector back = basis_ * std::span<const FieldElement>(c);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(back[i] == v[i])) return std::nullopt;
  return c;
}

}  // namespace pcurve
