#ifndef PCURVE_LINALG_HPP
#define PCURVE_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "pcurve/gf.hpp"

namespace pcurve {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  Matrix transpose() const;
  // Every entry raised to p^power; negative powers take p-th roots.
  Matrix twisted(int power) const;
  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(std::span<const FieldElement> v) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot in each column is the first nonzero
// entry at or below the current row.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates with respect to a full-column-rank set of vectors.
class SpanSolver {
 public:
  SpanSolver(Field field, std::size_t ambient, std::span<const Vector> basis);

  std::size_t dimension() const noexcept { return basis_.cols(); }
  // c with basis * c = v, or nullopt when v is outside the span.
  std::optional<Vector> solve(std::span<const FieldElement> v) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> rows_;  // rows of basis_ forming an invertible block
  Matrix block_inverse_;
};

}  // namespace pcurve

#endif  // PCURVE_LINALG_HPP
