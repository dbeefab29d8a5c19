#pragma once

// Dense matrices over a FieldSpec and exact Gaussian elimination.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "isoform/field.hpp"

namespace isoform {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero_vector(std::span<const FieldElement> v);
Vector scale(const FieldElement& alpha, std::span<const FieldElement> v);
/// u + alpha * v
Vector axpy(std::span<const FieldElement> u, const FieldElement& alpha, std::span<const FieldElement> v);
Vector conj(std::span<const FieldElement> v);
/// "(a, b, c)" in element literal syntax.
std::string vector_to_string(std::span<const FieldElement> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& columns);
  /// Rows given as element literals; convenient in tests.
  static Matrix parse_rows(const FieldSpec& field, std::initializer_list<std::initializer_list<const char*>> rows);
  static Matrix diagonal(const FieldSpec& field, std::span<const FieldElement> entries);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  /// Entrywise involution.
  Matrix conj() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(std::span<const FieldElement> v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix scaled(const FieldElement& alpha) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const;
  bool is_diagonal() const;
  Vector diagonal_entries() const;

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  /// [this | rhs]
  Matrix hstack(const Matrix& rhs) const;

  std::size_t rank() const;
  FieldElement determinant() const;
  /// Throws SingularMatrix.
  Matrix inverse() const;
  /// Columns form a basis of {x : A x = 0}; cols() x k.
  Matrix kernel() const;

  std::size_t hash() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon row_reduce(const Matrix& a);

/// Indices of a maximal linearly independent prefix-greedy subset of the columns.
std::vector<std::size_t> independent_columns(const Matrix& a);

/// True iff v lies in the column span of basis.
bool in_column_span(const Matrix& basis, std::span<const FieldElement> v);

/// Solves basis * x = v for x; basis has independent columns and v lies in its span.
Vector coordinates_in(const Matrix& basis, std::span<const FieldElement> v);

}  // namespace isoform

template <>
struct std::hash<isoform::Matrix> {
  std::size_t operator()(const isoform::Matrix& m) const { return m.hash(); }
};
