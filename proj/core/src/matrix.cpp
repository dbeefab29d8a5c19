#include "isoform/matrix.hpp"

#include <utility>

namespace isoform {

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, FieldElement::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = FieldElement::one(field);
  return v;
}

bool is_zero_vector(std::span<const FieldElement> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector scale(const FieldElement& alpha, std::span<const FieldElement> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(alpha * x);
  return out;
}

Vector axpy(std::span<const FieldElement> u, const FieldElement& alpha, std::span<const FieldElement> v) {
  if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "vector lengths differ");
  Vector out(u.begin(), u.end());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += alpha * v[i];
  return out;
}

Vector conj(std::span<const FieldElement> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(conj(x));
  return out;
}

std::string vector_to_string(std::span<const FieldElement> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == field)) fail(ErrorCode::FieldMismatch, "matrix entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!(columns[j][i].field() == field)) fail(ErrorCode::FieldMismatch, "matrix entry from another field");
      m(i, j) = columns[j][i];
    }
  }
  return m;
}

Matrix Matrix::parse_rows(const FieldSpec& field, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> parsed;
  for (const auto& row : rows) {
    Vector r;
    for (const char* literal : row) r.push_back(parse_element(field, literal));
    parsed.push_back(std::move(r));
  }
  return from_rows(field, parsed);
}

Matrix Matrix::diagonal(const FieldSpec& field, std::span<const FieldElement> entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::conj() const {
  Matrix c = *this;
  for (auto& x : c.data_) x = isoform::conj(x);
  return c;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(field_ == rhs.field_)) fail(ErrorCode::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  if (cols_ != rhs.rows_) fail(ErrorCode::DimensionMismatch, "inner dimensions differ");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const FieldElement> v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "vector length differs from column count");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::DimensionMismatch, "shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  return out += rhs;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + rhs.scaled(-FieldElement::one(field_)); }

Matrix Matrix::scaled(const FieldElement& alpha) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= alpha;
  return out;
}

bool Matrix::is_zero() const { return is_zero_vector(data_); }

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Vector Matrix::diagonal_entries() const {
  Vector out;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back((*this)(i, i));
  return out;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) fail(ErrorCode::DimensionMismatch, "column block out of range");
  Matrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) fail(ErrorCode::DimensionMismatch, "row counts differ");
  if (!(field_ == rhs.field_)) fail(ErrorCode::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

RowEchelon row_reduce(const Matrix& a) {
  RowEchelon result{a, {}};
  Matrix& m = result.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    const FieldElement inv = inverse(m(pivot_row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const FieldElement factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return result;
}

std::size_t Matrix::rank() const { return row_reduce(*this).pivot_columns.size(); }

FieldElement Matrix::determinant() const {
  if (!is_square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix m = *this;
  FieldElement det = FieldElement::one(field_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t r = col;
    while (r < rows_ && m(r, col).is_zero()) ++r;
    if (r == rows_) return FieldElement::zero(field_);
    if (r != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const FieldElement inv = isoform::inverse(m(col, col));
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m(i, col).is_zero()) continue;
      const FieldElement factor = m(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (!is_square()) fail(ErrorCode::SingularMatrix, "non-square matrix has no inverse");
  const RowEchelon e = row_reduce(hstack(identity(field_, rows_)));
  if (e.pivot_columns.size() < rows_ || (rows_ > 0 && e.pivot_columns[rows_ - 1] >= cols_)) {
    fail(ErrorCode::SingularMatrix, "matrix is singular");
  }
  return e.reduced.column_block(cols_, cols_);
}

Matrix Matrix::kernel() const {
  const RowEchelon e = row_reduce(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(field_, cols_, free);
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return from_columns(field_, cols_, basis);
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& x : data_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::size_t> independent_columns(const Matrix& a) { return row_reduce(a).pivot_columns; }

bool in_column_span(const Matrix& basis, std::span<const FieldElement> v) {
  Matrix column = Matrix::from_columns(basis.field(), basis.rows(), {Vector(v.begin(), v.end())});
  return basis.hstack(column).rank() == basis.rank();
}

Vector coordinates_in(const Matrix& basis, std::span<const FieldElement> v) {
  Matrix column = Matrix::from_columns(basis.field(), basis.rows(), {Vector(v.begin(), v.end())});
  const RowEchelon e = row_reduce(basis.hstack(column));
  if (e.pivot_columns.size() != basis.cols() ||
      (!e.pivot_columns.empty() && e.pivot_columns.back() >= basis.cols())) {
    fail(ErrorCode::PreconditionViolated, "vector not in the span of an independent basis");
  }
  Vector x = zero_vector(basis.field(), basis.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) x[e.pivot_columns[r]] = e.reduced(r, basis.cols());
  return x;
}

}  // namespace isoform
