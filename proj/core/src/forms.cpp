#include "isoform/forms.hpp"

#include <utility>

namespace isoform {

namespace {

void check_vector(const HermitianForm& form, std::span<const FieldElement> v) {
  if (v.size() != form.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "vector of length " + std::to_string(v.size()) + " for a form of dimension " + std::to_string(form.dim()));
  }
  for (const auto& x : v) {
    if (!(x.field() == form.field())) fail(ErrorCode::FieldMismatch, x.field().to_string() + " vs " + form.field().to_string());
  }
}

void check_subspace(const HermitianForm& form, const Subspace& w) {
  if (!(w.field() == form.field())) fail(ErrorCode::FieldMismatch, w.field().to_string() + " vs " + form.field().to_string());
  if (w.ambient_dim() != form.dim()) fail(ErrorCode::DimensionMismatch, "subspace lives in another ambient space");
}

}  // namespace

HermitianForm::HermitianForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) fail(ErrorCode::DimensionMismatch, "Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    for (std::size_t j = i; j < gram_.cols(); ++j) {
      if (!(gram_(j, i) == conj(gram_(i, j)))) {
        fail(ErrorCode::NotHermitian,
             "entry (" + std::to_string(j) + "," + std::to_string(i) + ") is not the conjugate of (" +
                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

HermitianForm HermitianForm::diagonal(const FieldSpec& field, std::span<const FieldElement> entries) {
  return HermitianForm(Matrix::diagonal(field, entries));
}

HermitianForm HermitianForm::zero(const FieldSpec& field, std::size_t n) { return HermitianForm(Matrix(field, n, n)); }

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.rank() != basis_.cols()) fail(ErrorCode::NotFullRank, "subspace basis has dependent columns");
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  const Matrix all = Matrix::from_columns(field, ambient_dim, vectors);
  std::vector<Vector> kept;
  for (auto j : independent_columns(all)) kept.push_back(vectors[j]);
  return Subspace(Matrix::from_columns(field, ambient_dim, kept));
}

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, ambient_dim, 0));
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

bool Subspace::contains(std::span<const FieldElement> v) const {
  if (v.size() != ambient_dim()) fail(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  return in_column_span(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) fail(ErrorCode::DimensionMismatch, "different ambient spaces");
  return basis_.hstack(other.basis_).rank() == dim();
}

FieldElement evaluate(const HermitianForm& form, std::span<const FieldElement> v, std::span<const FieldElement> w) {
  check_vector(form, v);
  check_vector(form, w);
  const Matrix& h = form.gram();
  FieldElement total = FieldElement::zero(form.field());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    FieldElement row = FieldElement::zero(form.field());
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j].is_zero()) continue;
      row += h(i, j) * conj(w[j]);
    }
    total += v[i] * row;
  }
  return total;
}

bool is_isotropic(const HermitianForm& form, std::span<const FieldElement> v) {
  return evaluate(form, v, v).is_zero();
}

Subspace radical(const HermitianForm& form) {
  // v^T H conj(w) = 0 for all w  <=>  H^T v = 0.
  return Subspace(form.gram().transpose().kernel());
}

std::optional<Vector> non_isotropic_vector(const HermitianForm& form) {
  const Matrix& h = form.gram();
  const std::size_t n = form.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!h(i, i).is_zero()) return unit_vector(form.field(), n, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldElement& a = h(i, j);
      if (a.is_zero()) continue;
      FieldElement t = FieldElement::one(form.field());
      if ((a + conj(a)).is_zero()) t = FieldElement::generator(form.field());
      Vector v = unit_vector(form.field(), n, i);
      v[j] = t;
      return v;
    }
  }
  return std::nullopt;
}

DiagonalizationResult diagonalize(const HermitianForm& form) {
  const FieldSpec& field = form.field();
  const std::size_t n = form.dim();
  std::vector<Vector> basis;
  Vector diagonal;
  Matrix complement = Matrix::identity(field, n);

  while (complement.cols() > 0) {
    const HermitianForm local = restrict(form, Subspace(complement));
    const auto local_vector = non_isotropic_vector(local);
    if (!local_vector) {
      for (auto& column : complement.columns()) {
        basis.push_back(std::move(column));
        diagonal.push_back(FieldElement::zero(field));
      }
      break;
    }
    const Vector e = complement * *local_vector;
    const FieldElement self = evaluate(form, e, e);
    const FieldElement self_inv = inverse(self);

    std::vector<Vector> projected;
    for (const auto& v : complement.columns()) {
      projected.push_back(axpy(v, -(evaluate(form, v, e) * self_inv), e));
    }
    basis.push_back(e);
    diagonal.push_back(self);
    complement = Subspace::span(field, n, projected).basis();
  }
  return {Matrix::from_columns(field, n, basis), std::move(diagonal)};
}

Subspace orthogonal_complement(const HermitianForm& form, const Subspace& w_space) {
  check_subspace(form, w_space);
  // (v, w_j) = v^T (H conj(w_j)); stack the columns H conj(w_j) and take the left kernel.
  const Matrix constraints = form.gram() * w_space.basis().conj();
  return Subspace(constraints.transpose().kernel());
}

HermitianForm restrict(const HermitianForm& form, const Subspace& w_space) {
  check_subspace(form, w_space);
  const Matrix& w = w_space.basis();
  return HermitianForm(w.transpose() * form.gram() * w.conj());
}

}  // namespace isoform
