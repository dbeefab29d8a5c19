#pragma once

// Hermitian forms given by Gram matrices.
//
// The pairing of column vectors v, w is
//     (v, w) = sum_ij v_i * conj(w_j) * H[i][j] = v^T H conj(w),
// linear in the first argument and conjugate-linear in the second.

#include <optional>
#include <vector>

#include "isoform/matrix.hpp"

namespace isoform {

class HermitianForm {
 public:
  /// Throws DimensionMismatch for a non-square matrix and NotHermitian when
  /// gram[j][i] != conj(gram[i][j]) for some i, j.
  explicit HermitianForm(Matrix gram);

  static HermitianForm diagonal(const FieldSpec& field, std::span<const FieldElement> entries);
  static HermitianForm zero(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const noexcept { return gram_.field(); }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }

  bool is_zero() const { return gram_.is_zero(); }

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  Matrix gram_;
};

/// A subspace of k^n held as an n x m matrix with independent columns.
class Subspace {
 public:
  /// Throws NotFullRank if the columns are dependent.
  explicit Subspace(Matrix basis);

  /// Span of arbitrary vectors; dependent ones are dropped greedily.
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace zero(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t j) const { return basis_.column(j); }

  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;

 private:
  Matrix basis_;
};

/// Columns of basis_change are the new basis e_1..e_n; the form is diagonal in it.
struct DiagonalizationResult {
  Matrix basis_change;
  Vector diagonal;
};

FieldElement evaluate(const HermitianForm& form, std::span<const FieldElement> v, std::span<const FieldElement> w);

/// (v, v) == 0. The zero vector counts.
bool is_isotropic(const HermitianForm& form, std::span<const FieldElement> v);

Subspace radical(const HermitianForm& form);

/// A vector with nonzero self-pairing, or nullopt exactly when the form is zero.
///
/// Picks the first e_i with H[i][i] != 0. Failing that, the first (i, j), i < j,
/// with a = H[i][j] != 0 gives e_i + t e_j, whose value is conj(t) a + t conj(a).
/// t = 1 works unless a + conj(a) = 0, which only happens under a nontrivial
/// involution; then t = u (or r), for which the value is t (conj(a) - a) != 0.
std::optional<Vector> non_isotropic_vector(const HermitianForm& form);

/// Orthogonal basis by repeatedly splitting off a non-isotropic vector e and
/// projecting the rest onto <e>^perp via v -> v - ((v,e)/(e,e)) e. Once the form
/// restricted to the remaining complement vanishes, that complement is emitted
/// with zero diagonal entries.
DiagonalizationResult diagonalize(const HermitianForm& form);

/// {v : (v, w) = 0 for all w in w_space}
Subspace orthogonal_complement(const HermitianForm& form, const Subspace& w_space);

/// Gram matrix of the form on the given basis: G[i][j] = (w_i, w_j).
HermitianForm restrict(const HermitianForm& form, const Subspace& w_space);

}  // namespace isoform
