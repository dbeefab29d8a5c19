#pragma once

// The norm map phi(x) = x conj(x), norm equations, and constructions of
// isotropic vectors.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "isoform/forms.hpp"

namespace isoform {

/// Default cap for bounded searches (candidate count or height).
inline constexpr std::uint64_t kDefaultSearchBound = 10'000;
/// Default cap on q^n for exhaustive polynomial zero search.
inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;
/// Largest p for which the F_{p^2} norm solver builds a full discrete-log table.
inline constexpr std::uint64_t kDiscreteLogTableLimit = 100'000;

/// x * conj(x); lies in the fixed field. Equals x^2 under the identity involution.
FieldElement norm(const FieldElement& x);

/// Finds x with norm(x) == c.
///
/// * F_{p^2}: c = N(g)^k for a generator g of F_{p^2}^*, with k read off a
///   discrete-log table of F_p^*; returns g^k.
/// * F_p, Q: square root (Tonelli-Shanks, exact rational root).
/// * Q(sqrt d): search over x = (A + B r) / D by increasing max(D, |B|), at most
///   `search_bound` pairs (D, B).
///
/// Throws PreconditionViolated if c is zero or not fixed, NormNotRepresented
/// when no preimage exists (or none was found within the bound for Q(sqrt d)).
FieldElement norm_solve(const FieldElement& c, std::uint64_t search_bound = kDefaultSearchBound);

/// Square root mod an odd prime; nullopt for non-residues.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

enum class WitnessKind { RadicalVector, NormEquation, DiagonalQuadric, BruteForce };

std::string_view witness_kind_name(WitnessKind kind) noexcept;

/// A nonzero isotropic vector of a specific form, in that form's coordinates.
class IsotropyWitness {
 public:
  /// Throws InternalInvariant unless v != 0 and (v, v) == 0.
  IsotropyWitness(const HermitianForm& form, Vector v, WitnessKind kind);

  const Vector& vector() const noexcept { return vector_; }
  WitnessKind construction() const noexcept { return kind_; }

 private:
  Vector vector_;
  WitnessKind kind_;
};

/// Diagonalizes; a zero diagonal entry gives its basis vector. Otherwise solves
/// norm(x) = -l2 / l1 and returns x e_1 + e_2, mapped back to the input basis.
/// Throws DimensionTooSmall for dim < 2; NormNotRepresented propagates.
IsotropyWitness isotropic_via_norm(const HermitianForm& form, std::uint64_t search_bound = kDefaultSearchBound);

/// Symmetric forms over F_p, dim >= 3: after diagonalizing, fixes x3 = 1 and
/// finds x, y with l1 x^2 + l2 y^2 = -l3 by scanning x.
/// Throws UnsupportedField or DimensionTooSmall.
IsotropyWitness isotropic_symmetric(const HermitianForm& form);

struct IsotropyOutcome {
  std::optional<IsotropyWitness> witness;
  /// True when the absence of a witness is a proof, not a bound exhaustion.
  bool exhaustive = false;
};

/// Dispatches to the construction that applies; falls back to a bounded
/// brute-force search over vectors of small height for Q and Q(sqrt d).
IsotropyOutcome isotropic_any(const HermitianForm& form, std::uint64_t search_bound = kDefaultSearchBound);

struct Monomial {
  FieldElement coefficient;
  std::vector<std::uint32_t> exponents;
};

/// Homogeneous polynomial with merged terms and no zero coefficients.
class HomogeneousPoly {
 public:
  /// Throws NotHomogeneous, DimensionMismatch or FieldMismatch.
  HomogeneousPoly(const FieldSpec& field, std::size_t n_vars, std::uint32_t degree, std::vector<Monomial> monomials);

  /// sum_i coefficients[i] * x_i^2
  static HomogeneousPoly diagonal_quadric(const FieldSpec& field, std::span<const FieldElement> coefficients);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  FieldElement operator()(std::span<const FieldElement> x) const;

 private:
  FieldSpec field_;
  std::size_t n_vars_;
  std::uint32_t degree_;
  std::vector<Monomial> monomials_;
};

/// Exhaustive search over projective representatives (first nonzero
/// coordinate 1) of a finite field. nullopt means no nontrivial zero exists.
/// Throws UnsupportedField for infinite fields and SearchSpaceTooLarge when q^n
/// exceeds the bound.
std::optional<Vector> cw_solve(const HomogeneousPoly& f, std::uint64_t search_bound = kDefaultEnumerationBound);

}  // namespace isoform
