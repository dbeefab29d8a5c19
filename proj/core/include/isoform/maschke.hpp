#pragma once

// Finite matrix groups acting on k^n: invariant forms by averaging, Maschke's
// equivariant projector, and a report showing that a G-invariant isotropic line
// W satisfies W in W^perp while the averaging projector still complements it.

#include <cstdint>
#include <optional>
#include <vector>

#include "isoform/forms.hpp"
#include "isoform/isotropy.hpp"

namespace isoform {

inline constexpr std::size_t kDefaultGroupCap = 10'000;
inline constexpr std::size_t kDefaultProbeBudget = 64;

/// A finite group given by generators together with its full closure.
class Representation {
 public:
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  /// Breadth-first insertion order; elements()[0] is the identity.
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// Maschke's hypothesis: char k does not divide |G|.
  bool order_invertible() const noexcept;

  /// Throws DimensionMismatch, FieldMismatch, SingularGenerator, GroupTooLarge.
  friend Representation close_group(const FieldSpec& field, std::size_t dim, std::vector<Matrix> generators,
                                    std::size_t cap);

  /// The action on an invariant subspace, in coordinates of its basis.
  friend Representation restrict_representation(const Representation& rep, const Subspace& invariant);

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
};

Representation close_group(const FieldSpec& field, std::size_t dim, std::vector<Matrix> generators,
                           std::size_t cap = kDefaultGroupCap);

/// Throws NotInvariant when the subspace is not G-stable.
Representation restrict_representation(const Representation& rep, const Subspace& invariant);

/// sum_g g^T H conj(g). Always G-invariant; may be degenerate or zero.
HermitianForm average_form(const Representation& rep, const HermitianForm& seed);

bool is_invariant_form(const Representation& rep, const HermitianForm& form);

bool is_invariant_subspace(const Representation& rep, const Subspace& w);

struct EquivariantProjection {
  Matrix projector;
  Subspace complement;
};

/// |G|^-1 sum_g g P0 g^-1 for a projector P0 onto w; its kernel is an invariant
/// complement. Throws CharacteristicDividesOrder or NotInvariant.
EquivariantProjection equivariant_projector(const Representation& rep, const Subspace& w);

/// Splits k^n into invariant summands by searching for invariant subspaces
/// (orbit spans, orbit sums, kernels and eigenspaces of averaged maps) and
/// complementing them with equivariant projectors. Summands with no invariant
/// subspace found within the probe budget are kept whole; irreducibility is not
/// certified. Throws CharacteristicDividesOrder.
std::vector<Subspace> decompose(const Representation& rep, std::uint64_t seed = 0,
                                std::size_t probe_budget = kDefaultProbeBudget);

struct CounterexampleReport {
  FieldSpec field;
  HermitianForm form;
  IsotropyWitness witness;
  Subspace w_subspace;
  Subspace w_perp;
  bool contains = false;
  std::size_t restriction_rank = 0;
  Subspace maschke_complement;
  /// W + complement spans k^n and the complement is invariant.
  bool complement_check = false;
};

/// Averages the seed, takes W = span of an isotropic vector of the result and
/// records W in W^perp, rank of the form on W, and the Maschke complement of W.
/// Throws NoIsotropicVector, NotInvariant (span not G-stable) and
/// CharacteristicDividesOrder.
CounterexampleReport counterexample_report(const Representation& rep, const HermitianForm& seed,
                                           std::uint64_t search_bound = kDefaultSearchBound);

}  // namespace isoform
