#include "isoform/maschke.hpp"

#include <functional>
#include <initializer_list>
#include <random>
#include <unordered_set>
#include <utility>

namespace isoform {

bool Representation::order_invertible() const noexcept {
  const std::uint64_t p = field_.characteristic();
  return p == 0 || elements_.size() % p != 0;
}

Representation close_group(const FieldSpec& field, std::size_t dim, std::vector<Matrix> generators, std::size_t cap) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Matrix& g = generators[k];
    if (!(g.field() == field)) fail(ErrorCode::FieldMismatch, "generator " + std::to_string(k) + " over another field");
    if (g.rows() != dim || g.cols() != dim) {
      fail(ErrorCode::DimensionMismatch, "generator " + std::to_string(k) + " is not " + std::to_string(dim) + "x" +
                                             std::to_string(dim));
    }
    if (g.determinant().is_zero()) fail(ErrorCode::SingularGenerator, "generator " + std::to_string(k) + " is singular");
  }
  Representation rep;
  rep.field_ = field;
  rep.dim_ = dim;
  rep.generators_ = std::move(generators);
  rep.elements_.push_back(Matrix::identity(field, dim));
  std::unordered_set<Matrix> seen(rep.elements_.begin(), rep.elements_.end());
  for (std::size_t i = 0; i < rep.elements_.size(); ++i) {
    for (const auto& g : rep.generators_) {
      Matrix product = rep.elements_[i] * g;
      if (seen.insert(product).second) {
        if (rep.elements_.size() >= cap) {
          fail(ErrorCode::GroupTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
        }
        rep.elements_.push_back(std::move(product));
      }
    }
  }
  return rep;
}

namespace {

/// Matrix of m restricted to span(basis), in basis coordinates; nullopt if not stable.
std::optional<Matrix> restrict_matrix(const Matrix& m, const Matrix& basis) {
  std::vector<Vector> columns;
  for (const auto& u : basis.columns()) {
    const Vector image = m * u;
    if (!in_column_span(basis, image)) return std::nullopt;
    columns.push_back(coordinates_in(basis, image));
  }
  return Matrix::from_columns(m.field(), basis.cols(), columns);
}

}  // namespace

Representation restrict_representation(const Representation& rep, const Subspace& invariant) {
  const Matrix& basis = invariant.basis();
  auto restricted = [&](const Matrix& m) {
    auto r = restrict_matrix(m, basis);
    if (!r) fail(ErrorCode::NotInvariant, "subspace is not stable under the group");
    return *std::move(r);
  };
  Representation out;
  out.field_ = rep.field_;
  out.dim_ = invariant.dim();
  for (const auto& g : rep.generators_) out.generators_.push_back(restricted(g));
  // The image of G may be a proper quotient; keep each matrix once.
  std::unordered_set<Matrix> seen;
  for (const auto& g : rep.elements_) {
    Matrix r = restricted(g);
    if (seen.insert(r).second) out.elements_.push_back(std::move(r));
  }
  return out;
}

HermitianForm average_form(const Representation& rep, const HermitianForm& seed) {
  if (!(seed.field() == rep.field())) fail(ErrorCode::FieldMismatch, seed.field().to_string() + " vs " + rep.field().to_string());
  if (seed.dim() != rep.dim()) fail(ErrorCode::DimensionMismatch, "seed form and representation differ in dimension");
  Matrix total(rep.field(), rep.dim(), rep.dim());
  for (const auto& g : rep.elements()) total += g.transpose() * seed.gram() * g.conj();
  HermitianForm averaged(std::move(total));
  if (!is_invariant_form(rep, averaged)) fail(ErrorCode::InternalInvariant, "averaged form is not invariant");
  return averaged;
}

bool is_invariant_form(const Representation& rep, const HermitianForm& form) {
  for (const auto& g : rep.generators()) {
    if (!(g.transpose() * form.gram() * g.conj() == form.gram())) return false;
  }
  return true;
}

bool is_invariant_subspace(const Representation& rep, const Subspace& w) {
  if (!(w.field() == rep.field())) fail(ErrorCode::FieldMismatch, w.field().to_string() + " vs " + rep.field().to_string());
  if (w.ambient_dim() != rep.dim()) fail(ErrorCode::DimensionMismatch, "subspace lives in another ambient space");
  for (const auto& g : rep.generators()) {
    for (const auto& v : w.basis().columns()) {
      if (!w.contains(g * v)) return false;
    }
  }
  return true;
}

EquivariantProjection equivariant_projector(const Representation& rep, const Subspace& w) {
  const FieldSpec& field = rep.field();
  const std::size_t n = rep.dim();
  if (!rep.order_invertible()) {
    fail(ErrorCode::CharacteristicDividesOrder,
         std::to_string(field.characteristic()) + " divides |G| = " + std::to_string(rep.order()));
  }
  if (!is_invariant_subspace(rep, w)) fail(ErrorCode::NotInvariant, "subspace is not stable under the group");

  // Greedy completion of w's basis by standard vectors; project onto the first m coordinates.
  Matrix extended = w.basis();
  for (std::size_t i = 0; i < n && extended.cols() < n; ++i) {
    Matrix candidate = extended.hstack(Matrix::from_columns(field, n, {unit_vector(field, n, i)}));
    if (candidate.rank() == candidate.cols()) extended = std::move(candidate);
  }
  Matrix keep(field, n, n);
  for (std::size_t i = 0; i < w.dim(); ++i) keep(i, i) = FieldElement::one(field);
  const Matrix base_projector = extended * keep * extended.inverse();

  Matrix total(field, n, n);
  for (const auto& g : rep.elements()) total += g * base_projector * g.inverse();
  const Matrix projector = total.scaled(inverse(FieldElement(field, static_cast<std::int64_t>(rep.order()))));

  bool ok = projector * projector == projector && projector.rank() == w.dim();
  for (const auto& v : projector.columns()) ok = ok && w.contains(v);
  for (const auto& g : rep.generators()) ok = ok && projector * g == g * projector;
  if (!ok) fail(ErrorCode::InternalInvariant, "averaged projector failed its identities");

  return {projector, Subspace(projector.kernel())};
}

namespace {

class InvariantSubspaceSearch {
 public:
  InvariantSubspaceSearch(const Representation& rep, std::mt19937_64& rng, std::size_t budget)
      : rep_(rep), rng_(rng), budget_(budget) {}

  std::optional<Subspace> run() {
    const FieldSpec& field = rep_.field();
    const std::size_t n = rep_.dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (auto w = from_orbit(unit_vector(field, n, i))) return w;
    }
    while (probes_ < budget_) {
      Vector v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(sample_element(field, rng_, 3));
      if (auto w = from_orbit(v)) return w;
      if (auto w = from_commuting_map()) return w;
    }
    return std::nullopt;
  }

 private:
  bool spend() { return probes_++ < budget_; }

  bool proper(const Subspace& w) const { return w.dim() > 0 && w.dim() < rep_.dim(); }

  std::optional<Subspace> accept(Subspace w) const {
    if (proper(w) && is_invariant_subspace(rep_, w)) return w;
    return std::nullopt;
  }

  /// Orbit sum (a fixed vector) and orbit span of v; both are invariant.
  std::optional<Subspace> from_orbit(const Vector& v) {
    const FieldSpec& field = rep_.field();
    const std::size_t n = rep_.dim();
    if (!spend()) return std::nullopt;
    Vector sum = zero_vector(field, n);
    std::vector<Vector> orbit;
    for (const auto& g : rep_.elements()) {
      Vector image = g * v;
      sum = axpy(sum, FieldElement::one(field), image);
      orbit.push_back(std::move(image));
    }
    if (!is_zero_vector(sum)) {
      if (auto w = accept(Subspace::span(field, n, {sum}))) return w;
    }
    if (!spend()) return std::nullopt;
    return accept(Subspace::span(field, n, orbit));
  }

  /// Kernel, image and eigenspaces of sum_g g A g^-1 for a random A; these
  /// commute with the action, so all of them are invariant.
  std::optional<Subspace> from_commuting_map() {
    const FieldSpec& field = rep_.field();
    const std::size_t n = rep_.dim();
    if (!spend()) return std::nullopt;
    Matrix probe(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) probe(i, j) = sample_element(field, rng_, 3);
    }
    Matrix averaged(field, n, n);
    for (const auto& g : rep_.elements()) averaged += g * probe * g.inverse();

    if (auto w = accept(Subspace(averaged.kernel()))) return w;
    if (auto w = accept(Subspace::span(field, n, averaged.columns()))) return w;
    for (const auto& lambda : eigenvalue_candidates(averaged)) {
      const Matrix shifted = averaged - Matrix::identity(field, n).scaled(lambda);
      if (auto w = accept(Subspace(shifted.kernel()))) return w;
    }
    return std::nullopt;
  }

  std::vector<FieldElement> eigenvalue_candidates(const Matrix& m) const {
    const FieldSpec& field = m.field();
    std::vector<FieldElement> out;
    if (field.is_finite() && field.size() <= 4096) {
      for (std::uint64_t i = 0; i < field.size(); ++i) out.push_back(FieldElement::from_index(field, i));
      return out;
    }
    for (const auto& x : m.diagonal_entries()) out.push_back(x);
    for (std::int64_t k = -3; k <= 3; ++k) out.push_back(FieldElement(field, k));
    return out;
  }

  const Representation& rep_;
  std::mt19937_64& rng_;
  std::size_t budget_;
  std::size_t probes_ = 0;
};

std::vector<Matrix> split(const Representation& rep, std::mt19937_64& rng, std::size_t budget) {
  const FieldSpec& field = rep.field();
  if (rep.dim() <= 1) return {Matrix::identity(field, rep.dim())};
  auto w = InvariantSubspaceSearch(rep, rng, budget).run();
  if (!w) return {Matrix::identity(field, rep.dim())};
  const Subspace complement = equivariant_projector(rep, *w).complement;
  std::vector<Matrix> out;
  for (const Subspace* part : std::initializer_list<const Subspace*>{&*w, &complement}) {
    for (const auto& local : split(restrict_representation(rep, *part), rng, budget)) {
      out.push_back(part->basis() * local);
    }
  }
  return out;
}

}  // namespace

std::vector<Subspace> decompose(const Representation& rep, std::uint64_t seed, std::size_t probe_budget) {
  if (!rep.order_invertible()) {
    fail(ErrorCode::CharacteristicDividesOrder,
         std::to_string(rep.field().characteristic()) + " divides |G| = " + std::to_string(rep.order()));
  }
  if (rep.dim() == 0) return {};
  std::mt19937_64 rng(seed);
  std::vector<Subspace> out;
  for (auto& basis : split(rep, rng, probe_budget)) out.emplace_back(std::move(basis));
  return out;
}

CounterexampleReport counterexample_report(const Representation& rep, const HermitianForm& seed,
                                           std::uint64_t search_bound) {
  const FieldSpec& field = rep.field();
  const std::size_t n = rep.dim();
  if (!rep.order_invertible()) {
    fail(ErrorCode::CharacteristicDividesOrder,
         std::to_string(field.characteristic()) + " divides |G| = " + std::to_string(rep.order()));
  }
  HermitianForm form = average_form(rep, seed);
  IsotropyOutcome outcome = isotropic_any(form, search_bound);
  if (!outcome.witness) {
    fail(ErrorCode::NoIsotropicVector, outcome.exhaustive ? "the averaged form is anisotropic"
                                                          : "none within search bound " + std::to_string(search_bound));
  }
  Subspace w = Subspace::span(field, n, {outcome.witness->vector()});
  if (!is_invariant_subspace(rep, w)) fail(ErrorCode::NotInvariant, "the isotropic line is not stable under the group");

  Subspace w_perp = orthogonal_complement(form, w);
  const bool contains = w_perp.contains(w);
  const std::size_t restriction_rank = restrict(form, w).gram().rank();
  if (!contains || restriction_rank != 0) fail(ErrorCode::InternalInvariant, "isotropic line not inside its complement");

  EquivariantProjection projection = equivariant_projector(rep, w);
  const bool complement_check = w.dim() + projection.complement.dim() == n &&
                                w.basis().hstack(projection.complement.basis()).rank() == n &&
                                is_invariant_subspace(rep, projection.complement);

  return CounterexampleReport{field,
                              std::move(form),
                              *std::move(outcome.witness),
                              std::move(w),
                              std::move(w_perp),
                              contains,
                              restriction_rank,
                              std::move(projection.complement),
                              complement_check};
}

}  // namespace isoform
