#include "isoform/isotropy.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace isoform {

FieldElement norm(const FieldElement& x) { return x * conj(x); }

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (!is_quadratic_residue(a, p)) return std::nullopt;
  std::uint64_t root = 0;
  if (p % 4 == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks with p - 1 = q * 2^s, q odd.
    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    std::uint64_t z = 2;
    while (is_quadratic_residue(z, p)) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    root = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      std::uint64_t i = 0;
      for (std::uint64_t t2 = t; t2 != 1; t2 = t2 * t2 % p) ++i;
      const std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }
  return std::min(root, p - root);
}

namespace {

std::set<std::uint64_t> prime_factors(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    while (n % f == 0) {
      out.insert(f);
      n /= f;
    }
  }
  if (n > 1) out.insert(n);
  return out;
}

/// Smallest-index generator of F_{p^2}^*.
FieldElement multiplicative_generator(const FieldSpec& field) {
  const std::uint64_t p = field.p();
  const auto order = static_cast<std::int64_t>(p * p - 1);
  std::set<std::uint64_t> factors = prime_factors(p - 1);
  factors.merge(prime_factors(p + 1));
  for (std::uint64_t index = 1; index < field.size(); ++index) {
    const FieldElement g = FieldElement::from_index(field, index);
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
      return !pow(g, order / static_cast<std::int64_t>(r)).is_one();
    });
    if (generates) return g;
  }
  fail(ErrorCode::InternalInvariant, "no generator of the multiplicative group found");
}

FieldElement norm_solve_prime_square(const FieldElement& c) {
  const FieldSpec& field = c.field();
  const std::uint64_t p = field.p();
  const std::uint64_t target = c.residue_a();
  if (p <= kDiscreteLogTableLimit) {
    const FieldElement g = multiplicative_generator(field);
    // N(g) = g^(p+1) generates F_p^*; tabulate its discrete logarithm.
    const std::uint64_t base = norm(g).residue_a();
    std::vector<std::uint32_t> log(p, 0);
    std::uint64_t power = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k) {
      log[power] = static_cast<std::uint32_t>(k);
      power = power * base % p;
    }
    return pow(g, static_cast<std::int64_t>(log[target]));
  }
  // Large p: a^2 - s b^2 = c has a solution with small b, since about half the
  // values c + s b^2 are squares.
  for (std::uint64_t b = 0; b < p; ++b) {
    const std::uint64_t rhs = (target + field.s() * (b * b % p)) % p;
    if (auto a = sqrt_mod(rhs, p)) return FieldElement::finite(field, *a, b);
  }
  fail(ErrorCode::InternalInvariant, "norm map on F_p^2 failed to be surjective");
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

FieldElement norm_solve_quadratic_number_field(const FieldElement& c, std::uint64_t search_bound) {
  const FieldSpec& field = c.field();
  const Rational target = c.rational_a();
  const Rational d(field.d());
  std::uint64_t examined = 0;
  // x = (A + B r) / D with A^2 - d B^2 = c D^2; enumerate (D, B) by max(D, |B|).
  for (std::int64_t height = 1; examined < search_bound; ++height) {
    for (std::int64_t den = 1; den <= height && examined < search_bound; ++den) {
      for (std::int64_t k = 0; k <= 2 * height && examined < search_bound; ++k) {
        // B runs 0, 1, -1, 2, -2, ...
        const std::int64_t b = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
        if (std::max(den, b < 0 ? -b : b) != height) continue;
        ++examined;
        const Rational rhs = target * den * den + d * b * b;
        if (auto a = rational_sqrt(rhs)) {
          return FieldElement::rational(field, *a / den, Rational(b, den));
        }
      }
    }
  }
  fail(ErrorCode::NormNotRepresented, c.to_string() + " is not a norm from " + field.to_string() +
                                          " within search bound " + std::to_string(search_bound));
}

}  // namespace

FieldElement norm_solve(const FieldElement& c, std::uint64_t search_bound) {
  if (c.is_zero()) fail(ErrorCode::PreconditionViolated, "norm target must be nonzero");
  if (!is_fixed(c)) fail(ErrorCode::PreconditionViolated, c.to_string() + " is not fixed by the involution");
  const FieldSpec& field = c.field();
  FieldElement x = FieldElement::zero(field);
  switch (field.kind()) {
    case FieldKind::PrimeField: {
      auto root = sqrt_mod(c.residue_a(), field.p());
      if (!root) fail(ErrorCode::NormNotRepresented, c.to_string() + " is not a square mod " + std::to_string(field.p()));
      x = FieldElement::finite(field, *root);
      break;
    }
    case FieldKind::QuadraticExtOfPrime:
      x = norm_solve_prime_square(c);
      break;
    case FieldKind::Rationals: {
      auto root = rational_sqrt(c.rational_a());
      if (!root) fail(ErrorCode::NormNotRepresented, c.to_string() + " is not a square in Q");
      x = FieldElement::rational(field, *root);
      break;
    }
    case FieldKind::QuadraticNumberField:
      x = norm_solve_quadratic_number_field(c, search_bound);
      break;
  }
  if (!(norm(x) == c)) fail(ErrorCode::InternalInvariant, "norm_solve produced a wrong preimage");
  return x;
}

std::string_view witness_kind_name(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::RadicalVector: return "RadicalVector";
    case WitnessKind::NormEquation: return "NormEquation";
    case WitnessKind::DiagonalQuadric: return "DiagonalQuadric";
    case WitnessKind::BruteForce: return "BruteForce";
  }
  return "Unknown";
}

IsotropyWitness::IsotropyWitness(const HermitianForm& form, Vector v, WitnessKind kind)
    : vector_(std::move(v)), kind_(kind) {
  if (is_zero_vector(vector_)) fail(ErrorCode::InternalInvariant, "isotropy witness is the zero vector");
  if (!is_isotropic(form, vector_)) fail(ErrorCode::InternalInvariant, "isotropy witness is not isotropic");
}

namespace {

std::optional<IsotropyWitness> zero_diagonal_witness(const HermitianForm& form, const DiagonalizationResult& diag) {
  for (std::size_t i = 0; i < diag.diagonal.size(); ++i) {
    if (diag.diagonal[i].is_zero()) {
      return IsotropyWitness(form, diag.basis_change.column(i), WitnessKind::RadicalVector);
    }
  }
  return std::nullopt;
}

}  // namespace

IsotropyWitness isotropic_via_norm(const HermitianForm& form, std::uint64_t search_bound) {
  if (form.dim() < 2) fail(ErrorCode::DimensionTooSmall, "need dimension at least 2, got " + std::to_string(form.dim()));
  const DiagonalizationResult diag = diagonalize(form);
  if (auto w = zero_diagonal_witness(form, diag)) return *w;
  const FieldSpec& field = form.field();
  const FieldElement x = norm_solve(-diag.diagonal[1] / diag.diagonal[0], search_bound);
  Vector coords = zero_vector(field, form.dim());
  coords[0] = x;
  coords[1] = FieldElement::one(field);
  return IsotropyWitness(form, diag.basis_change * coords, WitnessKind::NormEquation);
}

IsotropyWitness isotropic_symmetric(const HermitianForm& form) {
  const FieldSpec& field = form.field();
  if (field.kind() != FieldKind::PrimeField) {
    fail(ErrorCode::UnsupportedField, field.to_string() + " is not a prime field with the identity involution");
  }
  if (form.dim() < 3) fail(ErrorCode::DimensionTooSmall, "need dimension at least 3, got " + std::to_string(form.dim()));
  const DiagonalizationResult diag = diagonalize(form);
  if (auto w = zero_diagonal_witness(form, diag)) return *w;

  const auto& l = diag.diagonal;
  const FieldElement l2_inv = inverse(l[1]);
  // l1 x^2 + l2 y^2 + l3 = 0: scan x until (-l3 - l1 x^2) / l2 is a square.
  for (std::uint64_t xi = 0; xi < field.p(); ++xi) {
    const FieldElement x = FieldElement::finite(field, xi);
    const FieldElement rhs = (-l[2] - l[0] * x * x) * l2_inv;
    if (auto y = sqrt_mod(rhs.residue_a(), field.p())) {
      Vector coords = zero_vector(field, form.dim());
      coords[0] = x;
      coords[1] = FieldElement::finite(field, *y);
      coords[2] = FieldElement::one(field);
      return IsotropyWitness(form, diag.basis_change * coords, WitnessKind::DiagonalQuadric);
    }
  }
  fail(ErrorCode::InternalInvariant, "ternary diagonal quadric over F_p without a zero");
}

namespace {

/// Scalars of Z (or Z[r]) grouped by height max(|a|, |b|).
std::vector<FieldElement> scalars_of_height(const FieldSpec& field, std::int64_t h) {
  std::vector<FieldElement> out;
  if (h == 0) {
    out.push_back(FieldElement::zero(field));
    return out;
  }
  if (field.kind() == FieldKind::Rationals) {
    out.push_back(FieldElement(field, h));
    out.push_back(FieldElement(field, -h));
    return out;
  }
  for (std::int64_t a = -h; a <= h; ++a) {
    for (std::int64_t b = -h; b <= h; ++b) {
      if (std::max(a < 0 ? -a : a, b < 0 ? -b : b) == h) out.push_back(FieldElement::rational(field, a, b));
    }
  }
  return out;
}

std::optional<IsotropyWitness> bounded_search(const HermitianForm& form, std::uint64_t search_bound) {
  const FieldSpec& field = form.field();
  const std::size_t n = form.dim();
  std::vector<FieldElement> scalars = scalars_of_height(field, 0);
  std::uint64_t examined = 0;
  for (std::int64_t height = 1; examined < search_bound; ++height) {
    const std::size_t top_start = scalars.size();
    for (auto& s : scalars_of_height(field, height)) scalars.push_back(std::move(s));
    std::vector<std::size_t> digits(n, 0);
    while (examined < search_bound) {
      const bool reaches_top = std::any_of(digits.begin(), digits.end(), [&](std::size_t d) { return d >= top_start; });
      if (reaches_top) {
        ++examined;
        Vector v;
        v.reserve(n);
        for (auto d : digits) v.push_back(scalars[d]);
        if (is_isotropic(form, v)) return IsotropyWitness(form, std::move(v), WitnessKind::BruteForce);
      }
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < scalars.size()) break;
        digits[pos] = 0;
      }
      if (pos == 0 && digits[0] == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace

IsotropyOutcome isotropic_any(const HermitianForm& form, std::uint64_t search_bound) {
  const FieldSpec& field = form.field();
  const std::size_t n = form.dim();
  if (n == 0) return {std::nullopt, true};

  const Subspace rad = radical(form);
  if (rad.dim() > 0) return {IsotropyWitness(form, rad.basis_vector(0), WitnessKind::RadicalVector), true};
  // Nondegenerate from here on; a nondegenerate line has no isotropic vector.
  if (n == 1) return {std::nullopt, true};

  if (!field.has_identity_involution() || n == 2) {
    try {
      return {isotropic_via_norm(form, search_bound), true};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NormNotRepresented) throw;
      // Over a finite field the square / norm test is decisive.
      if (field.is_finite()) return {std::nullopt, true};
    }
  } else if (field.kind() == FieldKind::PrimeField) {
    return {isotropic_symmetric(form), true};
  }
  return {bounded_search(form, search_bound), false};
}

// ---------------------------------------------------------------------------
// Homogeneous polynomials

HomogeneousPoly::HomogeneousPoly(const FieldSpec& field, std::size_t n_vars, std::uint32_t degree,
                                 std::vector<Monomial> monomials)
    : field_(field), n_vars_(n_vars), degree_(degree) {
  std::map<std::vector<std::uint32_t>, FieldElement> merged;
  for (auto& m : monomials) {
    if (!(m.coefficient.field() == field)) fail(ErrorCode::FieldMismatch, "coefficient from another field");
    if (m.exponents.size() != n_vars) {
      fail(ErrorCode::DimensionMismatch, "monomial has " + std::to_string(m.exponents.size()) + " exponents, expected " +
                                             std::to_string(n_vars));
    }
    std::uint64_t total = 0;
    for (auto e : m.exponents) total += e;
    if (total != degree) {
      fail(ErrorCode::NotHomogeneous, "monomial of degree " + std::to_string(total) + " in a form of degree " +
                                          std::to_string(degree));
    }
    auto [it, inserted] = merged.try_emplace(m.exponents, m.coefficient);
    if (!inserted) it->second += m.coefficient;
  }
  // Descending lexicographic order on exponent vectors.
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (!it->second.is_zero()) monomials_.push_back({it->second, it->first});
  }
}

HomogeneousPoly HomogeneousPoly::diagonal_quadric(const FieldSpec& field, std::span<const FieldElement> coefficients) {
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    std::vector<std::uint32_t> e(coefficients.size(), 0);
    e[i] = 2;
    terms.push_back({coefficients[i], std::move(e)});
  }
  return HomogeneousPoly(field, coefficients.size(), 2, std::move(terms));
}

FieldElement HomogeneousPoly::operator()(std::span<const FieldElement> x) const {
  if (x.size() != n_vars_) fail(ErrorCode::DimensionMismatch, "wrong number of arguments");
  FieldElement total = FieldElement::zero(field_);
  for (const auto& m : monomials_) {
    FieldElement term = m.coefficient;
    for (std::size_t i = 0; i < n_vars_ && !term.is_zero(); ++i) {
      if (m.exponents[i] != 0) term *= pow(x[i], m.exponents[i]);
    }
    total += term;
  }
  return total;
}

std::optional<Vector> cw_solve(const HomogeneousPoly& f, std::uint64_t search_bound) {
  const FieldSpec& field = f.field();
  if (!field.is_finite()) fail(ErrorCode::UnsupportedField, field.to_string() + " is not finite");
  const std::uint64_t q = field.size();
  const std::size_t n = f.n_vars();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > search_bound / q) {
      fail(ErrorCode::SearchSpaceTooLarge, std::to_string(q) + "^" + std::to_string(n) + " exceeds search bound " +
                                               std::to_string(search_bound));
    }
    space *= q;
  }
  // Representatives (0, ..., 0, 1, *, ..., *) with the last coordinate varying fastest.
  for (std::size_t lead = 0; lead < n; ++lead) {
    Vector v = zero_vector(field, n);
    v[lead] = FieldElement::one(field);
    std::vector<std::uint64_t> digits(n, 0);
    while (true) {
      if (f(v).is_zero()) return v;
      std::size_t pos = n;
      while (pos > lead + 1) {
        --pos;
        if (++digits[pos] < q) {
          v[pos] = FieldElement::from_index(field, digits[pos]);
          break;
        }
        digits[pos] = 0;
        v[pos] = FieldElement::zero(field);
      }
      if (pos <= lead + 1 && (lead + 1 >= n || digits[lead + 1] == 0)) break;
    }
  }
  return std::nullopt;
}

}  // namespace isoform
