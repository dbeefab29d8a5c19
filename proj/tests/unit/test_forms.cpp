#include <doctest.h>

#include <random>

#include "isoform/forms.hpp"
#include "oracles.hpp"

using namespace isoform;

namespace {

const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec F9 = FieldSpec::prime_square(3);
const FieldSpec Q = FieldSpec::rationals();

HermitianForm diag(const FieldSpec& field, std::initializer_list<std::int64_t> entries) {
  Vector v;
  for (auto e : entries) v.push_back(FieldElement(field, e));
  return HermitianForm::diagonal(field, v);
}

Vector vec(const FieldSpec& field, std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* e : entries) v.push_back(parse_element(field, e));
  return v;
}

void check_diagonalization(const HermitianForm& form) {
  const DiagonalizationResult r = diagonalize(form);
  const Matrix congruent = oracle::congruence(form.gram(), r.basis_change);
  CHECK(congruent.is_diagonal());
  CHECK(congruent.diagonal_entries() == r.diagonal);
  CHECK_FALSE(r.basis_change.determinant().is_zero());
  for (const auto& x : r.diagonal) CHECK(is_fixed(x));
}

}  // namespace

TEST_CASE("construction validates the Gram matrix") {
  CHECK_THROWS_AS(HermitianForm(Matrix(F7, 2, 3)), Error);
  try {
    HermitianForm(Matrix::parse_rows(F9, {{"1", "u"}, {"u", "1"}}));
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(HermitianForm(Matrix::parse_rows(F9, {{"u"}})), Error);
  CHECK_NOTHROW(HermitianForm(Matrix::parse_rows(F9, {{"1", "u"}, {"2*u", "1"}})));
  CHECK_THROWS_AS(HermitianForm(Matrix::parse_rows(F7, {{"1", "2"}, {"3", "1"}})), Error);
}

TEST_CASE("evaluate") {
  const HermitianForm f9 = diag(F9, {1, 1});
  const Vector v = vec(F9, {"1+u", "1"});
  CHECK(evaluate(f9, v, v) == oracle::pairing(f9.gram(), v, v));
  CHECK(evaluate(f9, v, v).is_zero());
  CHECK(evaluate(f9, zero_vector(F9, 2), v).is_zero());

  const HermitianForm hyperbolic(Matrix::parse_rows(F7, {{"0", "1"}, {"1", "0"}}));
  const Vector ones = vec(F7, {"1", "1"});
  CHECK(evaluate(hyperbolic, ones, ones) == FieldElement(F7, 2));
  CHECK(evaluate(hyperbolic, ones, ones) == oracle::pairing(hyperbolic.gram(), ones, ones));
  CHECK_THROWS_AS(evaluate(hyperbolic, vec(F7, {"1"}), ones), Error);
}

TEST_CASE("is_isotropic") {
  CHECK(is_isotropic(diag(F9, {1, 1}), vec(F9, {"1+u", "1"})));
  CHECK(is_isotropic(diag(F7, {1, 3}), zero_vector(F7, 2)));
  CHECK_FALSE(is_isotropic(diag(Q, {1}), vec(Q, {"1"})));
}

TEST_CASE("radical") {
  const Subspace r = radical(diag(F7, {1, 0}));
  CHECK(r.dim() == 1);
  CHECK(r.contains(unit_vector(F7, 2, 1)));
  CHECK(radical(diag(Q, {1, 1})).dim() == 0);
  CHECK(radical(HermitianForm::zero(F7, 2)).dim() == 2);
}

TEST_CASE("non_isotropic_vector") {
  const HermitianForm hyperbolic(Matrix::parse_rows(F7, {{"0", "1"}, {"1", "0"}}));
  const auto v = non_isotropic_vector(hyperbolic);
  REQUIRE(v);
  CHECK(*v == vec(F7, {"1", "1"}));
  CHECK(evaluate(hyperbolic, *v, *v) == FieldElement(F7, 2));

  CHECK(non_isotropic_vector(diag(Q, {3, 0})) == unit_vector(Q, 2, 0));
  CHECK_FALSE(non_isotropic_vector(HermitianForm::zero(F9, 3)));

  // a + conj(a) = 0 forces the generator branch.
  const HermitianForm skew(Matrix::parse_rows(F9, {{"0", "u"}, {"2*u", "0"}}));
  const auto w = non_isotropic_vector(skew);
  REQUIRE(w);
  CHECK_FALSE(evaluate(skew, *w, *w).is_zero());
}

TEST_CASE("non_isotropic_vector over every Hermitian 2x2 Gram matrix of F_9") {
  const auto fixed = oracle::fixed_elements(F9);
  REQUIRE(fixed.size() == 3);
  int total = 0;
  for (const auto& a : fixed) {
    for (const auto& d : fixed) {
      for (std::uint64_t i = 0; i < F9.size(); ++i) {
        const FieldElement b = FieldElement::from_index(F9, i);
        Matrix g(F9, 2, 2);
        g(0, 0) = a;
        g(1, 1) = d;
        g(0, 1) = b;
        g(1, 0) = conj(b);
        const HermitianForm form(g);
        const auto v = non_isotropic_vector(form);
        CHECK(v.has_value() == !g.is_zero());
        if (v) CHECK_FALSE(oracle::pairing(g, *v, *v).is_zero());
        ++total;
      }
    }
  }
  CHECK(total == 81);
}

TEST_CASE("diagonalize examples") {
  const DiagonalizationResult r = diagonalize(diag(F7, {2, 3}));
  CHECK(r.basis_change == Matrix::identity(F7, 2));
  CHECK(r.diagonal == Vector{FieldElement(F7, 2), FieldElement(F7, 3)});

  check_diagonalization(HermitianForm(Matrix::parse_rows(F7, {{"0", "1"}, {"1", "0"}})));

  const DiagonalizationResult z = diagonalize(HermitianForm::zero(F7, 2));
  CHECK(z.basis_change == Matrix::identity(F7, 2));
  CHECK(z.diagonal == zero_vector(F7, 2));

  const DiagonalizationResult empty = diagonalize(HermitianForm::zero(Q, 0));
  CHECK(empty.diagonal.empty());
}

TEST_CASE("orthogonal_complement") {
  const Subspace c = orthogonal_complement(diag(F7, {1, 1}), Subspace::span(F7, 2, {unit_vector(F7, 2, 0)}));
  CHECK(c.dim() == 1);
  CHECK(c.contains(unit_vector(F7, 2, 1)));

  const HermitianForm f9 = diag(F9, {1, 1});
  const Subspace w = Subspace::span(F9, 2, {vec(F9, {"1+u", "1"})});
  const Subspace perp = orthogonal_complement(f9, w);
  CHECK(perp.contains(w));
  for (std::size_t i = 0; i < perp.dim(); ++i) {
    CHECK(oracle::pairing(f9.gram(), perp.basis_vector(i), w.basis_vector(0)).is_zero());
  }

  CHECK(orthogonal_complement(HermitianForm::zero(Q, 3), Subspace::span(Q, 3, {unit_vector(Q, 3, 1)})).dim() == 3);
}

TEST_CASE("restrict") {
  const HermitianForm f = diag(F7, {1, 2, 3});
  const Subspace w = Subspace::span(F7, 3, {unit_vector(F7, 3, 0), unit_vector(F7, 3, 2)});
  CHECK(restrict(f, w) == diag(F7, {1, 3}));

  const HermitianForm f9 = diag(F9, {1, 1});
  const HermitianForm line = restrict(f9, Subspace::span(F9, 2, {vec(F9, {"1+u", "1"})}));
  CHECK(line.dim() == 1);
  CHECK(line.is_zero());

  CHECK(restrict(f, Subspace::full(F7, 3)) == f);
}

TEST_CASE("Subspace rejects dependent bases") {
  CHECK_THROWS_AS(Subspace(Matrix::parse_rows(F7, {{"1", "2"}, {"1", "2"}})), Error);
  const Subspace s = Subspace::span(F7, 2, {vec(F7, {"1", "1"}), vec(F7, {"2", "2"}), vec(F7, {"0", "1"})});
  CHECK(s.dim() == 2);
}

TEST_CASE("property: sesquilinearity and Hermitian symmetry") {
  std::mt19937_64 rng(21);
  for (const auto& field : {F7, F9, Q, FieldSpec::quadratic(-1), FieldSpec::quadratic(5)}) {
    CAPTURE(field.to_string());
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const HermitianForm form(oracle::random_hermitian(field, n, rng));
      Vector v, w, u;
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back(sample_element(field, rng));
        w.push_back(sample_element(field, rng));
        u.push_back(sample_element(field, rng));
      }
      const FieldElement lambda = sample_element(field, rng);
      CHECK(evaluate(form, v, w) == oracle::pairing(form.gram(), v, w));
      CHECK(evaluate(form, v, w) == conj(evaluate(form, w, v)));
      CHECK(evaluate(form, scale(lambda, v), w) == lambda * evaluate(form, v, w));
      CHECK(evaluate(form, v, scale(lambda, w)) == conj(lambda) * evaluate(form, v, w));
      CHECK(evaluate(form, axpy(v, FieldElement::one(field), u), w) == evaluate(form, v, w) + evaluate(form, u, w));
      CHECK(is_fixed(evaluate(form, v, v)));
    }
  }
}

TEST_CASE("property: diagonalization contract and radical dimension") {
  std::mt19937_64 rng(8);
  for (const auto& field : {F7, F9, FieldSpec::prime_square(5), Q, FieldSpec::quadratic(-1), FieldSpec::quadratic(5)}) {
    CAPTURE(field.to_string());
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      Matrix g = oracle::random_hermitian(field, n, rng);
      if (trial % 4 == 0 && n > 1) {
        // Force a degenerate form by making the last row/column a copy of the first.
        for (std::size_t i = 0; i < n; ++i) {
          g(n - 1, i) = g(0, i);
          g(i, n - 1) = g(i, 0);
        }
        g(n - 1, n - 1) = g(0, 0);
      }
      const HermitianForm form(g);
      check_diagonalization(form);
      const Subspace rad = radical(form);
      CHECK(rad.dim() + g.rank() == n);
      for (std::size_t j = 0; j < rad.dim(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(oracle::pairing(g, rad.basis_vector(j), unit_vector(field, n, i)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("property: dim W + dim W^perp >= n and equality for nondegenerate forms") {
  std::mt19937_64 rng(4);
  for (const auto& field : {F9, Q}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + rng() % 3;
      const HermitianForm form(oracle::random_hermitian(field, n, rng));
      std::vector<Vector> gens;
      for (std::size_t k = 0; k < 1 + rng() % (n - 1); ++k) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(sample_element(field, rng));
        gens.push_back(v);
      }
      const Subspace w = Subspace::span(field, n, gens);
      const Subspace perp = orthogonal_complement(form, w);
      CHECK(w.dim() + perp.dim() >= n);
      if (radical(form).dim() == 0) CHECK(w.dim() + perp.dim() == n);
      for (std::size_t a = 0; a < perp.dim(); ++a) {
        for (std::size_t b = 0; b < w.dim(); ++b) {
          CHECK(oracle::pairing(form.gram(), perp.basis_vector(a), w.basis_vector(b)).is_zero());
        }
      }
    }
  }
}
