#include <doctest.h>

#include <random>

#include "isoform/field.hpp"
#include "oracles.hpp"

using namespace isoform;

namespace {

const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec F9 = FieldSpec::prime_square(3);
const FieldSpec Q = FieldSpec::rationals();

std::vector<FieldSpec> all_kinds() {
  return {FieldSpec::prime(7), FieldSpec::prime_square(5), FieldSpec::rationals(), FieldSpec::quadratic(-1),
          FieldSpec::quadratic(5)};
}

}  // namespace

TEST_CASE("field specs parse, print and validate") {
  CHECK(FieldSpec::parse("Fp:7") == F7);
  CHECK(FieldSpec::parse("Fp2:3").s() == 2);
  CHECK(FieldSpec::parse("Fp2:7").s() == 3);
  CHECK(FieldSpec::parse("Fp2:17").s() == 3);
  CHECK(FieldSpec::parse("Q").kind() == FieldKind::Rationals);
  CHECK(FieldSpec::parse("Qsqrt:-1").d() == -1);
  for (const char* text : {"Fp:7", "Fp2:3", "Q", "Qsqrt:5", "Qsqrt:-15"}) {
    CHECK(FieldSpec::parse(text).to_string() == text);
  }
  for (const char* bad : {"Fp:2", "Fp:9", "Fp:1", "Fp:x", "Qsqrt:1", "Qsqrt:0", "Qsqrt:12", "Qsqrt:-4", "R", "Fp3:5",
                          "Fp:4294967311"}) {
    CHECK_THROWS_AS(FieldSpec::parse(bad), Error);
  }
}

TEST_CASE("conj on each field kind") {
  CHECK(conj(parse_element(F9, "1+2*u")) == parse_element(F9, "1+u"));
  CHECK(conj(parse_element(Q, "3/4")) == parse_element(Q, "3/4"));
  CHECK(conj(parse_element(F7, "5")) == parse_element(F7, "5"));
  const FieldSpec q5 = FieldSpec::quadratic(5);
  CHECK(conj(parse_element(q5, "1/2+3*r")) == parse_element(q5, "1/2-3*r"));

  // u * conj(u) = u * (-u) = -s; schoolbook product (0,1)(0,2) with s = 2, p = 3.
  const auto expected = oracle::fp2_mul(3, 2, {0, 1}, {0, 2});
  const FieldElement u = FieldElement::generator(F9);
  const FieldElement product = conj(u) * u;
  CHECK(product.residue_a() == expected.first);
  CHECK(product.residue_b() == expected.second);
  CHECK(product == FieldElement(F9, 1));
}

TEST_CASE("is_fixed") {
  CHECK(is_fixed(FieldElement(F9, 2)));
  CHECK_FALSE(is_fixed(FieldElement::generator(F9)));
  CHECK_FALSE(is_fixed(parse_element(FieldSpec::quadratic(-1), "0+1*r")));
  CHECK(is_fixed(parse_element(Q, "-7/3")));
}

TEST_CASE("field operations") {
  CHECK(inverse(FieldElement(F7, 3)) == FieldElement(F7, 5));
  const auto expected = oracle::fp2_mul(3, 2, {1, 1}, {1, 2});
  const FieldElement prod = parse_element(F9, "1+u") * parse_element(F9, "1+2*u");
  CHECK(prod.residue_a() == expected.first);
  CHECK(prod.residue_b() == expected.second);
  CHECK(prod == FieldElement(F9, 2));
  CHECK(parse_element(Q, "1/2") + parse_element(Q, "1/3") == parse_element(Q, "5/6"));
  CHECK_THROWS_AS(inverse(FieldElement::zero(F7)), Error);
  CHECK_THROWS_AS(FieldElement(F7, 1) / FieldElement(F7, 0), Error);
  CHECK(pow(FieldElement(F7, 3), -1) == FieldElement(F7, 5));
  CHECK(pow(FieldElement(F7, 3), 6) == FieldElement(F7, 1));
  CHECK(pow(parse_element(Q, "2/3"), -2) == parse_element(Q, "9/4"));
  const FieldSpec q5 = FieldSpec::quadratic(5);
  CHECK(inverse(parse_element(q5, "1+r")) == parse_element(q5, "-1/4+1/4*r"));
}

TEST_CASE("mixing fields raises FieldMismatch") {
  try {
    (void)(FieldElement(F7, 1) + FieldElement(FieldSpec::prime(5), 1));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK_FALSE(FieldElement(F7, 1) == FieldElement(FieldSpec::prime_square(7), 1));
}

TEST_CASE("element parsing and printing") {
  CHECK(parse_element(F9, "1+2*u") == FieldElement::finite(F9, 1, 2));
  CHECK(parse_element(Q, "-3/6") == FieldElement::rational(Q, Rational(-1, 2)));
  const FieldSpec q5 = FieldSpec::quadratic(5);
  CHECK(parse_element(q5, "1/2+3*r") == FieldElement::rational(q5, Rational(1, 2), 3));
  CHECK(parse_element(F9, " 1 + 2 * u ") == FieldElement::finite(F9, 1, 2));
  CHECK(parse_element(F9, "1+-1*u") == FieldElement::finite(F9, 1, 2));
  CHECK(parse_element(F9, "-u") == FieldElement::finite(F9, 0, 2));
  CHECK(parse_element(F7, "-1") == FieldElement(F7, 6));
  CHECK(parse_element(F7, "1/2") == FieldElement(F7, 4));
  CHECK(parse_element(F7, "100") == FieldElement(F7, 2));

  CHECK(FieldElement::finite(F9, 1, 2).to_string() == "1+2*u");
  CHECK(FieldElement::finite(F9, 1, 1).to_string() == "1+u");
  CHECK(FieldElement::finite(F9, 0, 2).to_string() == "2*u");
  CHECK(parse_element(q5, "-1/2-r").to_string() == "-1/2-r");
  CHECK(parse_element(q5, "-3/2*r").to_string() == "-3/2*r");

  struct Bad {
    FieldSpec field;
    const char* text;
    std::size_t position;
  };
  for (const auto& bad : {Bad{F9, "", 0}, Bad{F9, "1+", 2}, Bad{F9, "1+2*v", 4}, Bad{F7, "u", 0}, Bad{Q, "1/0", 2},
                          Bad{F9, "u+1", 1}, Bad{F9, "1+2", 3}}) {
    CAPTURE(bad.text);
    try {
      (void)parse_element(bad.field, bad.text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == bad.position);
    }
  }
}

TEST_CASE("property: parse(print(x)) == x on every field kind") {
  std::mt19937_64 rng(11);
  for (const auto& field : all_kinds()) {
    for (int k = 0; k < 300; ++k) {
      const FieldElement x = sample_element(field, rng);
      CAPTURE(x.to_string());
      CHECK(parse_element(field, x.to_string()) == x);
    }
  }
}

TEST_CASE("property: conj is an involutive field automorphism") {
  std::mt19937_64 rng(7);
  for (const auto& field : all_kinds()) {
    CAPTURE(field.to_string());
    for (int k = 0; k < 300; ++k) {
      const FieldElement x = sample_element(field, rng);
      const FieldElement y = sample_element(field, rng);
      CHECK(conj(x + y) == conj(x) + conj(y));
      CHECK(conj(x * y) == conj(x) * conj(y));
      CHECK(conj(conj(x)) == x);
      CHECK(is_fixed(x * conj(x)));
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("conj equals the Frobenius on F_{p^2}") {
  for (std::uint64_t p : {3, 5, 7}) {
    const FieldSpec field = FieldSpec::prime_square(p);
    for (std::uint64_t i = 0; i < field.size(); ++i) {
      const FieldElement x = FieldElement::from_index(field, i);
      CHECK(conj(x) == pow(x, static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("property: the fixed set is closed under the field operations") {
  std::mt19937_64 rng(3);
  for (const auto& field : all_kinds()) {
    for (int k = 0; k < 200; ++k) {
      FieldElement x = sample_element(field, rng);
      FieldElement y = sample_element(field, rng);
      x = x * conj(x);
      y = y + conj(y);
      CHECK(is_fixed(x + y));
      CHECK(is_fixed(x - y));
      CHECK(is_fixed(x * y));
      CHECK(is_fixed(-x));
      if (!y.is_zero()) CHECK(is_fixed(x / y));
    }
  }
}

TEST_CASE("characteristic") {
  for (const auto& field : {FieldSpec::prime(7), FieldSpec::prime_square(5)}) {
    FieldElement sum = FieldElement::zero(field);
    for (std::uint64_t k = 0; k < field.p(); ++k) {
      CHECK((k == 0 || !sum.is_zero()));
      sum += FieldElement::one(field);
    }
    CHECK(sum.is_zero());
  }
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::quadratic(-1)}) {
    FieldElement sum = FieldElement::zero(field);
    for (int k = 0; k < 1000; ++k) {
      sum += FieldElement::one(field);
      CHECK_FALSE(sum.is_zero());
    }
  }
}

TEST_CASE("element enumeration of finite fields is a bijection") {
  const FieldSpec f25 = FieldSpec::prime_square(5);
  for (std::uint64_t i = 0; i < f25.size(); ++i) CHECK(FieldElement::from_index(f25, i).index() == i);
  CHECK_THROWS_AS(FieldElement::from_index(f25, 25), Error);
}
