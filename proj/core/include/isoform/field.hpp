#pragma once

// Exact arithmetic for the supported fields with involution:
//
//   Fp:<p>      F_p, identity involution
//   Fp2:<p>     F_{p^2} = F_p[u]/(u^2 - s), s the smallest non-residue mod p,
//               involution a + b*u -> a - b*u (the Frobenius x -> x^p)
//   Q           rationals, identity involution
//   Qsqrt:<d>   Q(sqrt d), involution a + b*r -> a - b*r with r^2 = d
//
// Characteristic 2 is not supported. Elements of different fields never mix;
// doing so raises FieldMismatch.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "isoform/error.hpp"

namespace isoform {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { PrimeField, QuadraticExtOfPrime, Rationals, QuadraticNumberField };

inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

class FieldSpec {
 public:
  /// Default is Q.
  FieldSpec() = default;

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec prime_square(std::uint64_t p);
  static FieldSpec rationals();
  static FieldSpec quadratic(std::int64_t d);

  /// Parses "Fp:<p>", "Fp2:<p>", "Q" or "Qsqrt:<d>". Throws InvalidFieldSpec.
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t p() const noexcept { return p_; }
  /// Non-residue defining u^2 = s (Fp2 only).
  std::uint64_t s() const noexcept { return s_; }
  /// Radicand of Qsqrt.
  std::int64_t d() const noexcept { return d_; }

  bool is_finite() const noexcept {
    return kind_ == FieldKind::PrimeField || kind_ == FieldKind::QuadraticExtOfPrime;
  }
  bool is_quadratic() const noexcept {
    return kind_ == FieldKind::QuadraticExtOfPrime || kind_ == FieldKind::QuadraticNumberField;
  }
  bool has_identity_involution() const noexcept { return !is_quadratic(); }

  /// 0 for the characteristic-zero fields.
  std::uint64_t characteristic() const noexcept { return is_finite() ? p_ : 0; }
  /// Number of elements; finite fields only.
  std::uint64_t size() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
  std::uint64_t s_ = 0;
  std::int64_t d_ = 0;
};

class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : FieldElement(FieldSpec{}, 0) {}
  /// Image of an integer under Z -> k.
  FieldElement(const FieldSpec& field, std::int64_t value);

  static FieldElement zero(const FieldSpec& field) { return {field, 0}; }
  static FieldElement one(const FieldSpec& field) { return {field, 1}; }
  /// a + b*u for Fp2 (b must be 0 for Fp). Components are reduced mod p.
  static FieldElement finite(const FieldSpec& field, std::uint64_t a, std::uint64_t b = 0);
  /// a + b*r for Qsqrt (b must be 0 for Q).
  static FieldElement rational(const FieldSpec& field, const Rational& a, const Rational& b = 0);
  /// The fixed generator of a quadratic field over its fixed subfield: u or r.
  static FieldElement generator(const FieldSpec& field);
  /// Enumeration of a finite field: index a + b*p maps to a + b*u.
  static FieldElement from_index(const FieldSpec& field, std::uint64_t index);

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Finite components. Precondition: field().is_finite().
  std::uint64_t residue_a() const { return std::get<Finite>(rep_).a; }
  std::uint64_t residue_b() const { return std::get<Finite>(rep_).b; }
  /// Rational components. Precondition: !field().is_finite().
  const Rational& rational_a() const { return std::get<RationalPair>(rep_).a; }
  const Rational& rational_b() const { return std::get<RationalPair>(rep_).b; }

  /// Inverse of from_index.
  std::uint64_t index() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  struct Finite {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    friend bool operator==(const Finite&, const Finite&) = default;
  };
  struct RationalPair {
    Rational a;
    Rational b;
    friend bool operator==(const RationalPair&, const RationalPair&) = default;
  };

  FieldElement(const FieldSpec& field, Finite rep) : field_(field), rep_(rep) {}
  FieldElement(const FieldSpec& field, RationalPair rep) : field_(field), rep_(std::move(rep)) {}

  void check_same_field(const FieldElement& other) const;

  FieldSpec field_;
  std::variant<Finite, RationalPair> rep_;

  friend FieldElement conj(const FieldElement& x);
  friend FieldElement inverse(const FieldElement& x);
};

/// The involution.
FieldElement conj(const FieldElement& x);
/// True iff conj(x) == x, i.e. x lies in the fixed subfield k0.
bool is_fixed(const FieldElement& x);
/// Throws DivisionByZero on zero.
FieldElement inverse(const FieldElement& x);
/// Negative exponents invert first.
FieldElement pow(const FieldElement& x, std::int64_t exponent);

/// Parses an element literal: integer, "n/d", "a+b*u" (Fp2), "a+b*r" (Qsqrt).
/// Whitespace is ignored. Throws ParseError with the offending offset.
FieldElement parse_element(const FieldSpec& field, std::string_view text);

/// Uniform over a finite field; components with numerators and denominators
/// bounded by `height` for Q and Qsqrt.
FieldElement sample_element(const FieldSpec& field, std::mt19937_64& rng, std::int64_t height = 9);

/// p is prime (trial division; p < 2^63).
bool is_prime(std::uint64_t p);
/// Legendre symbol test via Euler's criterion; a is reduced mod p.
bool is_quadratic_residue(std::uint64_t a, std::uint64_t p);
/// Modular exponentiation with p < 2^32.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);

}  // namespace isoform

template <>
struct std::hash<isoform::FieldElement> {
  std::size_t operator()(const isoform::FieldElement& x) const { return x.hash(); }
};
