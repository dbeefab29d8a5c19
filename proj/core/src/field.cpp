#include "isoform/field.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace isoform {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidFieldSpec: return "InvalidFieldSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::NormNotRepresented: return "NormNotRepresented";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NoSolutionFound: return "NoSolutionFound";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::CharacteristicDividesOrder: return "CharacteristicDividesOrder";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NoIsotropicVector: return "NoIsotropicVector";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Number theory helpers

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t f = 3; f * f <= p; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return result;
}

bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return true;
  return pow_mod(a, (p - 1) / 2, p) == 1;
}

namespace {

bool is_squarefree(std::int64_t d) {
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % (f * f) == 0) return false;
    while (m % f == 0) m /= f;
  }
  return true;
}

template <class Int>
std::optional<Int> parse_int(std::string_view text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 3 || p > kMaxPrime || !is_prime(p)) {
    fail(ErrorCode::InvalidFieldSpec, "p = " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  FieldSpec spec;
  spec.kind_ = FieldKind::PrimeField;
  spec.p_ = p;
  return spec;
}

FieldSpec FieldSpec::prime_square(std::uint64_t p) {
  FieldSpec spec = prime(p);
  spec.kind_ = FieldKind::QuadraticExtOfPrime;
  std::uint64_t s = 2;
  while (is_quadratic_residue(s, p)) ++s;
  spec.s_ = s;
  return spec;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) fail(ErrorCode::InvalidFieldSpec, "d must not be 0 or 1");
  if (d > std::numeric_limits<std::int32_t>::max() || d < std::numeric_limits<std::int32_t>::min()) {
    fail(ErrorCode::InvalidFieldSpec, "d = " + std::to_string(d) + " out of 32-bit range");
  }
  if (!is_squarefree(d)) fail(ErrorCode::InvalidFieldSpec, "d = " + std::to_string(d) + " is not squarefree");
  FieldSpec spec;
  spec.kind_ = FieldKind::QuadraticNumberField;
  spec.d_ = d;
  return spec;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::InvalidFieldSpec, "unknown field '" + std::string(text) + "'");
  auto head = text.substr(0, colon);
  auto tail = text.substr(colon + 1);
  if (head == "Fp" || head == "Fp2") {
    auto p = parse_int<std::uint64_t>(tail);
    if (!p) fail(ErrorCode::InvalidFieldSpec, "bad prime '" + std::string(tail) + "'");
    return head == "Fp" ? prime(*p) : prime_square(*p);
  }
  if (head == "Qsqrt") {
    auto d = parse_int<std::int64_t>(tail);
    if (!d) fail(ErrorCode::InvalidFieldSpec, "bad radicand '" + std::string(tail) + "'");
    return quadratic(*d);
  }
  fail(ErrorCode::InvalidFieldSpec, "unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::PrimeField: return "Fp:" + std::to_string(p_);
    case FieldKind::QuadraticExtOfPrime: return "Fp2:" + std::to_string(p_);
    case FieldKind::Rationals: return "Q";
    case FieldKind::QuadraticNumberField: return "Qsqrt:" + std::to_string(d_);
  }
  return {};
}

std::uint64_t FieldSpec::size() const {
  switch (kind_) {
    case FieldKind::PrimeField: return p_;
    case FieldKind::QuadraticExtOfPrime: return p_ * p_;
    default: fail(ErrorCode::UnsupportedField, to_string() + " is infinite");
  }
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

std::uint64_t reduce_signed(std::int64_t value, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  auto r = value % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace

FieldElement::FieldElement(const FieldSpec& field, std::int64_t value)
    : field_(field),
      rep_(field.is_finite() ? decltype(rep_)(Finite{reduce_signed(value, field.p()), 0})
                             : decltype(rep_)(RationalPair{Rational(value), Rational(0)})) {}

FieldElement FieldElement::finite(const FieldSpec& field, std::uint64_t a, std::uint64_t b) {
  if (!field.is_finite()) fail(ErrorCode::FieldMismatch, field.to_string() + " is not finite");
  b %= field.p();
  if (b != 0 && field.kind() == FieldKind::PrimeField) {
    fail(ErrorCode::FieldMismatch, "Fp element with a u-component");
  }
  return {field, Finite{a % field.p(), b}};
}

FieldElement FieldElement::rational(const FieldSpec& field, const Rational& a, const Rational& b) {
  if (field.is_finite()) fail(ErrorCode::FieldMismatch, field.to_string() + " is finite");
  if (b != 0 && field.kind() == FieldKind::Rationals) {
    fail(ErrorCode::FieldMismatch, "Q element with an r-component");
  }
  return {field, RationalPair{a, b}};
}

FieldElement FieldElement::generator(const FieldSpec& field) {
  switch (field.kind()) {
    case FieldKind::QuadraticExtOfPrime: return finite(field, 0, 1);
    case FieldKind::QuadraticNumberField: return rational(field, 0, 1);
    default: fail(ErrorCode::UnsupportedField, field.to_string() + " has the identity involution");
  }
}

FieldElement FieldElement::from_index(const FieldSpec& field, std::uint64_t index) {
  if (index >= field.size()) fail(ErrorCode::PreconditionViolated, "element index out of range");
  return {field, Finite{index % field.p(), index / field.p()}};
}

std::uint64_t FieldElement::index() const {
  const auto& f = std::get<Finite>(rep_);
  return f.a + f.b * field_.p();
}

bool FieldElement::is_zero() const {
  if (const auto* f = std::get_if<Finite>(&rep_)) return f->a == 0 && f->b == 0;
  const auto& r = std::get<RationalPair>(rep_);
  return r.a == 0 && r.b == 0;
}

bool FieldElement::is_one() const {
  if (const auto* f = std::get_if<Finite>(&rep_)) return f->a == 1 && f->b == 0;
  const auto& r = std::get<RationalPair>(rep_);
  return r.a == 1 && r.b == 0;
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    fail(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (auto* f = std::get_if<Finite>(&rep_)) {
    const auto& g = std::get<Finite>(rhs.rep_);
    const auto p = field_.p();
    f->a = (f->a + g.a) % p;
    f->b = (f->b + g.b) % p;
  } else {
    auto& r = std::get<RationalPair>(rep_);
    const auto& q = std::get<RationalPair>(rhs.rep_);
    r.a += q.a;
    r.b += q.b;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (auto* f = std::get_if<Finite>(&out.rep_)) {
    const auto p = field_.p();
    f->a = (p - f->a) % p;
    f->b = (p - f->b) % p;
  } else {
    auto& r = std::get<RationalPair>(out.rep_);
    r.a = -r.a;
    r.b = -r.b;
  }
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (auto* f = std::get_if<Finite>(&rep_)) {
    const auto& g = std::get<Finite>(rhs.rep_);
    const auto p = field_.p();
    // (a + b u)(c + d u) = (ac + s bd) + (ad + bc) u, all products < 2^62.
    const std::uint64_t a = (f->a * g.a + field_.s() * (f->b * g.b % p)) % p;
    const std::uint64_t b = (f->a * g.b % p + f->b * g.a % p) % p;
    f->a = a;
    f->b = b;
  } else {
    auto& r = std::get<RationalPair>(rep_);
    const auto& q = std::get<RationalPair>(rhs.rep_);
    if (r.b == 0 && q.b == 0) {
      r.a *= q.a;
    } else {
      Rational a = r.a * q.a + Rational(field_.d()) * r.b * q.b;
      Rational b = r.a * q.b + r.b * q.a;
      r.a = std::move(a);
      r.b = std::move(b);
    }
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs);
  return *this *= inverse(rhs);
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.field_ == y.field_ && x.rep_ == y.rep_;
}

FieldElement conj(const FieldElement& x) {
  if (x.field_.has_identity_involution()) return x;
  FieldElement out = x;
  if (auto* f = std::get_if<FieldElement::Finite>(&out.rep_)) {
    f->b = (x.field_.p() - f->b) % x.field_.p();
  } else {
    auto& r = std::get<FieldElement::RationalPair>(out.rep_);
    r.b = -r.b;
  }
  return out;
}

bool is_fixed(const FieldElement& x) { return conj(x) == x; }

FieldElement inverse(const FieldElement& x) {
  if (x.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + x.field_.to_string());
  const auto& field = x.field_;
  if (const auto* f = std::get_if<FieldElement::Finite>(&x.rep_)) {
    const auto p = field.p();
    // 1/(a + b u) = (a - b u) / (a^2 - s b^2); the denominator lies in F_p^*.
    const std::uint64_t norm = (f->a * f->a % p + (p - field.s() * (f->b * f->b % p) % p)) % p;
    const std::uint64_t inv = pow_mod(norm, p - 2, p);
    return {field, FieldElement::Finite{f->a * inv % p, (p - f->b) % p * inv % p}};
  }
  const auto& r = std::get<FieldElement::RationalPair>(x.rep_);
  if (r.b == 0) return {field, FieldElement::RationalPair{1 / r.a, 0}};
  Rational norm = r.a * r.a - Rational(field.d()) * r.b * r.b;
  return {field, FieldElement::RationalPair{r.a / norm, -r.b / norm}};
}

FieldElement pow(const FieldElement& x, std::int64_t exponent) {
  FieldElement base = exponent < 0 ? inverse(x) : x;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1 : static_cast<std::uint64_t>(exponent);
  FieldElement result = FieldElement::one(x.field());
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::size_t FieldElement::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(field_.p() ^ (static_cast<std::uint64_t>(field_.d()) << 1));
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (const auto* f = std::get_if<Finite>(&rep_)) {
    mix(f->a);
    mix(f->b);
  } else {
    const auto& r = std::get<RationalPair>(rep_);
    mix(boost::multiprecision::hash_value(r.a));
    mix(boost::multiprecision::hash_value(r.b));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

std::string rational_to_string(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  if (boost::multiprecision::denominator(q) != 1) out += "/" + boost::multiprecision::denominator(q).str();
  return out;
}

char generator_symbol(const FieldSpec& field) {
  return field.kind() == FieldKind::QuadraticExtOfPrime ? 'u' : 'r';
}

}  // namespace

std::string FieldElement::to_string() const {
  const std::string sym(1, generator_symbol(field_));
  if (const auto* f = std::get_if<Finite>(&rep_)) {
    if (f->b == 0) return std::to_string(f->a);
    const std::string b = f->b == 1 ? sym : std::to_string(f->b) + "*" + sym;
    if (f->a == 0) return b;
    return std::to_string(f->a) + "+" + b;
  }
  const auto& r = std::get<RationalPair>(rep_);
  if (r.b == 0) return rational_to_string(r.a);
  const Rational magnitude = r.b < 0 ? Rational(-r.b) : r.b;
  const std::string b = magnitude == 1 ? sym : rational_to_string(magnitude) + "*" + sym;
  const char* sign = r.b < 0 ? "-" : "+";
  if (r.a == 0) return (r.b < 0 ? "-" : "") + b;
  return rational_to_string(r.a) + sign + b;
}

namespace {

// Recursive-descent parser over the whitespace-stripped literal; positions are
// mapped back to the original text for error reporting.
class ElementParser {
 public:
  ElementParser(const FieldSpec& field, std::string_view text) : field_(field) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
    end_offset_ = text.size();
  }

  FieldElement parse() {
    if (chars_.empty()) error("empty element literal");
    Term first = term();
    FieldElement value = first.value;
    if (pos_ < chars_.size()) {
      const char sign = chars_[pos_];
      if (sign != '+' && sign != '-') error("expected '+' or '-'");
      if (first.has_generator) error("generator term must come last");
      ++pos_;
      Term second = term(sign == '-');
      if (!second.has_generator) error("second term must carry the generator");
      value += second.value;
    }
    if (pos_ != chars_.size()) error("trailing characters");
    return value;
  }

 private:
  struct Term {
    FieldElement value;
    bool has_generator = false;
  };

  [[noreturn]] void error(const std::string& what) const {
    const std::size_t at = pos_ < offsets_.size() ? offsets_[pos_] : end_offset_;
    throw ParseError(at, what);
  }

  bool peek(char c) const { return pos_ < chars_.size() && chars_[pos_] == c; }

  bool generator_allowed() const { return field_.is_quadratic(); }

  Term term(bool negate = false) {
    if (peek('-')) {
      negate = !negate;
      ++pos_;
    }
    const char sym = generator_symbol(field_);
    Term t{FieldElement::zero(field_), false};
    if (peek(sym) && generator_allowed()) {
      ++pos_;
      t = {FieldElement::generator(field_), true};
    } else {
      t.value = number();
      if (peek('*')) {
        ++pos_;
        if (!(peek(sym) && generator_allowed())) error("expected generator symbol");
        ++pos_;
        t.value *= FieldElement::generator(field_);
        t.has_generator = true;
      }
    }
    if (negate) t.value = -t.value;
    return t;
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) ++pos_;
    if (pos_ == start) error("expected digits");
    return BigInt(std::string(chars_.begin() + static_cast<std::ptrdiff_t>(start),
                              chars_.begin() + static_cast<std::ptrdiff_t>(pos_)));
  }

  FieldElement from_integer(const BigInt& n) const {
    if (field_.is_finite()) {
      return FieldElement::finite(field_, static_cast<std::uint64_t>(n % field_.p()));
    }
    return FieldElement::rational(field_, Rational(n));
  }

  FieldElement number() {
    FieldElement value = from_integer(digits());
    if (peek('/')) {
      ++pos_;
      const std::size_t den_at = pos_;
      FieldElement den = from_integer(digits());
      if (den.is_zero()) {
        pos_ = den_at;
        error("zero denominator");
      }
      value /= den;
    }
    return value;
  }

  const FieldSpec& field_;
  std::string chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(const FieldSpec& field, std::string_view text) {
  return ElementParser(field, text).parse();
}

FieldElement sample_element(const FieldSpec& field, std::mt19937_64& rng, std::int64_t height) {
  if (field.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.size() - 1);
    return FieldElement::from_index(field, dist(rng));
  }
  std::uniform_int_distribution<std::int64_t> num(-height, height);
  std::uniform_int_distribution<std::int64_t> den(1, height);
  auto component = [&] { return Rational(num(rng), den(rng)); };
  Rational a = component();
  Rational b = field.kind() == FieldKind::QuadraticNumberField ? component() : Rational(0);
  return FieldElement::rational(field, a, b);
}

}  // namespace isoform
