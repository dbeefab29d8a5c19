#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoform {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  InvalidFieldSpec,
  ParseError,
  NotHermitian,
  SingularMatrix,
  NotFullRank,
  NormNotRepresented,
  PreconditionViolated,
  DimensionTooSmall,
  UnsupportedField,
  NotHomogeneous,
  SearchSpaceTooLarge,
  NoSolutionFound,
  NotFound,
  SingularGenerator,
  GroupTooLarge,
  CharacteristicDividesOrder,
  NotInvariant,
  NoIsotropicVector,
  InternalInvariant,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Parse failure with the byte offset where the input stopped making sense.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : Error(ErrorCode::ParseError, detail + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace isoform
