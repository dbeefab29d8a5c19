#pragma once

// Line-oriented text formats.
//
// Matrix:
//   field <fieldspec>
//   dim <n>            (or "dim <n> <m>" for n x m)
//   <n rows of whitespace-separated element literals>
//
// Polynomial:
//   poly <fieldspec> <n_vars> <degree>
//   <coeff> : e1 e2 ... en        (one line per monomial)
//
// Representation:
//   rep <fieldspec> <n> <num_generators>
//   <num_generators matrix blocks, each n x n over the same field>
//   [<optional n x n matrix block: a seed form>]
//
// Lines whose first non-blank character is '#' are comments. Blank lines are
// skipped. Literals inside a row must not contain whitespace.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoform/isotropy.hpp"
#include "isoform/matrix.hpp"

namespace isoform {

Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

HomogeneousPoly parse_poly(std::string_view text);
std::string format_poly(const HomogeneousPoly& f);

struct RepresentationInput {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Matrix> generators;
  std::optional<Matrix> seed;
};

RepresentationInput parse_representation(std::string_view text);
std::string format_representation(const FieldSpec& field, std::size_t dim, const std::vector<Matrix>& generators);

/// Lines strictly between "begin <name>" and "end <name>"; throws ParseError if absent.
std::string extract_block(std::string_view text, std::string_view name);

}  // namespace isoform
