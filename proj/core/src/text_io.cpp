#include "isoform/text_io.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace isoform {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : end_(text.size()) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find('\n', start);
      if (stop == std::string_view::npos) stop = text.size();
      auto tokens = tokenize(text.substr(start, stop - start), start);
      if (!tokens.empty() && tokens.front().text.front() != '#') lines_.push_back({std::move(tokens), start});
      start = stop + 1;
    }
  }

  bool done() const { return next_ == lines_.size(); }

  const Line& peek() const {
    if (done()) throw ParseError(end_, "unexpected end of input");
    return lines_[next_];
  }

  const Line& take() {
    const Line& line = peek();
    ++next_;
    return line;
  }

  std::size_t end() const { return end_; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t end_;
};

template <class Int>
Int parse_count(const Token& token) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc{} || ptr != token.text.data() + token.text.size()) {
    throw ParseError(token.offset, "expected a non-negative integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

FieldSpec parse_field_token(const Token& token) {
  try {
    return FieldSpec::parse(token.text);
  } catch (const Error& e) {
    throw ParseError(token.offset, e.detail());
  }
}

FieldElement parse_element_token(const FieldSpec& field, const Token& token) {
  try {
    return parse_element(field, token.text);
  } catch (const ParseError& e) {
    throw ParseError(token.offset + e.position(), "bad element '" + std::string(token.text) + "'");
  } catch (const Error& e) {
    throw ParseError(token.offset, e.detail());
  }
}

void expect_keyword(const Line& line, std::string_view keyword, std::size_t arity) {
  if (line.tokens.front().text != keyword) {
    throw ParseError(line.offset, "expected '" + std::string(keyword) + "', got '" + std::string(line.tokens.front().text) + "'");
  }
  if (line.tokens.size() != arity + 1) {
    throw ParseError(line.offset, "'" + std::string(keyword) + "' takes " + std::to_string(arity) + " arguments");
  }
}

Matrix read_matrix(LineReader& reader) {
  const Line& header = reader.take();
  expect_keyword(header, "field", 1);
  const FieldSpec field = parse_field_token(header.tokens[1]);
  const Line& dims = reader.take();
  if (dims.tokens.front().text != "dim" || (dims.tokens.size() != 2 && dims.tokens.size() != 3)) {
    throw ParseError(dims.offset, "expected 'dim <n>' or 'dim <n> <m>'");
  }
  const auto rows = parse_count<std::size_t>(dims.tokens[1]);
  const auto cols = dims.tokens.size() == 3 ? parse_count<std::size_t>(dims.tokens[2]) : rows;
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& row = reader.take();
    if (row.tokens.size() != cols) {
      throw ParseError(row.offset, "row " + std::to_string(i) + " has " + std::to_string(row.tokens.size()) +
                                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_element_token(field, row.tokens[j]);
  }
  return m;
}

void expect_end(const LineReader& reader) {
  if (!reader.done()) throw ParseError(reader.peek().offset, "trailing content");
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  LineReader reader(text);
  Matrix m = read_matrix(reader);
  expect_end(reader);
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::string out = "field " + m.field().to_string() + "\n";
  out += "dim " + std::to_string(m.rows());
  if (!m.is_square()) out += " " + std::to_string(m.cols());
  out += "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += m(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

HomogeneousPoly parse_poly(std::string_view text) {
  LineReader reader(text);
  const Line& header = reader.take();
  expect_keyword(header, "poly", 3);
  const FieldSpec field = parse_field_token(header.tokens[1]);
  const auto n_vars = parse_count<std::size_t>(header.tokens[2]);
  const auto degree = parse_count<std::uint32_t>(header.tokens[3]);
  std::vector<Monomial> monomials;
  while (!reader.done()) {
    const Line& line = reader.take();
    if (line.tokens.size() != n_vars + 2 || line.tokens[1].text != ":") {
      throw ParseError(line.offset, "expected '<coeff> : e1 ... e" + std::to_string(n_vars) + "'");
    }
    Monomial m{parse_element_token(field, line.tokens[0]), {}};
    for (std::size_t i = 0; i < n_vars; ++i) m.exponents.push_back(parse_count<std::uint32_t>(line.tokens[i + 2]));
    monomials.push_back(std::move(m));
  }
  try {
    return HomogeneousPoly(field, n_vars, degree, std::move(monomials));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotHomogeneous) throw ParseError(header.offset, e.detail());
    throw;
  }
}

std::string format_poly(const HomogeneousPoly& f) {
  std::string out = "poly " + f.field().to_string() + " " + std::to_string(f.n_vars()) + " " +
                    std::to_string(f.degree()) + "\n";
  for (const auto& m : f.monomials()) {
    out += m.coefficient.to_string() + " :";
    for (auto e : m.exponents) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

RepresentationInput parse_representation(std::string_view text) {
  LineReader reader(text);
  const Line& header = reader.take();
  expect_keyword(header, "rep", 3);
  RepresentationInput input;
  input.field = parse_field_token(header.tokens[1]);
  input.dim = parse_count<std::size_t>(header.tokens[2]);
  const auto count = parse_count<std::size_t>(header.tokens[3]);
  auto read_square = [&]() {
    const std::size_t at = reader.peek().offset;
    Matrix m = read_matrix(reader);
    if (!(m.field() == input.field)) throw ParseError(at, "matrix over " + m.field().to_string() + ", expected " + input.field.to_string());
    if (m.rows() != input.dim || m.cols() != input.dim) {
      throw ParseError(at, "matrix must be " + std::to_string(input.dim) + "x" + std::to_string(input.dim));
    }
    return m;
  };
  for (std::size_t k = 0; k < count; ++k) input.generators.push_back(read_square());
  if (!reader.done()) input.seed = read_square();
  expect_end(reader);
  return input;
}

std::string format_representation(const FieldSpec& field, std::size_t dim, const std::vector<Matrix>& generators) {
  std::string out = "rep " + field.to_string() + " " + std::to_string(dim) + " " + std::to_string(generators.size()) + "\n";
  for (const auto& g : generators) out += format_matrix(g);
  return out;
}

std::string extract_block(std::string_view text, std::string_view name) {
  const std::string begin = "begin " + std::string(name) + "\n";
  const std::string end = "end " + std::string(name) + "\n";
  std::size_t start = text.find(begin);
  if (start != 0 && start != std::string_view::npos && text[start - 1] != '\n') start = std::string_view::npos;
  if (start == std::string_view::npos) throw ParseError(text.size(), "no block '" + std::string(name) + "'");
  start += begin.size();
  const std::size_t stop = text.find(end, start);
  if (stop == std::string_view::npos) throw ParseError(text.size(), "unterminated block '" + std::string(name) + "'");
  return std::string(text.substr(start, stop - start));
}

}  // namespace isoform
