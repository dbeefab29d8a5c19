#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "isoform/isoform.hpp"

using namespace isoform;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::istringstream in(stdin_text);
  const int code = cli::run(args, out, in);
  return {code, out.str()};
}

std::string input(const char* name) { return std::string(ISOFORM_CLI_INPUTS) + "/" + name; }

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream lines(text);
  std::string line;
  const std::string prefix = key + " = ";
  while (std::getline(lines, line)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return {};
}

}  // namespace

TEST_CASE("isotropic prints a verified witness") {
  const Result r = run_cli({"isotropic", input("form_f9_diag11.txt")});
  CHECK(r.code == cli::kExitOk);
  CHECK(value_of(r.out, "isotropic_check") == "true");
  const FieldSpec f9 = FieldSpec::prime_square(3);
  const HermitianForm form(parse_matrix(extract_block(r.out, "gram")));
  const std::string witness = value_of(r.out, "witness");
  REQUIRE(witness.size() > 2);
  Vector v;
  std::istringstream parts(witness.substr(1, witness.size() - 2));
  std::string piece;
  while (std::getline(parts, piece, ',')) v.push_back(parse_element(f9, piece));
  CHECK(v.size() == 2);
  CHECK(is_isotropic(form, v));
  CHECK_FALSE(is_zero_vector(v));
}

TEST_CASE("diagonalize of the zero form") {
  const Result r = run_cli({"diagonalize", input("zero_form.txt")});
  CHECK(r.code == cli::kExitOk);
  CHECK(parse_matrix(extract_block(r.out, "basis_change")) == Matrix::identity(FieldSpec::prime(7), 2));
  CHECK(value_of(r.out, "diagonal") == "(0, 0)");
  CHECK(value_of(r.out, "contract_check") == "true");
}

TEST_CASE("norm-solve domain error") {
  const Result r = run_cli({"norm-solve", "--field", "Fp:7", "--target", "3"});
  CHECK(r.code == cli::kExitDomainError);
  CHECK(r.out == "error = NormNotRepresented: 3 is not a square mod 7\n");

  const Result ok = run_cli({"norm-solve", "--field", "Fp2:3", "--target", "2"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(value_of(ok.out, "norm_check") == "true");
}

TEST_CASE("stdin input and matrix round trip between subcommands") {
  const std::string text = "field Q\ndim 3\n1 2 0\n2 -1 1/2\n0 1/2 3\n";
  const Result d = run_cli({"diagonalize", "-"}, text);
  REQUIRE(d.code == cli::kExitOk);
  const Matrix b = parse_matrix(extract_block(d.out, "basis_change"));
  const Matrix h = parse_matrix(extract_block(d.out, "gram"));
  CHECK((b.transpose() * h * b.conj()).is_diagonal());

  const Result again = run_cli({"isotropic", "-"}, extract_block(d.out, "gram"));
  CHECK(again.code == cli::kExitOk);
  CHECK(value_of(again.out, "isotropic_check") == "true");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  const Result usage = run_cli({"diagonalize", input("zero_form.txt"), "--bogus"});
  CHECK(usage.code == cli::kExitUsage);
  CHECK(usage.out.rfind("error = UsageError:", 0) == 0);
  CHECK(std::count(usage.out.begin(), usage.out.end(), '\n') == 1);
  CHECK(run_cli({"diagonalize", "/nonexistent/file"}).code == cli::kExitUsage);
  CHECK(run_cli({"diagonalize", "-"}, "field Fp:7\ndim 2\n1 2\n3 1\n").code == cli::kExitUsage);
  CHECK(run_cli({"diagonalize", "-"}, "field Fp:8\ndim 1\n1\n").code == cli::kExitUsage);
  CHECK(run_cli({"norm-solve", "--field", "Fp:7"}).code == cli::kExitUsage);
  CHECK(run_cli({"norm-solve", "--field", "Fp:7", "--target", "u"}).code == cli::kExitUsage);
  CHECK(run_cli({"diagonalize", input("zero_form.txt"), "--format", "json"}).code == cli::kExitUsage);

  const Result none = run_cli({"isotropic", "-"}, "field Q\ndim 2\n1 0\n0 1\n");
  CHECK(none.code == cli::kExitDomainError);
  CHECK(none.out.rfind("error = NotFound:", 0) == 0);

  const Result nosol = run_cli({"cw-solve", "-"}, "poly Fp:3 2 2\n1 : 2 0\n1 : 0 2\n");
  CHECK(nosol.code == cli::kExitDomainError);
  CHECK(nosol.out.rfind("error = NoSolutionFound:", 0) == 0);

  const Result big = run_cli({"cw-solve", "--search-bound", "10", "-"}, "poly Fp:7 3 2\n1 : 2 0 0\n1 : 0 2 0\n1 : 0 0 2\n");
  CHECK(big.code == cli::kExitDomainError);

  const Result cap = run_cli({"rep-close", "--max-group", "3", "-"},
                             "rep Fp:7 1 1\nfield Fp:7\ndim 1\n3\n");
  CHECK(cap.code == cli::kExitDomainError);
  CHECK(cap.out.rfind("error = GroupTooLarge:", 0) == 0);
}

TEST_CASE("identical invocations give identical output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"isotropic", input("form_f9_diag11.txt")},
           {"diagonalize", input("zero_form.txt")},
           {"norm-solve", "--field", "Qsqrt:-1", "--target", "25"}}) {
    const Result a = run_cli(args);
    const Result b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
