#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>

#include "isoform/isoform.hpp"

namespace isoform::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string field;
  std::string target;
  std::uint64_t search_bound = kDefaultSearchBound;
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  std::uint64_t seed = 0;
  std::size_t max_group = kDefaultGroupCap;
  std::string format = "plain";
};

/// Accumulates the "key = value" report; printed only when the command succeeds.
class Report {
 public:
  template <class T>
  void put(std::string_view key, const T& value) {
    text_ << key << " = " << value << "\n";
  }
  void put(std::string_view key, bool value) { text_ << key << " = " << (value ? "true" : "false") << "\n"; }
  void block(std::string_view name, const std::string& body) {
    text_ << "begin " << name << "\n" << body << "end " << name << "\n";
  }
  /// Verification line; a failed check aborts the command.
  void check(std::string_view key, bool ok) {
    if (!ok) fail(ErrorCode::InternalInvariant, std::string(key) + " failed");
    put(key, true);
  }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError(0, "cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

HermitianForm read_form(const Options& opts, std::istream& in) {
  return HermitianForm(parse_matrix(read_input(opts.input, in)));
}

void echo_form(Report& r, const std::string& command, const HermitianForm& form) {
  r.put("command", command);
  r.put("field", form.field().to_string());
  r.put("dim", form.dim());
  r.block("gram", format_matrix(form.gram()));
}

Representation build_rep(const RepresentationInput& input, const Options& opts) {
  return close_group(input.field, input.dim, input.generators, opts.max_group);
}

void echo_rep(Report& r, const std::string& command, const Representation& rep) {
  r.put("command", command);
  r.put("field", rep.field().to_string());
  r.put("dim", rep.dim());
  r.put("generators", rep.generators().size());
  r.put("order", rep.order());
  r.put("order_invertible", rep.order_invertible());
}

HermitianForm seed_form(const RepresentationInput& input) {
  if (!input.seed) throw ParseError(0, "representation input needs a trailing seed form block");
  return HermitianForm(*input.seed);
}

// ---------------------------------------------------------------------------

void cmd_diagonalize(const Options& opts, std::istream& in, Report& r) {
  const HermitianForm form = read_form(opts, in);
  const DiagonalizationResult result = diagonalize(form);
  echo_form(r, "diagonalize", form);
  r.block("basis_change", format_matrix(result.basis_change));
  r.put("diagonal", vector_to_string(result.diagonal));
  const Matrix& b = result.basis_change;
  const Matrix congruent = b.transpose() * form.gram() * b.conj();
  r.check("contract_check", congruent.is_diagonal() && congruent.diagonal_entries() == result.diagonal);
  r.check("det_check", !b.determinant().is_zero());
  r.check("fixed_check", std::all_of(result.diagonal.begin(), result.diagonal.end(),
                                     [](const FieldElement& x) { return is_fixed(x); }));
}

void cmd_isotropic(const Options& opts, std::istream& in, Report& r) {
  const HermitianForm form = read_form(opts, in);
  const IsotropyOutcome outcome = isotropic_any(form, opts.search_bound);
  if (!outcome.witness) {
    if (outcome.exhaustive) fail(ErrorCode::NotFound, "the form is anisotropic");
    fail(ErrorCode::NotFound, "no isotropic vector within search bound " + std::to_string(opts.search_bound));
  }
  echo_form(r, "isotropic", form);
  r.put("search_bound", opts.search_bound);
  const Vector& v = outcome.witness->vector();
  r.put("witness", vector_to_string(v));
  r.put("construction", witness_kind_name(outcome.witness->construction()));
  r.check("nonzero_check", !is_zero_vector(v));
  r.check("isotropic_check", is_isotropic(form, v));
}

void cmd_norm_solve(const Options& opts, Report& r) {
  if (opts.field.empty() || opts.target.empty()) throw ParseError(0, "norm-solve needs --field and --target");
  const FieldSpec field = FieldSpec::parse(opts.field);
  const FieldElement target = parse_element(field, opts.target);
  const FieldElement x = norm_solve(target, opts.search_bound);
  r.put("command", "norm-solve");
  r.put("field", field.to_string());
  r.put("target", target.to_string());
  r.put("solution", x.to_string());
  r.put("norm", norm(x).to_string());
  r.check("norm_check", norm(x) == target);
}

void cmd_cw_solve(const Options& opts, std::istream& in, Report& r) {
  const HomogeneousPoly f = parse_poly(read_input(opts.input, in));
  const auto solution = cw_solve(f, opts.enumeration_bound);
  if (!solution) {
    fail(ErrorCode::NoSolutionFound, "no nontrivial zero over " + f.field().to_string() + " in " +
                                         std::to_string(f.n_vars()) + " variables (exhaustive)");
  }
  r.put("command", "cw-solve");
  r.put("field", f.field().to_string());
  r.put("n_vars", f.n_vars());
  r.put("degree", f.degree());
  r.block("poly", format_poly(f));
  r.put("solution", vector_to_string(*solution));
  r.put("chevalley_applies", f.degree() < f.n_vars());
  r.check("nonzero_check", !is_zero_vector(*solution));
  r.check("zero_check", f(*solution).is_zero());
}

void cmd_rep_close(const Options& opts, std::istream& in, Report& r) {
  const RepresentationInput input = parse_representation(read_input(opts.input, in));
  const Representation rep = build_rep(input, opts);
  echo_rep(r, "rep-close", rep);
  bool closed = true;
  std::unordered_set<Matrix> members(rep.elements().begin(), rep.elements().end());
  for (const auto& a : rep.elements()) {
    for (const auto& g : rep.generators()) closed = closed && members.contains(a * g);
  }
  r.check("closure_check", closed && rep.elements().front() == Matrix::identity(rep.field(), rep.dim()));
  for (std::size_t k = 0; k < rep.elements().size(); ++k) {
    r.block("element_" + std::to_string(k), format_matrix(rep.elements()[k]));
  }
}

void cmd_rep_average(const Options& opts, std::istream& in, Report& r) {
  const RepresentationInput input = parse_representation(read_input(opts.input, in));
  const Representation rep = build_rep(input, opts);
  const HermitianForm seed = seed_form(input);
  const HermitianForm averaged = average_form(rep, seed);
  echo_rep(r, "rep-average", rep);
  r.block("seed", format_matrix(seed.gram()));
  r.block("form", format_matrix(averaged.gram()));
  const std::size_t radical_dim = radical(averaged).dim();
  r.put("radical_dim", radical_dim);
  r.put("degenerate", radical_dim > 0);
  bool invariant = true;
  for (const auto& g : rep.elements()) invariant = invariant && g.transpose() * averaged.gram() * g.conj() == averaged.gram();
  r.check("invariant_check", invariant);
}

void cmd_rep_decompose(const Options& opts, std::istream& in, Report& r) {
  const RepresentationInput input = parse_representation(read_input(opts.input, in));
  const Representation rep = build_rep(input, opts);
  const std::vector<Subspace> parts = decompose(rep, opts.seed);
  echo_rep(r, "rep-decompose", rep);
  r.put("seed", opts.seed);
  r.put("summands", parts.size());
  std::size_t total = 0;
  bool invariant = true;
  Matrix stacked(rep.field(), rep.dim(), 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    r.put("summand_" + std::to_string(k) + "_dim", parts[k].dim());
    r.block("summand_" + std::to_string(k), format_matrix(parts[k].basis()));
    total += parts[k].dim();
    invariant = invariant && is_invariant_subspace(rep, parts[k]);
    stacked = stacked.hstack(parts[k].basis());
  }
  r.check("invariant_check", invariant);
  r.check("direct_sum_check", total == rep.dim() && stacked.rank() == rep.dim());
}

void cmd_counterexample(const Options& opts, std::istream& in, Report& r) {
  const RepresentationInput input = parse_representation(read_input(opts.input, in));
  const Representation rep = build_rep(input, opts);
  const CounterexampleReport report = counterexample_report(rep, seed_form(input), opts.search_bound);
  echo_rep(r, "counterexample", rep);
  r.block("form", format_matrix(report.form.gram()));
  const Vector& v = report.witness.vector();
  r.put("witness", vector_to_string(v));
  r.put("construction", witness_kind_name(report.witness.construction()));
  r.check("isotropic_check", !is_zero_vector(v) && is_isotropic(report.form, v));
  r.put("w_dim", report.w_subspace.dim());
  r.put("w_perp_dim", report.w_perp.dim());
  r.put("contains", report.contains);
  r.put("restriction_rank", report.restriction_rank);
  r.check("w_inside_w_perp_check", report.w_perp.contains(report.w_subspace));
  r.block("maschke_complement", format_matrix(report.maschke_complement.basis()));
  r.check("complement_check", report.complement_check);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidFieldSpec:
    case ErrorCode::NotHermitian:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::FieldMismatch:
    case ErrorCode::NotHomogeneous:
      return kExitUsage;
    default:
      return kExitDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Exact Hermitian forms over fields with involution", "isoform"};
  app.require_subcommand(1);
  Options opts;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", opts.input, "input file, or - for stdin"); };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--search-bound", opts.search_bound, "cap on search candidates / enumeration size");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"plain"}));
  };
  auto add_group = [&](CLI::App* sub) { sub->add_option("--max-group", opts.max_group, "group closure cap"); };

  std::function<void(Report&)> action;
  auto bind = [&](CLI::App* sub, std::function<void(Report&)> body) {
    add_format(sub);
    sub->callback([&action, body = std::move(body)] { action = body; });
  };

  auto* diag = app.add_subcommand("diagonalize", "orthogonal basis for a Hermitian form");
  add_input(diag);
  bind(diag, [&](Report& r) { cmd_diagonalize(opts, in, r); });

  auto* iso = app.add_subcommand("isotropic", "find a nonzero isotropic vector");
  add_input(iso);
  add_bound(iso);
  bind(iso, [&](Report& r) { cmd_isotropic(opts, in, r); });

  auto* ns = app.add_subcommand("norm-solve", "solve x * conj(x) = target");
  ns->add_option("--field", opts.field, "field spec")->required();
  ns->add_option("--target", opts.target, "element literal")->required();
  add_bound(ns);
  bind(ns, [&](Report& r) { cmd_norm_solve(opts, r); });

  auto* cw = app.add_subcommand("cw-solve", "nontrivial zero of a homogeneous polynomial over a finite field");
  add_input(cw);
  cw->add_option("--search-bound", opts.enumeration_bound, "cap on q^n for the exhaustive search");
  bind(cw, [&](Report& r) { cmd_cw_solve(opts, in, r); });

  auto* close = app.add_subcommand("rep-close", "close a matrix group under multiplication");
  add_input(close);
  add_group(close);
  bind(close, [&](Report& r) { cmd_rep_close(opts, in, r); });

  auto* avg = app.add_subcommand("rep-average", "average a seed form over the group");
  add_input(avg);
  add_group(avg);
  bind(avg, [&](Report& r) { cmd_rep_average(opts, in, r); });

  auto* dec = app.add_subcommand("rep-decompose", "split into invariant summands");
  add_input(dec);
  add_group(dec);
  dec->add_option("--seed", opts.seed, "probe RNG seed");
  bind(dec, [&](Report& r) { cmd_rep_decompose(opts, in, r); });

  auto* cex = app.add_subcommand("counterexample", "isotropic invariant line inside its orthogonal complement");
  add_input(cex);
  add_group(cex);
  add_bound(cex);
  bind(cex, [&](Report& r) { cmd_counterexample(opts, in, r); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string detail = e.what();
    std::replace(detail.begin(), detail.end(), '\n', ' ');
    while (!detail.empty() && detail.back() == ' ') detail.pop_back();
    out << "error = UsageError: " << detail << "\n";
    return kExitUsage;
  }

  try {
    Report report;
    action(report);
    out << report.str();
    return kExitOk;
  } catch (const Error& e) {
    out << "error = " << error_name(e.code()) << ": " << e.detail() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace isoform::cli
