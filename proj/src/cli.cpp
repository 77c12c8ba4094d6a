#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "casimir/casimir.hpp"
#include "casimir/cycles.hpp"
#include "casimir/errors.hpp"
#include "casimir/io.hpp"
#include "casimir/tables.hpp"

namespace casimir {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

const std::map<std::string, SignConvention> kSignNames{
    {"literal", SignConvention::literal}, {"alternating", SignConvention::alternating}};

const char* sign_name(SignConvention s) {
  return s == SignConvention::literal ? "literal" : "alternating";
}

std::string join(std::span<const int> values, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

struct Options {
  // elementary
  std::string tuple;
  int n = 0;
  bool raw = false;
  bool latex = false;
  SignConvention sign = SignConvention::alternating;
  bool json = false;
  // casimir / closed-form / verify / tables
  int m = 0;
  Basis basis = Basis::monomial;
  unsigned threads = 0;
  bool exhaustive = false;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::string format = "md";
};

int run_elementary(const Options& o, std::ostream& out) {
  const IndexTuple t = parse_tuple(o.tuple, o.n > 0 ? std::optional<int>(o.n) : std::nullopt);
  const bool shifted = !o.raw;
  const MPoly value = elementary_eigenvalue(t, o.sign, shifted);
  const auto cycles = enumerate_cycles(t);
  if (o.json) {
    Json j;
    j["tuple"] = std::vector<int>(t.entries().begin(), t.entries().end());
    j["n"] = t.n();
    j["shifted"] = shifted;
    j["sign"] = sign_name(o.sign);
    j["eigenvalue"] = to_json(value);
    Json cj = Json::array();
    for (const auto& c : cycles) cj.push_back(to_json(c));
    j["cycles"] = std::move(cj);
    out << dump(j) << '\n';
    return kExitOk;
  }
  const auto style = o.latex ? VariableStyle::latex : VariableStyle::plain;
  out << "tuple: (" << join(t.entries()) << ")  m = " << t.m() << ", n = " << t.n() << '\n';
  out << "parameters: "
      << (shifted ? "shifted, beta_i = a_i + (n+1)/2 - i" : "raw (power function |.|^a)") << '\n';
  out << "sign: " << sign_name(o.sign) << '\n';
  out << "eigenvalue: " << format_mpoly(value, style) << '\n';
  out << '\n' << "| cycle | positions | proper | v1 | v2 |\n|---|---|---|---|---|\n";
  const auto closed = t.closed_tuple();
  for (const auto& c : cycles) {
    const std::span<const int> window(closed.data() + c.start, c.end - c.start + 1);
    out << "| (" << join(window) << ") | " << c.start + 1 << ".." << c.end + 1 << " | "
        << (c.proper ? "yes" : "no") << " | " << c.minima.first << " | "
        << (c.minima.second ? std::to_string(*c.minima.second) : std::string("INF")) << " |\n";
  }
  return kExitOk;
}

int run_casimir(const Options& o, std::ostream& out, std::ostream& err) {
  CasimirRequest req;
  req.m = o.m;
  req.n = o.n;
  req.shifted = !o.raw;
  req.basis = o.basis;
  req.sign = o.sign;
  req.threads = o.threads;
  const MPoly value = casimir_eigenvalue_patterned(req);
  const bool outside = outside_stated_range(o.m, o.n);
  if (o.json) {
    if (outside) err << "note: m > n is outside the stated range 1 <= m <= n\n";
    if (o.basis == Basis::power_sum)
      out << dump(to_json(as_closed_form(to_power_sum(value, static_cast<std::size_t>(o.n)))))
          << '\n';
    else
      out << dump(to_json(value)) << '\n';
    return kExitOk;
  }
  if (outside) out << "note: m > n is outside the stated range 1 <= m <= n\n";
  if (o.basis == Basis::power_sum)
    out << format_power_sum(to_power_sum(value, static_cast<std::size_t>(o.n))) << '\n';
  else
    out << format_mpoly(value, o.latex ? VariableStyle::latex : VariableStyle::plain) << '\n';
  return kExitOk;
}

int run_closed_form(const Options& o, std::ostream& out) {
  const ClosedForm f = closed_form(o.m, o.threads);
  if (o.json)
    out << dump(to_json(f)) << '\n';
  else
    out << format_closed_form(f) << '\n';
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.exhaustive == (o.random > 0)) {
    err << "verify: choose exactly one of --exhaustive or --random <count> --seed <u64>\n";
    return kExitInvalid;
  }
  const auto selection =
      o.exhaustive ? VerifySelection::all() : VerifySelection::random(o.random, o.seed);
  const VerifyReport report = verify_tuples(o.m, o.n, selection, true, o.threads);
  const auto mismatches = report.mismatches(o.sign);
  if (o.json) {
    out << dump(to_json(report, o.sign)) << '\n';
  } else {
    out << "verify m = " << o.m << ", n = " << o.n << ", "
        << (o.exhaustive ? "exhaustive" : "random " + std::to_string(o.random) + " (seed " +
                                              std::to_string(o.seed) + ")")
        << ", shifted parameters\n";
    if (outside_stated_range(o.m, o.n)) out << "note: m > n is outside the stated range\n";
    out << "total: " << report.total << '\n'
        << "zero: " << report.zero << '\n'
        << "match_literal: " << report.match_literal << " / " << report.nonzero() << '\n'
        << "match_alternating: " << report.match_alternating << " / " << report.nonzero() << '\n'
        << "consistent convention: " << report.consistent_convention() << '\n'
        << "configured convention: " << sign_name(o.sign) << " -> "
        << (mismatches.empty() ? "all tuples agree with the oracle" : "MISMATCH") << '\n';
    for (const auto& t : mismatches) out << "  mismatch: (" << join(t.entries()) << ")\n";
  }
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

int run_tables(const Options& o, std::ostream& out) {
  const auto rows = elementary_table(o.m);
  const auto names = table_variable_names(o.m);
  if (o.format == "json") {
    Json j;
    j["m"] = o.m;
    j["variables"] = names;
    Json rj = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["case"] = r.label;
      row["computed"] = r.computed_text;
      row["computed_expanded"] = format_mpoly(r.computed, names);
      row["reference"] = r.reference_text;
      row["matches"] = r.matches;
      rj.push_back(std::move(row));
    }
    j["rows"] = std::move(rj);
    out << dump(j) << '\n';
    return kExitOk;
  }
  out << "Eigenvalues of D_{i1,i2}";
  for (int k = 2; k <= o.m; ++k)
    out << " o D_{i" << k << ",i" << (k == o.m ? 1 : k + 1) << "}";
  out << " for shifted parameters, β_{ik} = α_{ik} + (n+1)/2 − ik\n\n";
  out << "| case | eigenvalue | computed (β form) | status |\n|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.label << " | ";
    if (r.matches)
      out << r.reference_text;
    else
      out << "computed: " << r.computed_text << "; reference: " << r.reference_text;
    out << " | " << r.computed_text << " | " << (r.matches ? "match" : "**DISCREPANCY**")
        << " |\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenvalues of GL(n,R) Casimir and elementary differential operators"};
  app.require_subcommand(1);
  Options o;

  auto* elementary = app.add_subcommand("elementary", "eigenvalue of one elementary operator");
  elementary->add_option("--tuple", o.tuple, "comma-separated indices, e.g. 1,9,2,5")->required();
  elementary->add_option("--n", o.n, "rank (default: largest index)")->check(CLI::PositiveNumber);
  elementary->add_flag("--raw", o.raw, "unshifted parameters");
  elementary->add_option("--sign", o.sign, "literal|alternating")
      ->transform(CLI::CheckedTransformer(kSignNames));
  elementary->add_flag("--latex", o.latex, "print \\alpha_{i} instead of ai");
  elementary->add_flag("--json", o.json, "machine-readable output");

  auto* casimir = app.add_subcommand("casimir", "eigenvalue of the order-m Casimir operator");
  casimir->add_option("--m", o.m, "order")->required()->check(CLI::PositiveNumber);
  casimir->add_option("--n", o.n, "rank")->required()->check(CLI::PositiveNumber);
  casimir->add_option("--basis", o.basis, "monomial|power-sum")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Basis>{{"monomial", Basis::monomial}, {"power-sum", Basis::power_sum}}));
  casimir->add_flag("--raw", o.raw, "unshifted parameters");
  casimir->add_option("--sign", o.sign, "literal|alternating")
      ->transform(CLI::CheckedTransformer(kSignNames));
  casimir->add_flag("--latex", o.latex, "print \\alpha_{i} instead of ai");
  casimir->add_flag("--json", o.json, "machine-readable output");
  casimir->add_option("--threads", o.threads, "worker cap (0 = all cores)");

  auto* closed = app.add_subcommand("closed-form", "closed form in the rank n");
  closed->add_option("--m", o.m, "order")->required()->check(CLI::PositiveNumber);
  closed->add_flag("--json", o.json, "machine-readable output");
  closed->add_option("--threads", o.threads, "worker cap (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "compare the cycle formula with the jet oracle");
  verify->add_option("--m", o.m, "order")->required()->check(CLI::PositiveNumber);
  verify->add_option("--n", o.n, "rank")->required()->check(CLI::PositiveNumber);
  auto* exhaustive = verify->add_flag("--exhaustive", o.exhaustive, "every tuple in {1..n}^m");
  auto* random = verify->add_option("--random", o.random, "number of random tuples")
                     ->check(CLI::PositiveNumber);
  auto* seed = verify->add_option("--seed", o.seed, "seed for --random");
  random->needs(seed);
  exhaustive->excludes(random);
  verify->add_option("--sign", o.sign, "convention that decides the exit code")
      ->transform(CLI::CheckedTransformer(kSignNames));
  verify->add_flag("--json", o.json, "machine-readable output");
  verify->add_option("--threads", o.threads, "worker cap (0 = all cores)");

  auto* tables = app.add_subcommand("tables", "order-2/3 elementary eigenvalue tables");
  tables->add_option("--m", o.m, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  tables->add_option("--format", o.format, "md|json")->check(CLI::IsMember({"md", "json"}));

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*elementary) return run_elementary(o, out);
    if (*casimir) return run_casimir(o, out, err);
    if (*closed) return run_closed_form(o, out);
    if (*verify) return run_verify(o, out, err);
    if (*tables) return run_tables(o, out);
  } catch (const InterpolationInconsistent& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace casimir
