#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/families.hpp"
#include "umbra/grid.hpp"
#include "umbra/identities.hpp"
#include "umbra/special.hpp"

namespace umbra::cli {

namespace {

using json = nlohmann::ordered_json;

// ---- parsing helpers --------------------------------------------------------

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty element in list '" + text + "'");
    out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(const std::string& text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw UsageError(std::string(what) + ": expected an integer, got '" + text + "'");
  return value;
}

Rational parse_rational(const std::string& text, std::string_view what) {
  auto value = Rational::try_parse(text);
  if (!value) throw UsageError(std::string(what) + ": expected a rational p or p/q, got '" + text + "'");
  return *value;
}

// ---- serialization ----------------------------------------------------------

/// [num, den]; components outside the int64 range fall back to decimal strings.
json rational_json(const Rational& q) {
  auto num = q.numerator_i64();
  auto den = q.denominator_i64();
  json pair = json::array();
  if (num) pair.push_back(*num);
  else pair.push_back(q.numerator_string());
  if (den) pair.push_back(*den);
  else pair.push_back(q.denominator_string());
  return pair;
}

json coeffs_json(const std::vector<Rational>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(rational_json(c));
  return arr;
}

/// Dense, lowest degree first; the zero polynomial is [0].
std::vector<Rational> dense(const Polynomial& p) {
  if (p.is_zero()) return {Rational()};
  return {p.coeffs().begin(), p.coeffs().end()};
}

json params_json(const ParamPoint& p) {
  json j = json::object();
  j["a"] = p.a.fraction_str();
  j["k"] = p.k;
  if (p.s) j["s"] = *p.s;
  if (p.lambda) j["lambda"] = p.lambda->fraction_str();
  if (p.m) j["m"] = *p.m;
  return j;
}

std::string csv_row(int n, const std::vector<Rational>& coeffs, std::size_t width) {
  std::string line = std::to_string(n);
  for (std::size_t i = 0; i < width; ++i) {
    line += ',';
    if (i < coeffs.size()) line += coeffs[i].fraction_str();
  }
  return line;
}

// ---- table ------------------------------------------------------------------

struct TableArgs {
  std::string family;
  std::optional<std::string> a;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<std::string> lambda;
  int n_max = 10;
  std::string format = "json";
};

struct FamilyRequirements {
  bool a = false, k = false, r = false, lambda = false;
};

const std::map<std::string, FamilyRequirements, std::less<>>& families() {
  static const std::map<std::string, FamilyRequirements, std::less<>> table{
      {"poisson-charlier", {.a = true}},
      {"poly-cauchy-1", {.k = true}},
      {"poly-cauchy-2", {.k = true}},
      {"bernoulli", {.r = true}},
      {"frobenius-euler", {.r = true, .lambda = true}},
      {"pc-mixed", {.a = true, .k = true}},
      {"pc-hat-mixed", {.a = true, .k = true}},
      {"stirling1", {}},
      {"stirling2", {}},
      {"cauchy1", {.r = true}},
      {"cauchy2", {.r = true}},
  };
  return table;
}

std::string family_names() {
  std::string names;
  for (const auto& [name, req] : families()) names += (names.empty() ? "" : ", ") + name;
  return names;
}

std::vector<std::vector<Rational>> polynomial_rows(const std::vector<Polynomial>& table) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : table) rows.push_back(dense(p));
  return rows;
}

int cmd_table(const TableArgs& args, std::ostream& out) {
  auto it = families().find(args.family);
  if (it == families().end())
    throw UsageError("unknown family '" + args.family + "' (expected one of: " + family_names() + ")");
  const FamilyRequirements& req = it->second;
  auto check = [&](bool needed, bool given, std::string_view flag) {
    if (needed && !given) throw UsageError("family " + args.family + " requires --" + std::string(flag));
    if (!needed && given) throw UsageError("family " + args.family + " does not take --" + std::string(flag));
  };
  check(req.a, args.a.has_value(), "a");
  check(req.k, args.k.has_value(), "k");
  check(req.r, args.r.has_value(), "r");
  check(req.lambda, args.lambda.has_value(), "lambda");
  if (args.n_max < 0) throw UsageError("--n-max must be nonnegative");
  if (args.format != "json" && args.format != "csv") throw UsageError("--format must be json or csv");

  json params = json::object();
  Rational a, lambda;
  if (args.a) {
    a = parse_rational(*args.a, "--a");
    if (a.is_zero()) throw UsageError("--a must be nonzero");
    params["a"] = a.fraction_str();
  }
  if (args.k) params["k"] = *args.k;
  if (args.r) {
    if (*args.r < 0) throw UsageError("--r must be nonnegative");
    params["r"] = *args.r;
  }
  if (args.lambda) {
    lambda = parse_rational(*args.lambda, "--lambda");
    if (lambda == Rational(1)) throw UsageError("--lambda must differ from 1");
    params["lambda"] = lambda.fraction_str();
  }

  const int n_max = args.n_max;
  const std::string& f = args.family;
  std::vector<std::vector<Rational>> rows;
  if (f == "poisson-charlier") rows = polynomial_rows(poisson_charlier_table(a, n_max));
  else if (f == "poly-cauchy-1") rows = polynomial_rows(poly_cauchy_first_table(*args.k, n_max));
  else if (f == "poly-cauchy-2") rows = polynomial_rows(poly_cauchy_second_table(*args.k, n_max));
  else if (f == "bernoulli") rows = polynomial_rows(bernoulli_poly_table(*args.r, n_max));
  else if (f == "frobenius-euler") rows = polynomial_rows(frobenius_euler_table(*args.r, lambda, n_max));
  else if (f == "pc-mixed") rows = polynomial_rows(pc_mixed_table(*args.k, a, n_max));
  else if (f == "pc-hat-mixed") rows = polynomial_rows(pc_hat_mixed_table(*args.k, a, n_max));
  else if (f == "stirling1" || f == "stirling2") {
    const StirlingTable table(f == "stirling1" ? StirlingKind::FirstSigned : StirlingKind::Second, n_max);
    for (int n = 0; n <= n_max; ++n) {
      std::vector<Rational> row;
      for (int k = 0; k <= n; ++k) row.push_back(table.at(n, k));
      rows.push_back(std::move(row));
    }
  } else {
    const auto numbers = f == "cauchy1" ? cauchy_first_row(*args.r, n_max) : cauchy_second_row(*args.r, n_max);
    for (int n = 0; n <= n_max; ++n) rows.push_back({numbers[static_cast<std::size_t>(n)]});
  }

  if (args.format == "json") {
    json doc = json::object();
    doc["family"] = f;
    doc["params"] = params;
    json jrows = json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
      json row = json::object();
      row["n"] = n;
      row["coeffs"] = coeffs_json(rows[n]);
      jrows.push_back(std::move(row));
    }
    doc["rows"] = std::move(jrows);
    out << doc.dump() << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.size());
    out << 'n';
    for (std::size_t i = 0; i < width; ++i) out << ",c" << i;
    out << '\n';
    for (std::size_t n = 0; n < rows.size(); ++n) out << csv_row(static_cast<int>(n), rows[n], width) << '\n';
  }
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string ids = "core";
  int n_max = 10;
  std::optional<std::string> a, k, s, lambda;
  std::string format = "text";
  unsigned threads = 0;
};

void print_counterexample(const VerificationResult& r, std::ostream& os) {
  os << "counterexample: " << to_string(r.id) << " n=" << r.n << " " << to_string(r.params) << '\n';
  if (r.lhs) os << "  lhs: " << r.lhs->str() << '\n';
  if (r.rhs) os << "  rhs: " << r.rhs->str() << '\n';
  if (r.derivation_form) os << "  derivation form: " << (*r.derivation_form ? "holds" : "fails") << '\n';
  if (!r.note.empty()) os << "  note: " << r.note << '\n';
}

void print_summary(std::span<const IdentityId> ids, std::span<const VerificationResult> results, std::ostream& os) {
  for (IdentityId id : ids) {
    std::size_t checked = 0, failed = 0, printed = 0, derivation = 0;
    bool has_printed = false, has_derivation = false;
    for (const auto& r : results) {
      if (r.id != id) continue;
      ++checked;
      if (!r.holds()) ++failed;
      if (r.as_printed) {
        has_printed = true;
        if (!*r.as_printed) ++printed;
      }
      if (r.derivation_form) {
        has_derivation = true;
        if (!*r.derivation_form) ++derivation;
      }
    }
    os << to_string(id) << ": " << checked << " checked, " << failed << " failed";
    if (has_printed) os << "; printed form fails at " << printed;
    if (has_derivation) os << "; derivation form fails at " << derivation;
    os << '\n';
  }
  const GridSummary s = summarize(results);
  os << "total: " << s.checked << " checked, " << s.failed << " failed\n";
  for (const auto& r : results)
    if (r.minimal_counterexample) print_counterexample(r, os);
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.format != "text" && args.format != "json") throw UsageError("--format must be text or json");
  if (args.n_max < 0) throw UsageError("--n-max must be nonnegative");
  const std::vector<IdentityId> ids = resolve_identities(args.ids);

  Grid grid = Grid::defaults();
  if (args.a) {
    grid.a.clear();
    for (const auto& item : split_list(*args.a)) grid.a.push_back(parse_rational(item, "--a"));
  }
  if (args.k) {
    grid.k.clear();
    for (const auto& item : split_list(*args.k)) grid.k.push_back(parse_int(item, "--k"));
  }
  if (args.s) {
    grid.s.clear();
    for (const auto& item : split_list(*args.s)) grid.s.push_back(parse_int(item, "--s"));
  }
  if (args.lambda) {
    grid.lambda.clear();
    for (const auto& item : split_list(*args.lambda)) grid.lambda.push_back(parse_rational(item, "--lambda"));
  }
  grid.validate();

  const auto results = verify_grid(ids, args.n_max, grid, args.threads);
  const GridSummary summary = summarize(results);

  if (args.format == "json") {
    json doc = json::object();
    json jgrid = json::object();
    json jids = json::array();
    for (IdentityId id : ids) jids.push_back(std::string(to_string(id)));
    jgrid["ids"] = std::move(jids);
    jgrid["n_max"] = args.n_max;
    json ja = json::array(), jk = json::array(), js = json::array(), jl = json::array();
    for (const auto& v : grid.a) ja.push_back(v.fraction_str());
    for (int v : grid.k) jk.push_back(v);
    for (int v : grid.s) js.push_back(v);
    for (const auto& v : grid.lambda) jl.push_back(v.fraction_str());
    jgrid["a"] = std::move(ja);
    jgrid["k"] = std::move(jk);
    jgrid["s"] = std::move(js);
    jgrid["lambda"] = std::move(jl);
    doc["grid"] = std::move(jgrid);

    json jresults = json::array();
    for (const auto& r : results) {
      json jr = json::object();
      jr["id"] = std::string(to_string(r.id));
      jr["n"] = r.n;
      jr["params"] = params_json(r.params);
      jr["equal"] = r.equal;
      if (r.as_printed) jr["as_printed"] = *r.as_printed;
      if (r.derivation_form) jr["derivation_form"] = *r.derivation_form;
      if (r.lhs) jr["lhs"] = coeffs_json(dense(*r.lhs));
      if (r.rhs) jr["rhs"] = coeffs_json(dense(*r.rhs));
      if (!r.note.empty()) jr["note"] = r.note;
      if (r.minimal_counterexample) jr["minimal_counterexample"] = true;
      jresults.push_back(std::move(jr));
    }
    doc["results"] = std::move(jresults);
    json jsummary = json::object();
    jsummary["checked"] = summary.checked;
    jsummary["failed"] = summary.failed;
    jsummary["printed_form_failures"] = summary.printed_form_failures;
    doc["summary"] = std::move(jsummary);
    out << doc.dump() << '\n';
    print_summary(ids, results, err);
  } else {
    print_summary(ids, results, out);
  }
  return summary.failed == 0 ? kOk : kCounterexample;
}

// ---- describe ---------------------------------------------------------------

int cmd_describe(const std::string& name, std::ostream& out) {
  auto id = parse_identity(name);
  if (!id) throw UsageError("unknown identity '" + name + "'");
  const IdentityInfo& entry = info(*id);
  out << entry.name << " (" << entry.location << ")\n";
  out << "  statement: " << entry.statement << '\n';
  out << "  domain:    " << entry.domain << '\n';
  out << "  strategy:  " << entry.strategy << '\n';
  if (entry.audit) out << "  audit:     printed form reported; build gated on the derivation form\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tables and identity checks for Poisson-Charlier / poly-Cauchy mixed-type polynomials",
               "umbra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Coefficient table of a polynomial or number family");
  table_cmd->add_option("--family", table.family, "One of: " + family_names())->required();
  table_cmd->add_option("--a", table.a, "Rational parameter a (p or p/q)");
  table_cmd->add_option("--k", table.k, "Integer index k of Lif_k");
  table_cmd->add_option("--r,--s", table.r, "Order r (alias --s)");
  table_cmd->add_option("--lambda", table.lambda, "Rational parameter lambda");
  table_cmd->add_option("--n-max", table.n_max, "Largest index n")->capture_default_str();
  table_cmd->add_option("--format", table.format, "json or csv")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check catalogued identities over a parameter grid");
  verify_cmd->add_option("--ids", verify.ids, "core, audit, all, or a comma list of ids")->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n")->capture_default_str();
  verify_cmd->add_option("--a", verify.a, "Comma list of a values (default 1,2,-1,3/7,-5/2)");
  verify_cmd->add_option("--k", verify.k, "Comma list of k values (default -2..3)");
  verify_cmd->add_option("--s", verify.s, "Comma list of s values (default 0..3)");
  verify_cmd->add_option("--lambda", verify.lambda, "Comma list of lambda values (default 2,-1,1/2,5/3)");
  verify_cmd->add_option("--format", verify.format, "text or json")->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  std::string describe_id;
  auto* describe_cmd = app.add_subcommand("describe", "Show where an identity comes from and how it is checked");
  describe_cmd->add_option("id", describe_id, "Identity id, e.g. T1")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "umbra: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    return cmd_describe(describe_id, out);
  } catch (const std::exception& e) {
    err << "umbra: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace umbra::cli
