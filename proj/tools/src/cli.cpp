#include "tmzv_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tmzv/error.hpp"
#include "tmzv/identities.hpp"
#include "tmzv/interpolation.hpp"
#include "tmzv/properties.hpp"
#include "tmzv/serialize.hpp"
#include "tmzv/stuffle.hpp"
#include "tmzv/sweep.hpp"
#include "tmzv/zeta.hpp"

namespace tmzv::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string left, right, op = "t", word, index, method = "boxes", t, params, statement;
  std::uint64_t cutoff = 100000;
  int max = 3;
  long k = 2, l = 1;
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  bool json = false;
};

bool is_letter_word(const std::string& s) {
  return !s.empty() && s.find_first_not_of("xy") == std::string::npos;
}

// Operands are either raw x/y words or comma-separated indices.
Word parse_operand(const std::string& s) {
  return is_letter_word(s) ? Word(s) : word_of_index(Index::parse(s));
}

double parse_real(const std::string& s) { return Rational::parse(s).to_double(); }

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_element(std::ostream& out, const Element& e, bool json) {
  out << (json ? to_json(e) : to_text(e)) << '\n';
}

void print_value(std::ostream& out, const Options& o, const std::string& kind, double value,
                 std::optional<double> t = std::nullopt) {
  if (o.json) {
    ordered_json j{{"kind", kind}, {"index", o.index}, {"cutoff", o.cutoff}};
    if (t) j["t"] = *t;
    j["value"] = value;
    out << j.dump() << '\n';
  } else {
    out << format_real(value) << '\n';
  }
}

int cmd_product(const Options& o, std::ostream& out) {
  Element result;
  if (o.op == "classical") {
    if (!o.t.empty()) throw BadParams("--t does not apply to --op classical");
    result = stuffle_classical(Index::parse(o.left), Index::parse(o.right));
  } else {
    const Word a = parse_operand(o.left), b = parse_operand(o.right);
    result = o.op == "t" ? stuffle_t(a, b) : stuffle_o(a, b);
    if (!o.t.empty()) result = eval_at_t(result, Rational::parse(o.t));
  }
  print_element(out, result, o.json);
  return ok;
}

int cmd_st(const Options& o, std::ostream& out) {
  const Element e(parse_operand(o.word));
  print_element(out, o.t.empty() ? s_t(e) : s_at(e, Rational::parse(o.t)), o.json);
  return ok;
}

std::map<std::string, long> parse_params(const std::string& text) {
  std::map<std::string, long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    long parsed = 0;
    try {
      parsed = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw ParseError("parameter " + name + " is not an integer");
    out[name] = parsed;
  }
  return out;
}

class ParamReader {
 public:
  explicit ParamReader(std::map<std::string, long> values) : values_(std::move(values)) {}

  int get(const std::string& name, int fallback) {
    auto it = values_.find(name);
    if (it == values_.end()) return fallback;
    const long v = it->second;
    values_.erase(it);
    return static_cast<int>(v);
  }

  // Fails on names no getter asked for.
  void finish() const {
    if (!values_.empty()) throw BadParams("unknown parameter: " + values_.begin()->first);
  }

 private:
  std::map<std::string, long> values_;
};

PowerTailParams read_tail(ParamReader& r) {
  PowerTailParams q;
  q.m = r.get("m", q.m);
  q.u = r.get("u", q.u);
  q.p = r.get("p", q.p);
  q.n = r.get("n", q.n);
  q.v = r.get("v", q.v);
  return q;
}

VerifyReport single_check(Statement s, const Options& o) {
  ParamReader r(parse_params(o.params));
  const double t0 = o.t.empty() ? 0.0 : parse_real(o.t);
  ZetaEvaluator zeta(o.cutoff);
  VerifyReport report;
  switch (s) {
    case Statement::closed_form: report = check_closed_form(read_tail(r)); break;
    case Statement::recursive_form: report = check_recursive_form(read_tail(r)); break;
    case Statement::numeric_decomposition:
      report = check_numeric_decomposition(read_tail(r), t0, zeta, 1e-3);
      break;
    case Statement::power_product: {
      const int m = r.get("m", 1), n = r.get("n", 1), p = r.get("p", 1);
      report = check_power_product(m, n, p);
      break;
    }
    case Statement::head_power: {
      const int head = r.get("n", 2), p = r.get("p", 1), k = r.get("k", 0), m = r.get("m", 1);
      report = check_head_power(head, p, k, m);
      break;
    }
    case Statement::split_formula:
      report = check_split(Index::parse(o.left), Index::parse(o.right), r.get("j", 1));
      break;
    case Statement::combinatorial: report = check_combinatorial(Index::parse(o.left), Index::parse(o.right)); break;
    case Statement::classical_reduction:
      report = check_classical_reduction(Index::parse(o.left), Index::parse(o.right));
      break;
    case Statement::alternating_sum: {
      const int p = r.get("p", 1), k = r.get("k", 2);
      report = check_alternating_sum(p, k);
      break;
    }
    case Statement::factorial_identity: report = check_factorial_identity(r.get("k", 2)); break;
    case Statement::zeta8_identity: report = check_zeta8_identity(r.get("l", 1)); break;
    case Statement::box_map: report = check_box_map(Index::parse(o.index), t0, zeta, 1e-10); break;
    case Statement::alternating_zeta: {
      const int p = r.get("p", 2), k = r.get("k", 2);
      report = check_alternating_zeta(p, k, t0, zeta, 1e-4);
      break;
    }
  }
  r.finish();
  return report;
}

ordered_json property_json(const PropertyResult& p, std::uint64_t seed) {
  ordered_json j{{"statement", "property:" + p.name},
                 {"params", {{"seed", seed}, {"cases", p.cases}}},
                 {"pass", p.pass()},
                 {"failures", p.failures}};
  if (!p.pass()) j["witness"] = {{"input", p.counterexample}};
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const bool everything = o.statement == "all";
  const bool properties_only = o.statement == "properties";
  std::vector<Statement> statements;
  if (everything) {
    statements = all_statements();
  } else if (!properties_only) {
    const auto s = statement_from_name(o.statement);
    if (!s) throw BadParams("unknown statement: " + o.statement);
    statements.push_back(*s);
  }

  const bool single = !o.params.empty() || !o.left.empty() || !o.right.empty() || !o.index.empty();
  if (single && statements.size() != 1) throw BadParams("--params, --left, --right and --index need one statement");

  std::vector<VerifyReport> reports;
  bool all_pass = true;
  std::vector<std::string> lines;

  if (single) {
    reports.push_back(single_check(statements.front(), o));
    all_pass = reports.front().pass;
    lines.push_back(report_to_text(reports.front()));
  } else {
    SweepOptions opt;
    opt.max = o.max;
    opt.cutoff = o.cutoff;
    opt.threads = threads_from_env(1);
    for (Statement s : statements) {
      std::vector<VerifyReport> batch = run_sweep(s, opt);
      std::size_t failed = 0;
      const VerifyReport* first = nullptr;
      for (const auto& r : batch) {
        if (r.pass) continue;
        if (!first) first = &r;
        ++failed;
      }
      std::ostringstream line;
      line << (failed ? "FAIL " : "PASS ") << statement_name(s) << " (" << batch.size() << " cases";
      if (failed) line << ", " << failed << " failed";
      line << ')';
      if (first) line << "\n  first counterexample: " << report_to_text(*first);
      lines.push_back(line.str());
      all_pass = all_pass && failed == 0;
      reports.insert(reports.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
  }

  std::vector<PropertyResult> props;
  if (everything || properties_only) {
    props = run_properties(o.seed, o.cases);
    for (const auto& p : props) {
      lines.push_back(property_to_text(p));
      all_pass = all_pass && p.pass();
    }
  }

  if (o.json) {
    ordered_json j = ordered_json::parse(reports_to_json(reports));
    for (const auto& p : props) j.push_back(property_json(p, o.seed));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& line : lines) out << line << '\n';
  }
  return all_pass ? ok : verification_failed;
}

int scalar_result(std::ostream& out, const VerifyReport& r, const std::string& value, bool json) {
  if (json) {
    out << reports_to_json({r}) << '\n';
  } else {
    out << report_to_text(r) << '\n';
    if (r.pass) out << "  lhs = rhs = " << value << '\n';
  }
  return r.pass ? ok : verification_failed;
}

int cmd_eq31(const Options& o, std::ostream& out) {
  const int k = static_cast<int>(o.k);
  const VerifyReport r = check_factorial_identity(k);
  return scalar_result(out, r, factorial_identity_rhs(k).str(), o.json);
}

int cmd_zeta8(const Options& o, std::ostream& out) {
  const VerifyReport r = check_zeta8_identity(static_cast<int>(o.l));
  return scalar_result(out, r, zeta8_identity_rhs(static_cast<int>(o.l)).str(), o.json);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"t-interpolated multiple zeta values: products, maps, evaluators and identity checks", "tmzv"};
  app.require_subcommand(1);
  Options o;

  auto* product = app.add_subcommand("product", "t-stuffle, auxiliary or classical product of two words");
  product->add_option("--left", o.left, "index \"2,1\" or x/y word")->required();
  product->add_option("--right", o.right, "index or x/y word")->required();
  product->add_option("--op", o.op, "t | o | classical")->check(CLI::IsMember({"t", "o", "classical"}));
  product->add_option("--t", o.t, "specialize t exactly (decimal or p/q)");
  product->add_flag("--json", o.json);

  auto* st = app.add_subcommand("st", "apply S_t (or S at a fixed value) to a word");
  st->add_option("--word", o.word, "x/y word or index")->required();
  st->add_option("--t", o.t, "parameter value (decimal or p/q)");
  st->add_flag("--json", o.json);

  auto* zeta = app.add_subcommand("zeta", "truncated multiple zeta value");
  auto* zeta_star = app.add_subcommand("zeta-star", "truncated multiple zeta-star value");
  auto* zeta_t = app.add_subcommand("zeta-t", "truncated interpolated value");
  for (auto* sub : {zeta, zeta_star, zeta_t}) {
    sub->add_option("--index", o.index, "comma-separated parts")->required();
    sub->add_option("--cutoff", o.cutoff, "summation cutoff M")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json);
  }
  zeta_t->add_option("--t", o.t, "parameter value (decimal or p/q)");
  zeta_t->add_option("--method", o.method, "boxes | st")->check(CLI::IsMember({"boxes", "st"}));

  auto* verify = app.add_subcommand("verify", "check identities; exit 1 if any instance fails");
  verify->add_option("statement", o.statement, "statement name, 'properties' or 'all'")->required();
  verify->add_option("--max", o.max, "sweep size (3 gives the standard ranges)")->check(CLI::NonNegativeNumber);
  verify->add_option("--params", o.params, "single instance, e.g. m=2,u=2,p=1,n=1,v=0");
  verify->add_option("--left", o.left, "left index for split/combinatorial/classical");
  verify->add_option("--right", o.right, "right index for split/combinatorial/classical");
  verify->add_option("--index", o.index, "index for box-map");
  verify->add_option("--t", o.t, "parameter value for numeric checks");
  verify->add_option("--cutoff", o.cutoff, "cutoff for numeric checks")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "seed for randomized property suites");
  verify->add_option("--cases", o.cases, "random cases per property suite");
  verify->add_flag("--json", o.json);

  auto* eq31 = app.add_subcommand("eq31", "factorial identity for even k");
  eq31->add_option("--k", o.k, "even k >= 2")->required();
  eq31->add_flag("--json", o.json);

  auto* zeta8 = app.add_subcommand("zeta8", "Gaussian-rational identity behind zeta({8}^l)");
  zeta8->add_option("--l", o.l, "l >= 1")->required();
  zeta8->add_flag("--json", o.json);

  std::vector<const char*> argv{"tmzv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (product->parsed()) return cmd_product(o, out);
    if (st->parsed()) return cmd_st(o, out);
    if (zeta->parsed() || zeta_star->parsed()) {
      ZetaEvaluator ev(o.cutoff);
      const Index idx = Index::parse(o.index);
      const bool star = zeta_star->parsed();
      print_value(out, o, star ? "zeta-star" : "zeta", star ? ev.mzv_star(idx) : ev.mzv(idx));
      return ok;
    }
    if (zeta_t->parsed()) {
      ZetaEvaluator ev(o.cutoff);
      const Index idx = Index::parse(o.index);
      const double t0 = o.t.empty() ? 0.0 : parse_real(o.t);
      const double v = o.method == "boxes" ? ev.zeta_t_boxes(idx, t0) : ev.z_t_eval(Element::of_index(idx), t0);
      print_value(out, o, "zeta-t", v, t0);
      return ok;
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (eq31->parsed()) return cmd_eq31(o, out);
    if (zeta8->parsed()) return cmd_zeta8(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace tmzv::cli
