// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tmzv/identities.hpp"
#include "tmzv/properties.hpp"
#include "tmzv/rational.hpp"
#include "tmzv/stuffle.hpp"
#include "tmzv/sweep.hpp"
#include "tmzv/zeta.hpp"

using namespace tmzv;

namespace {

constexpr double kRecursiveSweepSeconds = 60.0;
constexpr double kClosedSweepSeconds = 120.0;
constexpr double kEvaluationSeconds = 1.0;
constexpr double kExactIdentitySeconds = 1.0;
constexpr double kSquareTolerance = 1e-4;       // zeta({2}^k), M = 10^5
constexpr double kFourthTolerance = 1e-8;       // zeta({4}^k), M = 10^4
constexpr double kBoxTolerance = 1e-10;
constexpr double kDecompositionTolerance = 1e-3;
constexpr std::size_t kPropertyCases = 1000;
constexpr std::uint64_t kPropertySeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

struct SweepSummary {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
};

SweepSummary summarize(const std::vector<VerifyReport>& reports) {
  SweepSummary s;
  s.cases = reports.size();
  for (const auto& r : reports) {
    if (r.pass) continue;
    if (s.failures++ == 0) s.first = report_to_text(r);
  }
  return s;
}

SweepSummary sweep(Statement st, std::uint64_t cutoff = 100000) {
  SweepOptions opt;
  opt.max = 3;
  opt.threads = 1;
  opt.cutoff = cutoff;
  return summarize(run_sweep(st, opt));
}

std::string describe(const SweepSummary& s) {
  std::ostringstream os;
  os << s.cases << " cases, " << s.failures << " failures";
  if (s.failures) os << "; first: " << s.first;
  return os.str();
}

Outcome timed_sweep(Statement st, double limit) {
  clear_product_caches();
  const auto start = Clock::now();
  const SweepSummary s = sweep(st);
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << describe(s) << ", " << elapsed << " s (limit " << limit << " s)";
  return {s.failures == 0 && elapsed < limit, os.str()};
}

Outcome exact_sweeps(const std::vector<Statement>& statements) {
  bool ok = true;
  std::ostringstream os;
  for (Statement st : statements) {
    const SweepSummary s = sweep(st);
    ok = ok && s.failures == 0 && s.cases > 0;
    os << statement_name(st) << ": " << describe(s) << "; ";
  }
  return {ok, os.str()};
}

Outcome closed_zeta_values() {
  const double pi = std::numbers::pi;
  bool ok = true;
  std::ostringstream os;
  os.precision(3);
  auto check = [&](int part, int k, std::uint64_t cutoff, double expected, double tol) {
    const auto start = Clock::now();
    ZetaEvaluator ev(cutoff);
    const double value = ev.mzv(Index::repeated(part, k));
    const double elapsed = seconds_since(start);
    const double diff = std::abs(value - expected);
    ok = ok && diff <= tol && elapsed < kEvaluationSeconds;
    os << "{" << part << "}^" << k << ": diff " << diff << " " << elapsed << " s; ";
  };
  for (int k = 1; k <= 3; ++k) {
    check(2, k, 100000, std::pow(pi, 2 * k) / factorial(2 * k + 1).to_double(), kSquareTolerance);
  }
  for (int k = 1; k <= 2; ++k) {
    check(4, k, 10000, std::pow(2.0, 2 * k + 1) * std::pow(pi, 4 * k) / factorial(4 * k + 2).to_double(),
          kFourthTolerance);
  }
  return {ok, os.str()};
}

Outcome numeric_sweep(Statement st, double tolerance) {
  SweepOptions opt;
  opt.max = 3;
  opt.cutoff = 100000;
  const auto reports = run_sweep(st, opt);
  double worst = 0.0;
  bool ok = !reports.empty();
  for (const auto& r : reports) {
    const auto* w = std::get_if<NumericWitness>(&r.witness);
    if (!w) return {false, "missing numeric witness"};
    worst = std::max(worst, w->diff);
    ok = ok && r.pass && w->diff <= tolerance && w->cutoff == opt.cutoff;
  }
  std::ostringstream os;
  os << reports.size() << " cases, worst diff " << worst << " (tolerance " << tolerance << ")";
  return {ok, os.str()};
}

Outcome exact_identities() {
  const auto start = Clock::now();
  bool ok = true;
  int count = 0;
  for (int k = 2; k <= 12; k += 2, ++count) ok = ok && check_factorial_identity(k).pass;
  for (int l = 1; l <= 3; ++l, ++count) {
    const GaussianRational lhs = zeta8_identity_lhs(l);
    ok = ok && lhs.im.is_zero() && lhs.re == zeta8_identity_rhs(l) && check_zeta8_identity(l).pass;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << count << " exact identities, " << elapsed << " s (limit " << kExactIdentitySeconds << " s)";
  return {ok && elapsed < kExactIdentitySeconds, os.str()};
}

Outcome property_suites() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : run_properties(kPropertySeed, kPropertyCases)) {
    ok = ok && r.pass() && r.cases >= kPropertyCases;
    os << r.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
    if (!r.pass()) os << "first: " << r.counterexample << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"recursive-form sweep", [] { return timed_sweep(Statement::recursive_form, kRecursiveSweepSeconds); }},
      {"closed-form sweep", [] { return timed_sweep(Statement::closed_form, kClosedSweepSeconds); }},
      {"power, head-power, split and alternating sweeps",
       [] {
         return exact_sweeps({Statement::power_product, Statement::head_power, Statement::split_formula,
                              Statement::alternating_sum});
       }},
      {"combinatorial enumeration", [] { return exact_sweeps({Statement::combinatorial}); }},
      {"t = 0 reduction", [] { return exact_sweeps({Statement::classical_reduction}); }},
      {"closed zeta values", closed_zeta_values},
      {"box expansion vs S_t map", [] { return numeric_sweep(Statement::box_map, kBoxTolerance); }},
      {"numeric product decomposition",
       [] { return numeric_sweep(Statement::numeric_decomposition, kDecompositionTolerance); }},
      {"factorial and Gaussian-rational identities", exact_identities},
      {"property suites", property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu: %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
