#include "tmzv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tmzv/serialize.hpp"

namespace tmzv {

namespace {

using Tasks = std::vector<std::function<VerifyReport()>>;

constexpr double kCrossFormTolerance = 1e-3;
constexpr double kSameTruncationTolerance = 1e-10;
constexpr double kAlternatingTolerance = 1e-4;

// One evaluator per thread and cutoff, so memoized zeta values are reused
// across the tasks a worker runs.
ZetaEvaluator& thread_evaluator(std::uint64_t cutoff) {
  thread_local std::map<std::uint64_t, std::unique_ptr<ZetaEvaluator>> evaluators;
  auto& slot = evaluators[cutoff];
  if (!slot) slot = std::make_unique<ZetaEvaluator>(cutoff);
  return *slot;
}

void tail_tasks(Tasks& out, std::initializer_list<int> heads, std::initializer_list<int> ps, int max_tail,
                VerifyReport (*check)(const PowerTailParams&)) {
  for (int m : heads)
    for (int u : heads)
      for (int p : ps)
        for (int n = 0; n <= max_tail; ++n)
          for (int v = 0; v <= max_tail; ++v) out.emplace_back([=] { return check({m, u, p, n, v}); });
}

}  // namespace

std::vector<Index> all_indices(int min_depth, int max_depth, int max_part) {
  std::vector<Index> out;
  for (int depth = std::max(min_depth, 0); depth <= max_depth; ++depth) {
    std::vector<int> parts(static_cast<std::size_t>(depth), 1);
    while (true) {
      out.emplace_back(parts);
      int pos = depth - 1;
      while (pos >= 0 && parts[pos] == max_part) parts[pos--] = 1;
      if (pos < 0) break;
      ++parts[pos];
    }
  }
  return out;
}

Tasks sweep_tasks(Statement s, const SweepOptions& opt) {
  const int n_max = std::max(opt.max, 0);
  const std::uint64_t cutoff = opt.cutoff;
  Tasks out;
  switch (s) {
    case Statement::closed_form:
      tail_tasks(out, {2, 3}, {1, 2}, n_max, check_closed_form);
      break;
    case Statement::recursive_form:
      tail_tasks(out, {1, 2, 3}, {1, 2, 3}, n_max, check_recursive_form);
      break;
    case Statement::power_product:
      for (int p = 1; p <= 3; ++p)
        for (int m = 0; m <= 2 * n_max + 2; ++m)
          for (int n = 0; m + n <= 2 * n_max + 2; ++n) out.emplace_back([=] { return check_power_product(m, n, p); });
      break;
    case Statement::head_power:
      for (int head : {2, 3})
        for (int p : {1, 2})
          for (int k = 0; k <= 2; ++k)
            for (int m = 0; m <= n_max + 1; ++m)
              out.emplace_back([=] { return check_head_power(head, p, k, m); });
      break;
    case Statement::split_formula: {
      const auto indices = all_indices(0, n_max, 3);
      for (const Index& left : indices) {
        if (left.depth() == 0) continue;
        for (const Index& right : indices)
          for (int j = 1; j <= static_cast<int>(left.depth()); ++j)
            out.emplace_back([=] { return check_split(left, right, j); });
      }
      break;
    }
    case Statement::alternating_sum:
      for (int p : {1, 2})
        for (int k = 1; k <= 2 * n_max + 2; ++k) out.emplace_back([=] { return check_alternating_sum(p, k); });
      break;
    case Statement::combinatorial:
    case Statement::classical_reduction: {
      const auto indices = all_indices(0, n_max, 3);
      const bool combinatorial = s == Statement::combinatorial;
      for (const Index& left : indices)
        for (const Index& right : indices)
          out.emplace_back([=] {
            return combinatorial ? check_combinatorial(left, right) : check_classical_reduction(left, right);
          });
      break;
    }
    case Statement::factorial_identity:
      for (int k = 2; k <= 4 * n_max; k += 2) out.emplace_back([=] { return check_factorial_identity(k); });
      break;
    case Statement::zeta8_identity:
      for (int l = 1; l <= n_max; ++l) out.emplace_back([=] { return check_zeta8_identity(l); });
      break;
    case Statement::numeric_decomposition: {
      const int tail = std::min(n_max, 1);
      for (int m : {2, 3})
        for (int u : {2, 3})
          for (int p : {1, 2})
            for (int n = 0; n <= tail; ++n)
              for (int v = 0; v <= tail; ++v)
                for (double t0 : {0.0, 0.5, 1.0})
                  out.emplace_back([=] {
                    return check_numeric_decomposition({m, u, p, n, v}, t0, thread_evaluator(cutoff),
                                                       kCrossFormTolerance);
                  });
      break;
    }
    case Statement::box_map:
      for (const Index& idx : all_indices(1, std::min(n_max + 1, 4), 7)) {
        if (!idx.admissible() || idx.weight() > 8) continue;
        for (double t0 : {0.0, 0.5, 1.0, -1.0})
          out.emplace_back(
              [=] { return check_box_map(idx, t0, thread_evaluator(cutoff), kSameTruncationTolerance); });
      }
      break;
    case Statement::alternating_zeta:
      for (int p : {2, 3})
        for (int k = 2; k <= 2 * n_max; k += 2)
          for (double t0 : {0.0, 1.0})
            out.emplace_back([=] {
              return check_alternating_zeta(p, k, t0, thread_evaluator(cutoff), kAlternatingTolerance);
            });
      break;
  }
  return out;
}

std::vector<VerifyReport> run_tasks(const Tasks& tasks, unsigned threads) {
  std::vector<VerifyReport> results(tasks.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<VerifyReport> run_sweep(Statement s, const SweepOptions& opt) {
  return run_tasks(sweep_tasks(s, opt), opt.threads);
}

unsigned threads_from_env(unsigned fallback) {
  const char* raw = std::getenv("TMZV_THREADS");
  if (raw == nullptr) return fallback;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0) return fallback;
  return static_cast<unsigned>(value);
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << statement_name(r.statement);
  for (const auto& [name, value] : r.params) os << ' ' << name << '=' << value;
  if (const auto* w = std::get_if<NumericWitness>(&r.witness)) {
    os.precision(12);
    os << "  lhs=" << w->lhs << " rhs=" << w->rhs << " diff=" << w->diff << " t=" << w->t
       << " cutoff=" << w->cutoff;
  } else if (const auto* w = std::get_if<ScalarWitness>(&r.witness)) {
    os << "\n  lhs: " << w->lhs << "\n  rhs: " << w->rhs;
  } else if (const auto* w = std::get_if<ElementWitness>(&r.witness)) {
    os << "\n  lhs: " << to_text(w->lhs) << "\n  rhs: " << to_text(w->rhs);
  }
  return os.str();
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json out = ordered_json::array();
  for (const VerifyReport& r : reports) {
    ordered_json item;
    item["statement"] = statement_name(r.statement);
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    item["params"] = params;
    item["pass"] = r.pass;
    if (const auto* w = std::get_if<NumericWitness>(&r.witness)) {
      item["witness"] = {{"lhs", w->lhs}, {"rhs", w->rhs}, {"diff", w->diff}, {"t", w->t}, {"cutoff", w->cutoff}};
    } else if (const auto* w = std::get_if<ScalarWitness>(&r.witness)) {
      item["witness"] = {{"lhs", w->lhs}, {"rhs", w->rhs}};
    } else if (const auto* w = std::get_if<ElementWitness>(&r.witness)) {
      item["witness"] = {{"lhs", ordered_json::parse(to_json(w->lhs))}, {"rhs", ordered_json::parse(to_json(w->rhs))}};
    }
    out.push_back(std::move(item));
  }
  return out.dump(2);
}

}  // namespace tmzv
