#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tmzv/element.hpp"
#include "tmzv/word.hpp"

namespace tmzv {

struct EvalConfig {
  /// Upper bound M for the outermost summation variable.
  std::uint64_t cutoff = 100000;
  /// Value substituted for t.
  double t = 0.0;
};

/// Truncated multiple zeta sums
///
///   zeta_M(k_1..k_n)  = sum_{M >= m_1 > ... > m_n >= 1} prod m_i^{-k_i}
///   zeta*_M(k_1..k_n) = same with >= between the m_i,
///
/// evaluated innermost-first with running prefix sums in O(n M) time. Values
/// are memoized per index, so one evaluator should be reused across an
/// identity check. Not thread-safe.
class ZetaEvaluator {
 public:
  explicit ZetaEvaluator(std::uint64_t cutoff);

  std::uint64_t cutoff() const { return cutoff_; }

  /// Throws Divergent for non-admissible nonempty indices. The empty index gives 1.
  double mzv(const Index& idx);
  double mzv_star(const Index& idx);

  /// sum over the 2^{n-1} contractions p of idx of t^{n - dep(p)} zeta(p).
  double zeta_t_boxes(const Index& idx, double t);

  /// Z^t: applies S_t, specializes t, and evaluates each word as a zeta value.
  /// Throws NotInH0 if a word with nonzero coefficient is not admissible.
  double z_t_eval(const Element& e, double t);

 private:
  double nested_sum(const Index& idx, bool strict);
  const std::vector<double>& inverse_powers(int k);

  std::uint64_t cutoff_;
  std::map<int, std::vector<double>> inverse_powers_;
  std::map<std::pair<std::vector<int>, bool>, double> values_;
};

double mzv(const Index& idx, const EvalConfig& cfg);
double mzv_star(const Index& idx, const EvalConfig& cfg);
double zeta_t_boxes(const Index& idx, const EvalConfig& cfg);
double z_t_eval(const Element& e, const EvalConfig& cfg);

}  // namespace tmzv
