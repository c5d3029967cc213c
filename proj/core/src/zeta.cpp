#include "tmzv/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tmzv/error.hpp"
#include "tmzv/interpolation.hpp"

namespace tmzv {

ZetaEvaluator::ZetaEvaluator(std::uint64_t cutoff) : cutoff_(cutoff) {
  if (cutoff == 0) throw std::invalid_argument("cutoff must be positive");
}

const std::vector<double>& ZetaEvaluator::inverse_powers(int k) {
  auto [it, inserted] = inverse_powers_.try_emplace(k);
  if (inserted) {
    auto& table = it->second;
    table.resize(cutoff_ + 1);
    table[0] = 0.0;
    for (std::uint64_t m = 1; m <= cutoff_; ++m) table[m] = std::pow(static_cast<double>(m), -k);
  }
  return it->second;
}

double ZetaEvaluator::nested_sum(const Index& idx, bool strict) {
  if (idx.empty()) return 1.0;
  if (!idx.admissible()) throw Divergent("non-admissible index (" + idx.str() + ")");
  if (idx.depth() > cutoff_) {
    throw std::invalid_argument("cutoff " + std::to_string(cutoff_) + " below depth of (" + idx.str() + ")");
  }
  const auto key = std::make_pair(idx.parts(), strict);
  if (auto it = values_.find(key); it != values_.end()) return it->second;

  // After processing part i (innermost first), acc[m] holds the partial sum
  // over m >= m_i > m_{i+1} > ... (>= for the star variant).
  std::vector<double> acc(cutoff_ + 1, 0.0);
  bool innermost = true;
  const auto& parts = idx.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const auto& inv = inverse_powers(*it);
    double running = 0.0;
    double previous = 0.0;  // inner partial sum at m - 1
    for (std::uint64_t m = 1; m <= cutoff_; ++m) {
      const double inner_here = acc[m];
      const double weight = innermost ? 1.0 : (strict ? previous : inner_here);
      running += inv[m] * weight;
      acc[m] = running;
      previous = inner_here;
    }
    innermost = false;
  }
  const double value = acc[cutoff_];
  values_.emplace(key, value);
  return value;
}

double ZetaEvaluator::mzv(const Index& idx) { return nested_sum(idx, true); }
double ZetaEvaluator::mzv_star(const Index& idx) { return nested_sum(idx, false); }

double ZetaEvaluator::zeta_t_boxes(const Index& idx, double t) {
  if (idx.empty()) return 1.0;
  if (!idx.admissible()) throw Divergent("non-admissible index (" + idx.str() + ")");
  const auto& parts = idx.parts();
  const std::size_t gaps = parts.size() - 1;
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps); ++mask) {
    // bit g set: the box between parts g and g+1 is '+'.
    std::vector<int> contracted{parts.front()};
    int plus = 0;
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask >> g & 1U) {
        contracted.back() += parts[g + 1];
        ++plus;
      } else {
        contracted.push_back(parts[g + 1]);
      }
    }
    total += std::pow(t, plus) * mzv(Index(std::move(contracted)));
  }
  return total;
}

double ZetaEvaluator::z_t_eval(const Element& e, double t) {
  double total = 0.0;
  const Element image = s_t(e);
  for (const auto& [w, c] : image.terms()) {
    const double coeff = c.eval(t);
    if (!w.in_h0()) {
      if (coeff == 0.0) continue;
      throw NotInH0("word not admissible after S_t: '" + w.letters() + "'");
    }
    total += coeff * mzv(index_of_word(w));
  }
  return total;
}

double mzv(const Index& idx, const EvalConfig& cfg) { return ZetaEvaluator(cfg.cutoff).mzv(idx); }
double mzv_star(const Index& idx, const EvalConfig& cfg) { return ZetaEvaluator(cfg.cutoff).mzv_star(idx); }
double zeta_t_boxes(const Index& idx, const EvalConfig& cfg) {
  return ZetaEvaluator(cfg.cutoff).zeta_t_boxes(idx, cfg.t);
}
double z_t_eval(const Element& e, const EvalConfig& cfg) { return ZetaEvaluator(cfg.cutoff).z_t_eval(e, cfg.t); }

}  // namespace tmzv
