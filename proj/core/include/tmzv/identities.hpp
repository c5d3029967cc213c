#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tmzv/element.hpp"
#include "tmzv/gaussian.hpp"
#include "tmzv/word.hpp"
#include "tmzv/zeta.hpp"

namespace tmzv {

// ---------------------------------------------------------------------------
// Right-hand-side builders
// ---------------------------------------------------------------------------

/// Parameters of the product z_m z_p^n (*) z_u z_p^v.
struct PowerTailParams {
  int m = 2;
  int u = 2;
  int p = 1;
  int n = 0;
  int v = 0;
};

/// z_m z_p^n and z_u z_p^v as words.
Word left_word(const PowerTailParams& q);
Word right_word(const PowerTailParams& q);

/// Sum of z_{a_1}...z_{a_L} over compositions of `weight` into `length`
/// positive multiples of p having exactly `even_count` entries that are even
/// multiples of p. A negative even_count drops that condition. Empty when no
/// composition exists (in particular length 0 with positive weight).
Element composition_sum(long weight, long length, int p, long even_count);

/// Closed binomial/composition form of z_m z_p^n (*) z_u z_p^v.
/// Requires m, u >= 2, p >= 1, n, v >= 0; throws BadParams otherwise.
Element closed_form_rhs(const PowerTailParams& q);

/// Form of the same product in terms of z_p^a (*) z_p^b; m, u, p >= 1.
Element recursive_form_rhs(const PowerTailParams& q);

/// Closed form of z_p^m (*) z_p^n; m, n >= 0, p >= 1.
Element power_product_rhs(int m, int n, int p);

/// Expansion of z_head z_p^k (*) z_p^m over the position of z_head;
/// head >= 2, p >= 1, k, m >= 0.
Element head_power_rhs(int head, int p, int k, int m);

/// Splitting of z_{k_1..k_M} (*) z_{l_1..l_N} at the j-th left letter
/// (1 <= j <= M), with auxiliary products on the prefixes.
Element split_rhs(const Index& left, const Index& right, int j);

/// sum_{m+n=k} (-1)^m z_p^m (*) z_p^n, computed with the product engine.
Element alternating_power_sum(int p, int k);
/// Its closed form: 0 for odd k; for even k
/// (-1)^{k/2} sum_{l1+l2=k/2} (t^2-t)^{l1} (1-2t)^{l2} F(l2), where F(l2) sums
/// all words of length l2 whose entries are even multiples of p adding to kp.
Element alternating_power_sum_rhs(int p, int k);

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

enum class Statement {
  closed_form,
  recursive_form,
  power_product,
  head_power,
  split_formula,
  alternating_sum,
  combinatorial,
  classical_reduction,
  factorial_identity,
  zeta8_identity,
  numeric_decomposition,
  box_map,
  alternating_zeta,
};

std::string_view statement_name(Statement s);
std::optional<Statement> statement_from_name(std::string_view name);
const std::vector<Statement>& all_statements();

struct ElementWitness {
  Element lhs;
  Element rhs;
};
struct ScalarWitness {
  std::string lhs;
  std::string rhs;
};
struct NumericWitness {
  double lhs = 0;
  double rhs = 0;
  double diff = 0;
  double t = 0;
  std::uint64_t cutoff = 0;
};
using Witness = std::variant<std::monostate, ElementWitness, ScalarWitness, NumericWitness>;

struct VerifyReport {
  Statement statement{};
  std::vector<std::pair<std::string, long>> params;
  bool pass = false;
  /// Always set on failure; numeric checks set it on success too.
  Witness witness;
};

/// Structural-equality report: pass iff lhs == rhs; the witness is attached on failure.
VerifyReport compare_elements(Statement s, std::vector<std::pair<std::string, long>> params,
                              const Element& lhs, const Element& rhs);

VerifyReport check_closed_form(const PowerTailParams& q);
VerifyReport check_recursive_form(const PowerTailParams& q);
VerifyReport check_power_product(int m, int n, int p);
VerifyReport check_head_power(int head, int p, int k, int m);
VerifyReport check_split(const Index& left, const Index& right, int j);
VerifyReport check_combinatorial(const Index& left, const Index& right);
/// t = 0 specialization of the t-stuffle against the classical stuffle.
VerifyReport check_classical_reduction(const Index& left, const Index& right);
VerifyReport check_alternating_sum(int p, int k);

/// sum_{m+n=k} (-1)^m / ((2m+1)! (2n+1)!) == (-1)^{k/2} 2^{k+1} / (2k+2)!, k even.
VerifyReport check_factorial_identity(int k);
Rational factorial_identity_lhs(int k);
Rational factorial_identity_rhs(int k);

/// sum_{n0+n1+n2+n3=4l} i^{n1+2n2+3n3} / prod (2n_r+1)!
///   == sum_{m=0}^{2l} (-1)^m 2^{4l+2} / ((4m+2)! (8l-4m+2)!),
/// with the left side computed in Q(i); its imaginary part must vanish.
VerifyReport check_zeta8_identity(int l);
GaussianRational zeta8_identity_lhs(int l);
Rational zeta8_identity_rhs(int l);

/// Numeric product decomposition at t0: compares Z^t(z_m z_p^n) Z^t(z_u z_p^v)
/// with Z^t of the t-stuffle and Z^t of closed_form_rhs. Requires m, u >= 2.
VerifyReport check_numeric_decomposition(const PowerTailParams& q, double t0, ZetaEvaluator& zeta,
                                         double tolerance);

/// Box-expansion zeta^t(idx) against Z^t(z_{k_1}...z_{k_n}).
VerifyReport check_box_map(const Index& idx, double t0, ZetaEvaluator& zeta, double tolerance);

/// Z^t of both sides of the alternating power sum identity (p >= 2, k even);
/// at t0 = 0 also against (-1)^{k/2} zeta({2p}^{k/2}) and at t0 = 1 against
/// zeta*({2p}^{k/2}).
VerifyReport check_alternating_zeta(int p, int k, double t0, ZetaEvaluator& zeta,
                                    double tolerance);

}  // namespace tmzv
