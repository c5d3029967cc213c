#include "tmzv/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "tmzv/error.hpp"
#include "tmzv/gaussian.hpp"
#include "tmzv/stuffle.hpp"

namespace tmzv {

namespace {

int kron(long a, long b) { return a == b ? 1 : 0; }

Word z_power(int p, int count) { return word_of_index(Index::repeated(p, count)); }

// z_p^l z_b + (1-2t) z_p^{l-1} z_{b+p} + [guard] (t^2-t) z_p^{l-1} x^{b+p},
// with the z_p^{-1} = 0 convention at l = 0.
Element power_bracket(int p, int l, int b, bool guard) {
  Element out(z_power(p, l) + Word::z(b));
  if (l >= 1) {
    out.add_term(z_power(p, l - 1) + Word::z(b + p), TPoly::one_minus_two_t());
    if (guard) out.add_term(z_power(p, l - 1) + Word::x_power(b + p), TPoly::t_squared_minus_t());
  }
  return out;
}

// z_a z_b + z_b z_a + (1-2t) z_{a+b} + [guard] (t^2-t) x^{a+b}
Element swap_bracket(int a, int b, bool guard) {
  Element out(Word::z(a) + Word::z(b));
  out.add_term(Word::z(b) + Word::z(a), TPoly(1));
  out.add_term(Word::z(a + b), TPoly::one_minus_two_t());
  if (guard) out.add_term(Word::x_power(a + b), TPoly::t_squared_minus_t());
  return out;
}

TPoly cell_coefficient(long binomial_top, long binomial_bottom, unsigned i, unsigned j) {
  return TPoly(binom(binomial_top, binomial_bottom)) * pow(TPoly::t_squared_minus_t(), i) *
         pow(TPoly::one_minus_two_t(), j);
}

void collect_compositions(long remaining, long slots, int p, long evens_left, std::vector<int>& current,
                          Element& out) {
  if (slots == 0) {
    if (remaining == 0 && evens_left <= 0) out.add_term(word_of_index(Index(current)), TPoly(1));
    return;
  }
  // each remaining slot needs at least p
  for (long a = p; a <= remaining - p * (slots - 1); a += p) {
    const bool even = (a / p) % 2 == 0;
    if (evens_left >= 0) {
      const long left = evens_left - (even ? 1 : 0);
      if (left < 0 || left > slots - 1) continue;
      current.push_back(static_cast<int>(a));
      collect_compositions(remaining - a, slots - 1, p, left, current, out);
    } else {
      current.push_back(static_cast<int>(a));
      collect_compositions(remaining - a, slots - 1, p, -1, current, out);
    }
    current.pop_back();
  }
}

using Params = std::vector<std::pair<std::string, long>>;

Params tail_params(const PowerTailParams& q) {
  return {{"m", q.m}, {"u", q.u}, {"p", q.p}, {"n", q.n}, {"v", q.v}};
}

Params pair_params(const Index& left, const Index& right) {
  Params out;
  for (std::size_t i = 0; i < left.depth(); ++i) out.emplace_back("k" + std::to_string(i + 1), left.parts()[i]);
  for (std::size_t i = 0; i < right.depth(); ++i) out.emplace_back("l" + std::to_string(i + 1), right.parts()[i]);
  return out;
}

VerifyReport numeric_report(Statement s, Params params, double lhs, double rhs, double t0, std::uint64_t cutoff,
                            double tolerance) {
  VerifyReport r{s, std::move(params), false, {}};
  const double diff = std::abs(lhs - rhs);
  r.pass = diff <= tolerance;
  r.witness = NumericWitness{lhs, rhs, diff, t0, cutoff};
  return r;
}

}  // namespace

Word left_word(const PowerTailParams& q) { return Word::z(q.m) + z_power(q.p, q.n); }
Word right_word(const PowerTailParams& q) { return Word::z(q.u) + z_power(q.p, q.v); }

Element composition_sum(long weight, long length, int p, long even_count) {
  Element out;
  if (p < 1 || length < 0 || weight < 0) return out;
  if (even_count > length) return out;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(length));
  collect_compositions(weight, length, p, even_count, current, out);
  return out;
}

Element closed_form_rhs(const PowerTailParams& q) {
  const auto [m, u, p, n, v] = q;
  if (m < 2 || u < 2 || p < 1 || n < 0 || v < 0) {
    throw BadParams("closed form needs m, u >= 2, p >= 1, n, v >= 0");
  }
  Element out;
  // z_m leads, the run z_p^l of the left operand precedes z_u.
  for (int l = 1; l <= n; ++l) {
    const Element head =
        left_multiply(Word::z(m), power_bracket(p, l, u, !(kron(v, 0) && kron(n, l))));
    for (int k = 0; k <= std::min(v, n - l); ++k) {
      for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        const long len = v + n - l - i - k;
        const Element tail = composition_sum(static_cast<long>(n + v - l) * p, len, p, j);
        if (tail.is_zero()) continue;
        out += cell_coefficient(v + n - l - 2 * k, v - k, i, j) * (head * tail);
      }
    }
  }
  // z_u leads.
  for (int l = 1; l <= v; ++l) {
    const Element head =
        left_multiply(Word::z(u), power_bracket(p, l, m, !(kron(n, 0) && kron(v, l))));
    for (int k = 0; k <= std::min(n, v - l); ++k) {
      for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        const long len = v + n - l - i - k;
        const Element tail = composition_sum(static_cast<long>(n + v - l) * p, len, p, j);
        if (tail.is_zero()) continue;
        out += cell_coefficient(v + n - l - 2 * k, n - k, i, j) * (head * tail);
      }
    }
  }
  // z_m and z_u meet first.
  const Element head = swap_bracket(m, u, !(kron(n, 0) && kron(v, 0)));
  for (int k = 0; k <= std::min(n, v); ++k) {
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      const long len = v + n - i - k;
      const Element tail = composition_sum(static_cast<long>(n + v) * p, len, p, j);
      if (tail.is_zero()) continue;
      out += cell_coefficient(v + n - 2 * k, n - k, i, j) * (head * tail);
    }
  }
  return out;
}

Element recursive_form_rhs(const PowerTailParams& q) {
  const auto [m, u, p, n, v] = q;
  if (m < 1 || u < 1 || p < 1 || n < 0 || v < 0) {
    throw BadParams("recursive form needs m, u, p >= 1, n, v >= 0");
  }
  Element out;
  for (int i = 1; i <= n; ++i) {
    const Element head = left_multiply(Word::z(m), power_bracket(p, i, u, !(kron(v, 0) && kron(n, i))));
    out += head * stuffle_t(z_power(p, v), z_power(p, n - i));
  }
  for (int i = 1; i <= v; ++i) {
    const Element head = left_multiply(Word::z(u), power_bracket(p, i, m, !(kron(n, 0) && kron(v, i))));
    out += head * stuffle_t(z_power(p, n), z_power(p, v - i));
  }
  out += swap_bracket(m, u, !(kron(n, 0) && kron(v, 0))) * stuffle_t(z_power(p, n), z_power(p, v));
  return out;
}

Element power_product_rhs(int m, int n, int p) {
  if (m < 0 || n < 0 || p < 1) throw BadParams("power product needs m, n >= 0, p >= 1");
  Element out;
  for (int k = 0; k <= std::min(m, n); ++k) {
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      const Element words = composition_sum(static_cast<long>(n + m) * p, n + m - i - k, p, j);
      if (words.is_zero()) continue;
      out += cell_coefficient(m + n - 2 * k, m - k, i, j) * words;
    }
  }
  return out;
}

Element head_power_rhs(int head, int p, int k, int m) {
  if (head < 2 || p < 1 || k < 0 || m < 0) throw BadParams("head-power expansion needs head >= 2, p >= 1, k, m >= 0");
  Element out;
  for (int l = 0; l <= m; ++l) {
    out += power_bracket(p, l, head, !(kron(k, 0) && kron(m, l))) * stuffle_t(z_power(p, k), z_power(p, m - l));
  }
  return out;
}

Element split_rhs(const Index& left, const Index& right, int j) {
  const int depth_left = static_cast<int>(left.depth());
  const int depth_right = static_cast<int>(right.depth());
  if (depth_left < 1 || j < 1 || j > depth_left) throw BadParams("split needs a nonempty left index and 1 <= j <= depth");

  const auto& ks = left.parts();
  const auto& ls = right.parts();
  auto slice = [](const std::vector<int>& v, int from, int to) {  // [from, to)
    return word_of_index(Index(std::vector<int>(v.begin() + from, v.begin() + to)));
  };
  const int kj = ks[j - 1];
  const Word prefix = slice(ks, 0, j - 1);
  const Word suffix = slice(ks, j, depth_left);

  Element out;
  for (int i = 0; i <= depth_right; ++i) {
    Element term = stuffle_o(prefix, slice(ls, 0, i)) * Element(Word::z(kj));
    if (i >= 1) {
      const int li = ls[i - 1];
      Element merge(Word::z(kj + li), TPoly::one_minus_two_t());
      if (!(kron(i, depth_right) && kron(j, depth_left))) {
        merge.add_term(Word::x_power(kj + li), TPoly::t_squared_minus_t());
      }
      term += stuffle_o(prefix, slice(ls, 0, i - 1)) * merge;
    }
    out += term * stuffle_t(suffix, slice(ls, i, depth_right));
  }
  return out;
}

Element alternating_power_sum(int p, int k) {
  if (p < 1 || k < 1) throw BadParams("alternating sum needs p, k >= 1");
  Element out;
  for (int m = 0; m <= k; ++m) {
    const Element term = stuffle_t(z_power(p, m), z_power(p, k - m));
    out += (m % 2 == 0) ? term : -term;
  }
  return out;
}

Element alternating_power_sum_rhs(int p, int k) {
  if (p < 1 || k < 1) throw BadParams("alternating sum needs p, k >= 1");
  Element out;
  if (k % 2 == 1) return out;
  const int half = k / 2;
  for (int l1 = 0; l1 <= half; ++l1) {
    const int l2 = half - l1;
    // all entries even multiples of p
    const Element words = composition_sum(static_cast<long>(k) * p, l2, p, l2);
    if (words.is_zero()) continue;
    out += pow(TPoly::t_squared_minus_t(), static_cast<unsigned>(l1)) *
           pow(TPoly::one_minus_two_t(), static_cast<unsigned>(l2)) * words;
  }
  return half % 2 == 0 ? out : -out;
}

// ---------------------------------------------------------------------------

std::string_view statement_name(Statement s) {
  switch (s) {
    case Statement::closed_form: return "closed-form";
    case Statement::recursive_form: return "recursive-form";
    case Statement::power_product: return "power-product";
    case Statement::head_power: return "head-power";
    case Statement::split_formula: return "split";
    case Statement::alternating_sum: return "alternating";
    case Statement::combinatorial: return "combinatorial";
    case Statement::classical_reduction: return "classical";
    case Statement::factorial_identity: return "factorial-identity";
    case Statement::zeta8_identity: return "zeta8";
    case Statement::numeric_decomposition: return "numeric-decomposition";
    case Statement::box_map: return "box-map";
    case Statement::alternating_zeta: return "alternating-zeta";
  }
  return "unknown";
}

const std::vector<Statement>& all_statements() {
  static const std::vector<Statement> all{
      Statement::closed_form,        Statement::recursive_form, Statement::power_product,
      Statement::head_power,         Statement::split_formula,  Statement::alternating_sum,
      Statement::combinatorial,      Statement::classical_reduction, Statement::factorial_identity,
      Statement::zeta8_identity,     Statement::numeric_decomposition, Statement::box_map,
      Statement::alternating_zeta,
  };
  return all;
}

std::optional<Statement> statement_from_name(std::string_view name) {
  for (Statement s : all_statements()) {
    if (statement_name(s) == name) return s;
  }
  return std::nullopt;
}

VerifyReport compare_elements(Statement s, Params params, const Element& lhs, const Element& rhs) {
  VerifyReport r{s, std::move(params), lhs == rhs, {}};
  if (!r.pass) r.witness = ElementWitness{lhs, rhs};
  return r;
}

VerifyReport check_closed_form(const PowerTailParams& q) {
  return compare_elements(Statement::closed_form, tail_params(q), stuffle_t(left_word(q), right_word(q)),
                          closed_form_rhs(q));
}

VerifyReport check_recursive_form(const PowerTailParams& q) {
  return compare_elements(Statement::recursive_form, tail_params(q), stuffle_t(left_word(q), right_word(q)),
                          recursive_form_rhs(q));
}

VerifyReport check_power_product(int m, int n, int p) {
  return compare_elements(Statement::power_product, {{"m", m}, {"n", n}, {"p", p}},
                          stuffle_t(z_power(p, m), z_power(p, n)), power_product_rhs(m, n, p));
}

VerifyReport check_head_power(int head, int p, int k, int m) {
  return compare_elements(Statement::head_power, {{"n", head}, {"p", p}, {"k", k}, {"m", m}},
                          stuffle_t(Word::z(head) + z_power(p, k), z_power(p, m)), head_power_rhs(head, p, k, m));
}

VerifyReport check_split(const Index& left, const Index& right, int j) {
  Params params = pair_params(left, right);
  params.emplace_back("j", j);
  return compare_elements(Statement::split_formula, std::move(params),
                          stuffle_t(word_of_index(left), word_of_index(right)), split_rhs(left, right, j));
}

VerifyReport check_combinatorial(const Index& left, const Index& right) {
  return compare_elements(Statement::combinatorial, pair_params(left, right),
                          stuffle_t(word_of_index(left), word_of_index(right)), stuffle_combinatorial(left, right));
}

VerifyReport check_classical_reduction(const Index& left, const Index& right) {
  return compare_elements(Statement::classical_reduction, pair_params(left, right),
                          eval_at_t(stuffle_t(word_of_index(left), word_of_index(right)), Rational(0)),
                          stuffle_classical(left, right));
}

VerifyReport check_alternating_sum(int p, int k) {
  return compare_elements(Statement::alternating_sum, {{"p", p}, {"k", k}}, alternating_power_sum(p, k),
                          alternating_power_sum_rhs(p, k));
}

Rational factorial_identity_lhs(int k) {
  if (k < 2 || k % 2 != 0) throw BadParams("factorial identity needs even k >= 2");
  Rational sum(0);
  for (int m = 0; m <= k; ++m) {
    const Rational term = Rational(1) / (factorial(2 * m + 1) * factorial(2 * (k - m) + 1));
    sum += (m % 2 == 0) ? term : -term;
  }
  return sum;
}

Rational factorial_identity_rhs(int k) {
  if (k < 2 || k % 2 != 0) throw BadParams("factorial identity needs even k >= 2");
  const Rational value = pow(Rational(2), static_cast<unsigned>(k + 1)) / factorial(2 * k + 2);
  return (k / 2) % 2 == 0 ? value : -value;
}

VerifyReport check_factorial_identity(int k) {
  const Rational lhs = factorial_identity_lhs(k);
  const Rational rhs = factorial_identity_rhs(k);
  VerifyReport r{Statement::factorial_identity, {{"k", k}}, lhs == rhs, {}};
  if (!r.pass) r.witness = ScalarWitness{lhs.str(), rhs.str()};
  return r;
}

GaussianRational zeta8_identity_lhs(int l) {
  if (l < 1) throw BadParams("zeta8 identity needs l >= 1");
  const int total = 4 * l;
  std::vector<Rational> inv_odd_fact;
  inv_odd_fact.reserve(static_cast<std::size_t>(total) + 1);
  for (int n = 0; n <= total; ++n) inv_odd_fact.push_back(Rational(1) / factorial(2 * n + 1));

  GaussianRational sum{0, 0};
  for (int n1 = 0; n1 <= total; ++n1) {
    for (int n2 = 0; n1 + n2 <= total; ++n2) {
      for (int n3 = 0; n1 + n2 + n3 <= total; ++n3) {
        const int n0 = total - n1 - n2 - n3;
        const Rational denom_inv = inv_odd_fact[n0] * inv_odd_fact[n1] * inv_odd_fact[n2] * inv_odd_fact[n3];
        sum += i_pow(static_cast<unsigned>(n1 + 2 * n2 + 3 * n3)) * denom_inv;
      }
    }
  }
  return sum;
}

Rational zeta8_identity_rhs(int l) {
  if (l < 1) throw BadParams("zeta8 identity needs l >= 1");
  Rational sum(0);
  const Rational scale = pow(Rational(2), static_cast<unsigned>(4 * l + 2));
  for (int m = 0; m <= 2 * l; ++m) {
    const Rational term = scale / (factorial(4 * m + 2) * factorial(8 * l - 4 * m + 2));
    sum += (m % 2 == 0) ? term : -term;
  }
  return sum;
}

VerifyReport check_zeta8_identity(int l) {
  const GaussianRational lhs = zeta8_identity_lhs(l);
  const Rational rhs = zeta8_identity_rhs(l);
  VerifyReport r{Statement::zeta8_identity, {{"l", l}}, lhs.im.is_zero() && lhs.re == rhs, {}};
  if (!r.pass) r.witness = ScalarWitness{lhs.str(), rhs.str()};
  return r;
}

VerifyReport check_numeric_decomposition(const PowerTailParams& q, double t0, ZetaEvaluator& zeta,
                                         double tolerance) {
  if (q.m < 2 || q.u < 2) throw Divergent("numeric decomposition needs m, u >= 2");
  const Element left(left_word(q));
  const Element right(right_word(q));
  const double product = zeta.z_t_eval(left, t0) * zeta.z_t_eval(right, t0);
  const double direct = zeta.z_t_eval(stuffle_t(left, right), t0);
  const double closed = zeta.z_t_eval(closed_form_rhs(q), t0);
  // report the worst of the three pairings
  const std::array<std::pair<double, double>, 3> pairs{{{product, closed}, {product, direct}, {direct, closed}}};
  auto worst = *std::max_element(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first - a.second) < std::abs(b.first - b.second);
  });
  return numeric_report(Statement::numeric_decomposition, tail_params(q), worst.first, worst.second, t0,
                        zeta.cutoff(), tolerance);
}

VerifyReport check_box_map(const Index& idx, double t0, ZetaEvaluator& zeta, double tolerance) {
  Params params = pair_params(idx, Index{});
  return numeric_report(Statement::box_map, std::move(params), zeta.zeta_t_boxes(idx, t0),
                        zeta.z_t_eval(Element::of_index(idx), t0), t0, zeta.cutoff(), tolerance);
}

VerifyReport check_alternating_zeta(int p, int k, double t0, ZetaEvaluator& zeta, double tolerance) {
  if (p < 2) throw Divergent("alternating zeta identity needs p >= 2");
  if (k < 2 || k % 2 != 0) throw BadParams("alternating zeta identity needs even k >= 2");
  double lhs = 0.0;
  for (int m = 0; m <= k; ++m) {
    const double term = zeta.z_t_eval(Element(z_power(p, m)), t0) * zeta.z_t_eval(Element(z_power(p, k - m)), t0);
    lhs += (m % 2 == 0) ? term : -term;
  }
  const double rhs = zeta.z_t_eval(alternating_power_sum_rhs(p, k), t0);
  double reference = rhs;
  const Index doubled = Index::repeated(2 * p, k / 2);
  if (t0 == 0.0) reference = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * zeta.mzv(doubled);
  if (t0 == 1.0) reference = zeta.mzv_star(doubled);
  const bool worse_reference = std::abs(lhs - reference) > std::abs(lhs - rhs);
  return numeric_report(Statement::alternating_zeta, {{"p", p}, {"k", k}}, lhs, worse_reference ? reference : rhs,
                        t0, zeta.cutoff(), tolerance);
}

}  // namespace tmzv
