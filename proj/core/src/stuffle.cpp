#include "tmzv/stuffle.hpp"

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmzv/error.hpp"

namespace tmzv {

struct ProductEngine::Cache {
  std::unordered_map<std::string, Element> table;
};

ProductEngine::ProductEngine(ProductKind kind, bool memoize)
    : kind_(kind), memoize_(memoize), cache_(std::make_unique<Cache>()) {}
ProductEngine::~ProductEngine() = default;
ProductEngine::ProductEngine(ProductEngine&&) noexcept = default;
ProductEngine& ProductEngine::operator=(ProductEngine&&) noexcept = default;

std::size_t ProductEngine::cache_size() const { return cache_->table.size(); }
void ProductEngine::clear_cache() { cache_->table.clear(); }

namespace {

void require_h1(const Word& w) {
  if (!w.in_h1()) throw NotInH1("product operand not in H^1: '" + w.letters() + "'");
}

// Appends coeff * prefix * e to out.
void accumulate(Element& out, const std::string& prefix, const Element& e, const TPoly* coeff) {
  for (const auto& [w, c] : e.terms()) {
    Word word(prefix + w.letters());
    if (coeff) {
      out.add_term(std::move(word), c * *coeff);
    } else {
      out.add_term(std::move(word), c);
    }
  }
}

}  // namespace

Element ProductEngine::multiply(const Word& a, const Word& b) {
  require_h1(a);
  require_h1(b);
  if (memoize_) return product(a.letters(), b.letters());
  // Unmemoized: a scratch table local to this call, keyed on the ordered pair,
  // so no result is ever reused across argument orders.
  Element out = product(a.letters(), b.letters());
  cache_->table.clear();
  return out;
}

Element ProductEngine::multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms()) {
    require_h1(wa);
    for (const auto& [wb, cb] : b.terms()) {
      require_h1(wb);
      const TPoly c = ca * cb;
      accumulate(out, {}, product(wa.letters(), wb.letters()), &c);
    }
  }
  if (!memoize_) cache_->table.clear();
  return out;
}

const Element& ProductEngine::product(std::string_view a, std::string_view b) {
  std::string key;
  key.reserve(a.size() + b.size() + 1);
  if (memoize_ && b < a) std::swap(a, b);
  key.append(a).push_back('|');
  key.append(b);
  if (auto it = cache_->table.find(key); it != cache_->table.end()) return it->second;
  Element value = compute(a, b);
  return cache_->table.emplace(std::move(key), std::move(value)).first->second;
}

Element ProductEngine::compute(std::string_view a, std::string_view b) {
  if (a.empty()) return Element(Word(std::string(b)));
  if (b.empty()) return Element(Word(std::string(a)));

  const std::size_t ka = a.find('y') + 1;
  const std::size_t kb = b.find('y') + 1;
  const std::string_view tail_a = a.substr(ka);
  const std::string_view tail_b = b.substr(kb);
  const std::string head_a(a.substr(0, ka));
  const std::string head_b(b.substr(0, kb));

  static const TPoly merge_z = TPoly::one_minus_two_t();
  static const TPoly merge_x = TPoly::t_squared_minus_t();

  Element out;
  // Take references only after the recursive calls that might insert into the
  // table; unordered_map references survive rehashing.
  const Element& first = product(tail_a, b);
  accumulate(out, head_a, first, nullptr);
  const Element& second = product(a, tail_b);
  accumulate(out, head_b, second, nullptr);

  const Element& both = product(tail_a, tail_b);
  const std::size_t merged = ka + kb;  // z_k z_l weights add: x^{k+l-1} y
  accumulate(out, std::string(merged - 1, 'x') + 'y', both, &merge_z);
  const bool suppress = kind_ == ProductKind::t_stuffle && tail_a.empty() && tail_b.empty();
  if (!suppress) accumulate(out, std::string(merged, 'x'), both, &merge_x);
  return out;
}

namespace {

ProductEngine& thread_engine(ProductKind kind) {
  thread_local ProductEngine t_engine(ProductKind::t_stuffle);
  thread_local ProductEngine o_engine(ProductKind::o_stuffle);
  return kind == ProductKind::t_stuffle ? t_engine : o_engine;
}

}  // namespace

Element stuffle_t(const Word& a, const Word& b) { return thread_engine(ProductKind::t_stuffle).multiply(a, b); }
Element stuffle_t(const Element& a, const Element& b) {
  return thread_engine(ProductKind::t_stuffle).multiply(a, b);
}
Element stuffle_o(const Word& a, const Word& b) { return thread_engine(ProductKind::o_stuffle).multiply(a, b); }
Element stuffle_o(const Element& a, const Element& b) {
  return thread_engine(ProductKind::o_stuffle).multiply(a, b);
}

void clear_product_caches() {
  thread_engine(ProductKind::t_stuffle).clear_cache();
  thread_engine(ProductKind::o_stuffle).clear_cache();
}

// ---------------------------------------------------------------------------
// Classical stuffle on integer sequences.
// ---------------------------------------------------------------------------

namespace {

using Counts = std::map<std::vector<int>, long>;

Counts classical(std::span<const int> a, std::span<const int> b) {
  if (a.empty()) return {{std::vector<int>(b.begin(), b.end()), 1}};
  if (b.empty()) return {{std::vector<int>(a.begin(), a.end()), 1}};
  Counts out;
  auto prepend_all = [&out](int head, const Counts& tail) {
    for (const auto& [parts, n] : tail) {
      std::vector<int> w;
      w.reserve(parts.size() + 1);
      w.push_back(head);
      w.insert(w.end(), parts.begin(), parts.end());
      out[w] += n;
    }
  };
  prepend_all(a.front(), classical(a.subspan(1), b));
  prepend_all(b.front(), classical(a, b.subspan(1)));
  prepend_all(a.front() + b.front(), classical(a.subspan(1), b.subspan(1)));
  return out;
}

}  // namespace

Element stuffle_classical(const Index& a, const Index& b) {
  Element out;
  for (const auto& [parts, n] : classical(a.parts(), b.parts())) {
    out.add_term(word_of_index(Index(parts)), TPoly(n));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block enumeration.
// ---------------------------------------------------------------------------

Element stuffle_combinatorial(const Index& a, const Index& b) {
  const auto& ka = a.parts();
  const auto& kb = b.parts();

  struct State {
    std::size_t pos_a;
    std::size_t pos_b;
    std::vector<int> parts;
    unsigned pair_blocks;    // exponent of (1-2t)
    unsigned fused_pairs;    // exponent of (t^2-t)
  };

  // (exponent of (1-2t), exponent of (t^2-t)) -> multiplicity of each word
  std::map<std::pair<unsigned, unsigned>, std::map<std::vector<int>, long>> buckets;

  std::vector<State> stack;
  stack.push_back({0, 0, {}, 0, 0});
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    if (s.pos_a == ka.size() && s.pos_b == kb.size()) {
      buckets[{s.pair_blocks, s.fused_pairs}][s.parts] += 1;
      continue;
    }
    // r fused pairs, then a terminator.
    int fused_weight = 0;
    for (std::size_t r = 0; s.pos_a + r <= ka.size() && s.pos_b + r <= kb.size(); ++r) {
      if (r > 0) fused_weight += ka[s.pos_a + r - 1] + kb[s.pos_b + r - 1];
      const std::size_t na = s.pos_a + r;
      const std::size_t nb = s.pos_b + r;
      const auto fused = static_cast<unsigned>(r);
      auto push = [&](std::size_t pa, std::size_t pb, int weight, unsigned pairs) {
        State next{pa, pb, s.parts, s.pair_blocks + pairs, s.fused_pairs + fused};
        next.parts.push_back(weight);
        stack.push_back(std::move(next));
      };
      if (na < ka.size()) push(na + 1, nb, fused_weight + ka[na], 0);
      if (nb < kb.size()) push(na, nb + 1, fused_weight + kb[nb], 0);
      if (na < ka.size() && nb < kb.size()) push(na + 1, nb + 1, fused_weight + ka[na] + kb[nb], 1);
    }
  }

  Element out;
  const TPoly merge_z = TPoly::one_minus_two_t();
  const TPoly merge_x = TPoly::t_squared_minus_t();
  for (const auto& [exponents, words] : buckets) {
    const TPoly coeff = pow(merge_z, exponents.first) * pow(merge_x, exponents.second);
    for (const auto& [parts, n] : words) out.add_term(word_of_index(Index(parts)), coeff * Rational(n));
  }
  return out;
}

}  // namespace tmzv
