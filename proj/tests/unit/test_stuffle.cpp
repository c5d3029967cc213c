#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracle.hpp"
#include "tmzv/error.hpp"
#include "tmzv/stuffle.hpp"
#include "tmzv/sweep.hpp"

using namespace tmzv;

namespace {

Element zw(std::initializer_list<int> parts) { return Element(word_of_index(Index(parts))); }

Element term(std::initializer_list<int> parts, TPoly c) { return Element(word_of_index(Index(parts)), std::move(c)); }

const TPoly A = TPoly::one_minus_two_t();
const TPoly B = TPoly::t_squared_minus_t();

// Sum of c(t0) * truncated t-sum of every word, in exact arithmetic.
Rational exact_value(const Element& e, int cutoff, const Rational& t0) {
  Rational total(0);
  for (const auto& [w, c] : e.terms()) {
    total += c.eval(t0) * oracle::exact_interpolated_sum(index_of_word(w).parts(), cutoff, t0);
  }
  return total;
}

}  // namespace

TEST_SUITE("stuffle") {

TEST_CASE("small products") {
  CHECK(stuffle_t(Word(), Word::z(3)) == Element(Word::z(3)));
  CHECK(stuffle_t(Word::z(3), Word()) == Element(Word::z(3)));
  CHECK(stuffle_t(Word::z(2), Word::z(3)) == zw({2, 3}) + zw({3, 2}) + term({5}, A));
  CHECK(stuffle_t(word_of_index({1, 1}), Word::z(1)) ==
        TPoly(3) * zw({1, 1, 1}) + term({1, 2}, A) + term({2, 1}, A) + term({3}, B));
}

TEST_CASE("auxiliary product keeps the x-merge") {
  CHECK(stuffle_o(Word::z(1), Word::z(1)) == TPoly(2) * zw({1, 1}) + term({2}, A) + Element(Word("xx"), B));
  CHECK(stuffle_o(Word(), Word("xyy")) == Element(Word("xyy")));
  CHECK(stuffle_o(Word::z(2), Word::z(3)) ==
        zw({2, 3}) + zw({3, 2}) + term({5}, A) + Element(Word::x_power(5), B));
}

TEST_CASE("products need words in H^1") {
  CHECK_THROWS_AS(stuffle_t(Word("xyx"), Word::z(1)), NotInH1);
  CHECK_THROWS_AS(stuffle_o(Word::z(1), Word("x")), NotInH1);
  CHECK_THROWS_AS(stuffle_t(Element(Word("yx")), Element(Word::z(1))), NotInH1);
}

TEST_CASE("classical product") {
  CHECK(stuffle_classical({2}, {3}) == zw({2, 3}) + zw({3, 2}) + zw({5}));
  // z_1(z_1 * z_1) + z_1 z_1 z_1 + z_2 z_1; there is no z_3 term at t = 0
  CHECK(stuffle_classical({1, 1}, {1}) == TPoly(3) * zw({1, 1, 1}) + zw({1, 2}) + zw({2, 1}));
  CHECK(stuffle_classical({1, 1}, {1}) == eval_at_t(stuffle_t(word_of_index({1, 1}), Word::z(1)), Rational(0)));
  CHECK(stuffle_classical({}, {2}) == zw({2}));
}

TEST_CASE("combinatorial enumeration") {
  CHECK(stuffle_combinatorial({1, 1}, {1}) == stuffle_t(word_of_index({1, 1}), Word::z(1)));
  CHECK(stuffle_combinatorial({2}, {3}) == zw({2, 3}) + zw({3, 2}) + term({5}, A));
  CHECK(stuffle_combinatorial({4}, {}) == zw({4}));
  CHECK(stuffle_combinatorial({}, {}) == Element::one());
}

TEST_CASE("truncated interpolated sums multiply by the t-stuffle") {
  const auto indices = all_indices(0, 2, 3);
  const std::vector<Rational> ts{Rational(0), Rational(1), Rational(1, 3), Rational(-2)};
  for (const Index& a : indices) {
    for (const Index& b : indices) {
      const Element product = stuffle_t(word_of_index(a), word_of_index(b));
      for (const Rational& t0 : ts) {
        CAPTURE(a.str());
        CAPTURE(b.str());
        CAPTURE(t0.str());
        const Rational lhs = oracle::exact_interpolated_sum(a.parts(), 4, t0) *
                             oracle::exact_interpolated_sum(b.parts(), 4, t0);
        CHECK(lhs == exact_value(product, 4, t0));
      }
    }
  }
}

TEST_CASE("truncated strict sums multiply by the classical product") {
  for (const Index& a : all_indices(1, 2, 3)) {
    for (const Index& b : all_indices(1, 2, 3)) {
      const Rational lhs = oracle::exact_interpolated_sum(a.parts(), 5, Rational(0)) *
                           oracle::exact_interpolated_sum(b.parts(), 5, Rational(0));
      CHECK(lhs == exact_value(stuffle_classical(a, b), 5, Rational(0)));
    }
  }
}

TEST_CASE("t = 0 gives the classical product") {
  for (const Index& a : all_indices(0, 3, 3))
    for (const Index& b : all_indices(0, 2, 3))
      CHECK(eval_at_t(stuffle_t(word_of_index(a), word_of_index(b)), Rational(0)) == stuffle_classical(a, b));
}

TEST_CASE("engines with and without memoization agree") {
  ProductEngine cached(ProductKind::t_stuffle);
  ProductEngine plain(ProductKind::t_stuffle, false);
  for (const Index& a : all_indices(0, 3, 2))
    for (const Index& b : all_indices(0, 3, 2))
      CHECK(cached.multiply(word_of_index(a), word_of_index(b)) == plain.multiply(word_of_index(b), word_of_index(a)));
  CHECK(cached.cache_size() > 0);
  CHECK(plain.cache_size() == 0);
  cached.clear_cache();
  CHECK(cached.cache_size() == 0);
}

TEST_CASE("bilinear extension") {
  const Element a = zw({2}) + term({1}, TPoly::t());
  const Element b = term({3}, A);
  const Element expected = stuffle_t(Word::z(2), Word::z(3)) * A + TPoly::t() * A * stuffle_t(Word::z(1), Word::z(3));
  CHECK(stuffle_t(a, b) == expected);
  CHECK(stuffle_t(Element(), b).is_zero());
}

TEST_CASE("associativity on small triples (empirical)") {
  for (const Index& a : all_indices(1, 2, 2))
    for (const Index& b : all_indices(1, 2, 2))
      for (const Index& c : all_indices(1, 1, 3)) {
        const Element wa(word_of_index(a)), wb(word_of_index(b)), wc(word_of_index(c));
        CHECK(stuffle_t(stuffle_t(wa, wb), wc) == stuffle_t(wa, stuffle_t(wb, wc)));
      }
}

TEST_CASE("classical merges are pairwise sums") {
  // every letter of (k1,k2) * (l1,l2) at t = 0 is a part or a sum k_r + l_s
  const Element prod = stuffle_classical({2, 3}, {4, 5});
  const std::vector<int> allowed{2, 3, 4, 5, 6, 7, 8};
  for (const auto& [w, c] : prod.terms()) {
    const Index idx = index_of_word(w);
    for (int k : idx.parts()) CHECK(std::find(allowed.begin(), allowed.end(), k) != allowed.end());
  }
}

}
