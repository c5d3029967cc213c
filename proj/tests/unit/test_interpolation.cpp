#include <doctest.h>

#include "tmzv/interpolation.hpp"
#include "tmzv/stuffle.hpp"
#include "tmzv/sweep.hpp"

using namespace tmzv;

namespace {
Element ew(const char* s) { return Element(Word(s)); }
Element ew(const char* s, TPoly c) { return Element(Word(s), std::move(c)); }
}  // namespace

TEST_SUITE("interpolation") {

TEST_CASE("sigma_t on letters and words") {
  CHECK(sigma_t(ew("y")) == ew("x", TPoly::t()) + ew("y"));
  CHECK(sigma_t(ew("x")) == ew("x"));
  CHECK(sigma_t(ew("xy")) == ew("xx", TPoly::t()) + ew("xy"));
  CHECK(sigma_t(Element::one()) == Element::one());
  CHECK(sigma_t(ew("yy")) == ew("xx", pow(TPoly::t(), 2)) + ew("xy", TPoly::t()) + ew("yx", TPoly::t()) + ew("yy"));
}

TEST_CASE("S_t leaves the last letter alone") {
  CHECK(s_t(ew("xy")) == ew("xy"));
  CHECK(s_t(ew("xyy")) == ew("xxy", TPoly::t()) + ew("xyy"));
  CHECK(s_t(Element::one()) == Element::one());
  CHECK(s_t(ew("y")) == ew("y"));
  CHECK(s_t(ew("x")) == ew("x"));
  CHECK(s_t(ew("yx")) == ew("xx", TPoly::t()) + ew("yx"));
}

TEST_CASE("S_t of a z-word enumerates its contractions") {
  // (2,1,2): contractions (2,1,2), (3,2), (2,3), (5)
  const TPoly t = TPoly::t();
  const Element expected = Element(word_of_index({2, 1, 2})) + Element(word_of_index({3, 2}), t) +
                           Element(word_of_index({2, 3}), t) + Element(word_of_index({5}), t * t);
  CHECK(s_t(Element(word_of_index({2, 1, 2}))) == expected);
}

TEST_CASE("S at t = 0 is the identity") {
  for (const Index& idx : all_indices(0, 4, 3)) {
    const Element e(word_of_index(idx));
    CHECK(eval_at_t(s_t(e), Rational(0)) == e);
    CHECK(s_at(e, Rational(0)) == e);
  }
}

TEST_CASE("S at s then u equals S at s + u on all short words") {
  const std::vector<Rational> values{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  for (int len = 0; len <= 6; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string s;
      for (int i = 0; i < len; ++i) s += (mask >> i) & 1 ? 'y' : 'x';
      const Element e(Word(std::move(s)));
      for (const Rational& a : values)
        for (const Rational& b : values) CHECK(s_at(s_at(e, a), b) == s_at(e, a + b));
    }
  }
}

TEST_CASE("S_t sends the t-stuffle to the classical product") {
  // S_t(a * b) = S_t(a) classical* S_t(b), the algebraic reason the interpolated
  // values multiply; checked with the classical product extended bilinearly.
  auto classical = [](const Element& a, const Element& b) {
    Element out;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms())
        out += (ca * cb) * stuffle_classical(index_of_word(wa), index_of_word(wb));
    return out;
  };
  for (const Index& a : all_indices(1, 2, 3))
    for (const Index& b : all_indices(1, 2, 3)) {
      const Element wa(word_of_index(a)), wb(word_of_index(b));
      CHECK(s_t(stuffle_t(wa, wb)) == classical(s_t(wa), s_t(wb)));
    }
}

TEST_CASE("sigma with a polynomial shift") {
  CHECK(sigma(ew("y"), TPoly({1, 1})) == ew("x", TPoly({1, 1})) + ew("y"));
  CHECK(s_map(ew("yy"), TPoly(2)) == ew("xy", TPoly(2)) + ew("yy"));
}

}
