#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "tmzv/rational.hpp"
#include "tmzv/tpoly.hpp"
#include "tmzv/word.hpp"

namespace tmzv {

/// A finite Q[t]-linear combination of words: an element of the
/// noncommutative algebra Q[t]<x, y>.
///
/// Terms are kept in canonical (length-lexicographic) word order and zero
/// coefficients are never stored, so equality is structural.
class Element {
 public:
  using Terms = std::map<Word, TPoly>;

  Element() = default;
  explicit Element(Word w) { add_term(std::move(w), TPoly(1)); }
  Element(Word w, TPoly coeff) { add_term(std::move(w), std::move(coeff)); }

  static Element one() { return Element(Word{}); }
  static Element of_index(const Index& idx);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  TPoly coefficient(const Word& w) const;

  /// Accumulates c * w, pruning the entry if it cancels.
  void add_term(Word w, TPoly c);
  void add_term(const Word& w, const TPoly& c, const TPoly& scale);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const TPoly& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= TPoly(-1); }
  friend Element operator*(Element a, const TPoly& c) { return a *= c; }
  friend Element operator*(const TPoly& c, Element a) { return a *= c; }
  /// Concatenation product, extended bilinearly.
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element&, const Element&) = default;

  /// Every stored word lies in H^1.
  bool in_h1() const;

 private:
  Terms terms_;
};

/// Prepends a word to every term.
Element left_multiply(const Word& prefix, const Element& e);

/// Specializes t := t0 in every coefficient (result has constant coefficients).
Element eval_at_t(const Element& e, const Rational& t0);

}  // namespace tmzv
