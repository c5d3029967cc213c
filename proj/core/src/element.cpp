#include "tmzv/element.hpp"

#include <utility>

namespace tmzv {

Element Element::of_index(const Index& idx) { return Element(word_of_index(idx)); }

TPoly Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? TPoly{} : it->second;
}

void Element::add_term(Word w, TPoly c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_term(const Word& w, const TPoly& c, const TPoly& scale) { add_term(w, c * scale); }

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const TPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff = coeff * c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  }
  return out;
}

bool Element::in_h1() const {
  for (const auto& [w, c] : terms_) {
    if (!w.in_h1()) return false;
  }
  return true;
}

Element left_multiply(const Word& prefix, const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) out.add_term(prefix + w, c);
  return out;
}

Element eval_at_t(const Element& e, const Rational& t0) {
  Element out;
  for (const auto& [w, c] : e.terms()) out.add_term(w, TPoly(c.eval(t0)));
  return out;
}

}  // namespace tmzv
