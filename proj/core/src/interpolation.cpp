#include "tmzv/interpolation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tmzv {

namespace {

// Expands the letters [0, limit) of w under y -> shift*x + y; letters from
// `limit` on are copied unchanged. Each y of the prefix is a binary choice.
void expand(const Word& w, std::size_t limit, const TPoly& coeff, const TPoly& shift, Element& out) {
  struct Partial {
    std::string letters;
    unsigned shifted;
  };
  std::vector<Partial> partial{{std::string(), 0}};
  partial.front().letters.reserve(w.size());
  const std::string& src = w.letters();
  for (std::size_t i = 0; i < limit; ++i) {
    if (src[i] == 'x') {
      for (auto& p : partial) p.letters.push_back('x');
      continue;
    }
    const std::size_t n = partial.size();
    partial.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      Partial as_x = partial[j];
      as_x.letters.push_back('x');
      ++as_x.shifted;
      partial[j].letters.push_back('y');
      partial.push_back(std::move(as_x));
    }
  }
  std::vector<TPoly> powers{TPoly(1)};
  for (auto& p : partial) {
    while (powers.size() <= p.shifted) powers.push_back(powers.back() * shift);
    p.letters.append(src, limit, std::string::npos);
    out.add_term(Word(std::move(p.letters)), coeff * powers[p.shifted]);
  }
}

}  // namespace

Element sigma(const Element& e, const TPoly& shift) {
  Element out;
  for (const auto& [w, c] : e.terms()) expand(w, w.size(), c, shift, out);
  return out;
}

Element sigma_t(const Element& e) { return sigma(e, TPoly::t()); }

Element s_map(const Element& e, const TPoly& shift) {
  Element out;
  for (const auto& [w, c] : e.terms()) expand(w, w.empty() ? 0 : w.size() - 1, c, shift, out);
  return out;
}

Element s_t(const Element& e) { return s_map(e, TPoly::t()); }

}  // namespace tmzv
