#include "tmzv/properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "tmzv/element.hpp"
#include "tmzv/error.hpp"
#include "tmzv/interpolation.hpp"
#include "tmzv/serialize.hpp"
#include "tmzv/stuffle.hpp"

namespace tmzv {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng) { return Rational(uniform(rng, -40, 40), uniform(rng, 1, 12)); }

TPoly random_tpoly(Rng& rng, int max_degree = 3) {
  std::vector<Rational> c;
  const int degree = uniform(rng, 0, max_degree);
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  return TPoly(std::move(c));
}

TPoly random_nonzero_tpoly(Rng& rng) {
  TPoly p;
  while (p.is_zero()) p = random_tpoly(rng);
  return p;
}

Word random_word(Rng& rng, int max_len) {
  std::string s;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) s += uniform(rng, 0, 1) ? 'y' : 'x';
  return Word(s);
}

Index random_index(Rng& rng, int min_depth, int max_depth, int max_part, bool admissible) {
  std::vector<int> parts;
  const int depth = uniform(rng, min_depth, max_depth);
  for (int i = 0; i < depth; ++i) parts.push_back(uniform(rng, 1, max_part));
  if (admissible && !parts.empty() && parts[0] == 1) parts[0] = uniform(rng, 2, max_part);
  return Index(parts);
}

Element random_element(Rng& rng, int max_terms, int max_len) {
  Element e;
  const int terms = uniform(rng, 0, max_terms);
  for (int i = 0; i < terms; ++i) e.add_term(random_word(rng, max_len), random_tpoly(rng));
  return e;
}

Rational random_shift(Rng& rng) {
  static const Rational choices[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  return choices[uniform(rng, 0, 3)];
}

// A case returns an empty string on success, else a description of the input.
using Case = std::function<std::string(Rng&)>;

std::string rational_laws(Rng& rng) {
  const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
  const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                  a * (b + c) == a * b + a * c;
  return ok ? "" : a.str() + ", " + b.str() + ", " + c.str();
}

std::string tpoly_laws(Rng& rng) {
  const TPoly p = random_nonzero_tpoly(rng), q = random_nonzero_tpoly(rng);
  const Rational t0 = random_rational(rng);
  const bool ok = (p * q).degree() == p.degree() + q.degree() && (p * q).eval(t0) == p.eval(t0) * q.eval(t0) &&
                  (p + q).eval(t0) == p.eval(t0) + q.eval(t0);
  return ok ? "" : p.str() + " | " + q.str() + " at t=" + t0.str();
}

std::string index_round_trip(Rng& rng) {
  const Index idx = random_index(rng, 0, 6, 6, false);
  return index_of_word(word_of_index(idx)) == idx ? "" : idx.str();
}

std::string concatenation_laws(Rng& rng) {
  const Element a = random_element(rng, 3, 4), b = random_element(rng, 3, 4), c = random_element(rng, 3, 4);
  const bool ok = (a * b) * c == a * (b * c) && Element::one() * a == a && a * Element::one() == a;
  return ok ? "" : to_text(a) + " | " + to_text(b) + " | " + to_text(c);
}

std::string stuffle_commutativity(Rng& rng) {
  thread_local ProductEngine plain_t(ProductKind::t_stuffle, false);
  thread_local ProductEngine plain_o(ProductKind::o_stuffle, false);
  const Word a = word_of_index(random_index(rng, 0, 3, 3, false));
  const Word b = word_of_index(random_index(rng, 0, 3, 3, false));
  const bool ok = plain_t.multiply(a, b) == plain_t.multiply(b, a) && plain_o.multiply(a, b) == plain_o.multiply(b, a);
  return ok ? "" : z_notation(a) + " * " + z_notation(b);
}

std::string admissibility_preservation(Rng& rng) {
  const Index a = random_index(rng, 1, 3, 4, true), b = random_index(rng, 1, 3, 4, true);
  const Element product = stuffle_t(word_of_index(a), word_of_index(b));
  for (const auto& [w, c] : product.terms()) {
    if (!w.in_h1() || !index_of_word(w).admissible()) return a.str() + " * " + b.str() + " -> " + w.letters();
  }
  return "";
}

std::string weight_homogeneity(Rng& rng) {
  const Index a = random_index(rng, 0, 3, 4, false), b = random_index(rng, 0, 3, 4, false);
  const Element product = stuffle_t(word_of_index(a), word_of_index(b));
  for (const auto& [w, c] : product.terms()) {
    if (static_cast<long>(w.size()) != a.weight() + b.weight()) return a.str() + " * " + b.str() + " -> " + w.letters();
    if (w.in_h1() && index_of_word(w).weight() != a.weight() + b.weight()) return a.str() + " * " + b.str();
  }
  return "";
}

std::string interpolation_laws(Rng& rng) {
  const Word w = random_word(rng, 6);
  const Element e(w);
  const Element image = s_t(e);
  for (const auto& [v, c] : image.terms()) {
    if (v.size() != w.size() || (!w.empty() && v.letters().back() != w.letters().back())) return w.letters();
  }
  if (w.in_h0()) {
    for (const auto& [v, c] : image.terms())
      if (!v.in_h0()) return "admissibility " + w.letters();
  }
  if (eval_at_t(image, Rational(0)) != e) return "t=0 " + w.letters();
  const Rational s = random_shift(rng), u = random_shift(rng);
  if (s_at(s_at(e, s), u) != s_at(e, s + u)) return "composition " + w.letters() + " s=" + s.str() + " u=" + u.str();
  return "";
}

std::string serialization_round_trip(Rng& rng) {
  const Element e = random_element(rng, 4, 6);
  const TPoly p = random_tpoly(rng, 4);
  const bool ok = element_from_json(to_json(e)) == e && tpoly_from_json(to_json(p)) == p;
  return ok ? "" : to_text(e);
}

const std::vector<std::pair<std::string, Case>>& suites() {
  static const std::vector<std::pair<std::string, Case>> all{
      {"rational-field-laws", rational_laws},
      {"tpoly-degree-and-evaluation", tpoly_laws},
      {"index-word-round-trip", index_round_trip},
      {"concatenation-laws", concatenation_laws},
      {"stuffle-commutativity", stuffle_commutativity},
      {"admissibility-preservation", admissibility_preservation},
      {"weight-homogeneity", weight_homogeneity},
      {"interpolation-laws", interpolation_laws},
      {"serialization-round-trip", serialization_round_trip},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases) {
  const auto& all = suites();
  for (std::size_t pos = 0; pos < all.size(); ++pos) {
    const auto& [suite, fn] = all[pos];
    if (suite != name) continue;
    // distinct streams per suite for the same seed
    std::seed_seq seq{seed, static_cast<std::uint64_t>(pos)};
    Rng rng(seq);
    PropertyResult r{name, cases, 0, {}};
    for (std::size_t i = 0; i < cases; ++i) {
      std::string bad = fn(rng);
      if (bad.empty()) continue;
      if (r.failures++ == 0) r.counterexample = std::move(bad);
    }
    return r;
  }
  throw BadParams("unknown property suite: " + name);
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> out;
  for (const auto& name : property_names()) out.push_back(run_property(name, seed, cases));
  return out;
}

std::string property_to_text(const PropertyResult& r) {
  std::ostringstream os;
  os << (r.pass() ? "PASS " : "FAIL ") << "property " << r.name << " cases=" << r.cases
     << " failures=" << r.failures;
  if (!r.pass()) os << "\n  first: " << r.counterexample;
  return os.str();
}

}  // namespace tmzv
