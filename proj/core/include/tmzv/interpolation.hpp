#pragma once

#include "tmzv/element.hpp"
#include "tmzv/rational.hpp"
#include "tmzv/tpoly.hpp"

namespace tmzv {

/// The algebra automorphism x -> x, y -> shift*x + y, applied letterwise.
Element sigma(const Element& e, const TPoly& shift);
/// sigma with shift = t.
Element sigma_t(const Element& e);

/// S(w a) = sigma(w) a and S(1) = 1: sigma on all letters but the last.
Element s_map(const Element& e, const TPoly& shift);
/// S_t, i.e. s_map with shift = t.
Element s_t(const Element& e);
/// S at a numeric parameter value.
inline Element s_at(const Element& e, const Rational& s) { return s_map(e, TPoly(s)); }

}  // namespace tmzv
