#pragma once

#include <string>
#include <string_view>

#include "tmzv/element.hpp"
#include "tmzv/rational.hpp"
#include "tmzv/tpoly.hpp"

namespace tmzv {

// Text: terms joined by " + ", each "(poly) word" with the word in z-notation
// when it ends in y. The zero element prints as "0".
std::string to_text(const Element& e);

// JSON: {"terms":[{"word":"xyy","coeff":["1/1","-2/1"]}, ...]}, terms in
// canonical order, coefficients ascending in t.
std::string to_json(const Element& e);
Element element_from_json(std::string_view json);

// TPoly as a JSON array of "num/den" strings.
std::string to_json(const TPoly& p);
TPoly tpoly_from_json(std::string_view json);

}  // namespace tmzv
