#include "tmzv/serialize.hpp"

#include <json.hpp>

#include "tmzv/error.hpp"

namespace tmzv {

using nlohmann::json;

namespace {

json coeff_array(const TPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

TPoly coeff_from(const json& arr) {
  if (!arr.is_array()) throw ParseError("coefficient must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : arr) {
    if (!c.is_string()) throw ParseError("coefficient entries must be \"num/den\" strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return TPoly(std::move(coeffs));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string to_text(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ") " + z_notation(w);
  }
  return out;
}

std::string to_json(const Element& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"word", w.letters()}, {"coeff", coeff_array(c)}});
  return json{{"terms", terms}}.dump();
}

Element element_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("element JSON needs a \"terms\" array");
  }
  Element out;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("word") || !term["word"].is_string() || !term.contains("coeff")) {
      throw ParseError("element term needs \"word\" and \"coeff\"");
    }
    try {
      out.add_term(Word(term["word"].get<std::string>()), coeff_from(term["coeff"]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

std::string to_json(const TPoly& p) { return coeff_array(p).dump(); }

TPoly tpoly_from_json(std::string_view text) { return coeff_from(parse_json(text)); }

}  // namespace tmzv
