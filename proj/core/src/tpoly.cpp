#include "tmzv/tpoly.hpp"

#include <algorithm>
#include <utility>

namespace tmzv {

TPoly::TPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

TPoly::TPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }

TPoly::TPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

void TPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational TPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational TPoly::eval(const Rational& t0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t0;
    acc += *it;
  }
  return acc;
}

double TPoly::eval(double t0) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + it->to_double();
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

TPoly operator-(const TPoly& a) {
  TPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(out));
}

TPoly pow(const TPoly& base, unsigned exponent) {
  TPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::string TPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mag_text = mag.is_integer() ? mag.numerator().get_str() : mag.str();
    if (d == 0) {
      out += mag_text;
      continue;
    }
    if (mag != Rational(1)) out += mag_text + "*";
    out += "t";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace tmzv
