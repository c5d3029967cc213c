#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tmzv/rational.hpp"

namespace tmzv {

/// Polynomial in the formal parameter t with rational coefficients, stored
/// densely in ascending powers. The zero polynomial has no coefficients and
/// every nonzero polynomial has a nonzero leading coefficient.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long constant) : TPoly(Rational(constant)) {}  // NOLINT
  TPoly(const Rational& constant);                      // NOLINT
  TPoly(std::initializer_list<Rational> ascending);
  explicit TPoly(std::vector<Rational> ascending);

  static TPoly t() { return TPoly{0, 1}; }
  /// 1 - 2t, the coefficient of a merged letter z_{k+l}.
  static TPoly one_minus_two_t() { return TPoly{1, -2}; }
  /// t^2 - t, the coefficient of a merged x-run x^{k+l}.
  static TPoly t_squared_minus_t() { return TPoly{0, -1, 1}; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational eval(const Rational& t0) const;
  double eval(double t0) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const Rational& c);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator-(const TPoly& a);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
  friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }

  friend bool operator==(const TPoly&, const TPoly&) = default;

  /// Human-readable form in ascending powers, e.g. "1 - 2*t", "-t + t^2", "0".
  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

TPoly pow(const TPoly& base, unsigned exponent);

}  // namespace tmzv
