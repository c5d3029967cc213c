#pragma once

#include <string>

#include "tmzv/rational.hpp"

namespace tmzv {

/// Element of Q(i): re + im * sqrt(-1) with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  static GaussianRational i() { return {0, 1}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const GaussianRational& a, const Rational& c) {
    return {a.re * c, a.im * c};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;
};

/// sqrt(-1)^n for any integer n >= 0.
GaussianRational i_pow(unsigned n);

}  // namespace tmzv
