#include <doctest.h>

#include <numeric>
#include <random>

#include "tmzv/error.hpp"
#include "tmzv/gaussian.hpp"
#include "tmzv/rational.hpp"
#include "tmzv/tpoly.hpp"

using namespace tmzv;

TEST_SUITE("exact-arith") {

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, 7) * Rational(7, 3) == Rational(-1));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(7).str() == "7/1");
  CHECK(Rational(-1, 3) < Rational(1, 4));
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parsing fractions, integers and decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("rational matches machine fractions on random pairs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 300);
  for (int i = 0; i < 500; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    // a/b + c/d and a/b * c/d reduced by hand
    long sn = a * d + c * b, sd = b * d;
    long g = std::gcd(sn, sd);
    CHECK(Rational(a, b) + Rational(c, d) == Rational(sn / g, sd / g));
    long pn = a * c, pd = b * d;
    g = std::gcd(pn, pd);
    if (g == 0) g = 1;
    CHECK(Rational(a, b) * Rational(c, d) == Rational(pn / g, pd / g));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(26).str() == "403291461126605635584000000/1");
  CHECK(binom(4, 2) == Rational(6));
  CHECK(binom(2, 3) == Rational(0));
  CHECK(binom(3, -1) == Rational(0));
  CHECK(binom(-2, 1) == Rational(0));
  CHECK(binom(5, 0) == Rational(1));
  // the relation between central binomials, in its correct direction
  CHECK(binom(6, 3) == Rational(2) * binom(5, 2));
}

TEST_CASE("tpoly ring operations") {
  const TPoly a = TPoly::one_minus_two_t();
  const TPoly b = TPoly::t_squared_minus_t();
  CHECK(a * a == TPoly({1, -4, 4}));
  CHECK((b + TPoly({0, 1, -1})).is_zero());
  CHECK((b + TPoly({0, 1, -1})).degree() == -1);
  CHECK(a.eval(Rational(1, 2)).is_zero());
  CHECK(a.eval(Rational(0)) == Rational(1));
  CHECK(b.eval(Rational(1)) == Rational(0));
  CHECK(a.eval(Rational(1)) == Rational(-1));
  CHECK(a.eval(0.25) == doctest::Approx(0.5));
  CHECK(pow(TPoly::t(), 3) == TPoly({0, 0, 0, 1}));
  CHECK((a * Rational(0)).is_zero());
  CHECK(a.str() == "1 - 2*t");
  CHECK(b.str() == "-t + t^2");
  CHECK(TPoly(Rational(3, 2)).str() == "3/2");
  CHECK(TPoly().str() == "0");
}

TEST_CASE("degree is additive and evaluation is multiplicative") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coeff(-9, 9), deg(0, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> pc, qc;
    for (long d = deg(rng); d >= 0; --d) pc.emplace_back(coeff(rng));
    for (long d = deg(rng); d >= 0; --d) qc.emplace_back(coeff(rng));
    pc.back() = Rational(coeff(rng) | 1);
    qc.back() = Rational(coeff(rng) | 1);
    const TPoly p(pc), q(qc);
    const Rational t0(coeff(rng), 7);
    CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p * q).eval(t0) == p.eval(t0) * q.eval(t0));
  }
}

TEST_CASE("gaussian rationals") {
  CHECK(i_pow(0) == GaussianRational{1, 0});
  CHECK(i_pow(1) == GaussianRational{0, 1});
  CHECK(i_pow(2) == GaussianRational{-1, 0});
  CHECK(i_pow(7) == GaussianRational{0, -1});
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational{-1, 0});
  const GaussianRational z{Rational(1, 2), Rational(-3)};
  CHECK((z * Rational(2)) == GaussianRational{1, -6});
}

}
