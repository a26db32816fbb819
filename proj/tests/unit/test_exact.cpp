#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circlehilb/error.hpp"
#include "circlehilb/polynomial.hpp"
#include "circlehilb/rational.hpp"
#include "circlehilb/rational_function.hpp"
#include "oracles.hpp"

using namespace circlehilb;

namespace {

Polynomial P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial::from_dense(c);
}

Rational Q(const char* s) { return parse_rational(s); }

std::vector<Rational> R(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto* s : xs) out.push_back(Q(s));
  return out;
}

// Taylor coefficients of num/den by long division, no reduction.
std::vector<Rational> naive_series(const Polynomial& num, const Polynomial& den, std::size_t order) {
  auto n = dense(num), d = dense(den);
  n.resize(order + 1, Rational(0));
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    Rational acc = n[i];
    for (std::size_t j = 1; j <= i && j < d.size(); ++j) acc -= d[j] * out[i - j];
    out[i] = acc / d[0];
  }
  return out;
}

RationalFunction random_factored(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 6), cnt(1, 3), coef(0, 3), len(1, 5);
  FactoredDenominator den;
  for (int i = cnt(rng); i > 0; --i) den.push_back({deg(rng), 1});
  std::vector<Rational> num;
  for (int i = len(rng); i > 0; --i) num.emplace_back(coef(rng));
  num[0] = 1;
  return RationalFunction::from_factored(Polynomial::from_dense(num), den);
}

}  // namespace

TEST_CASE("rational canonical form and text") {
  CHECK(to_string(frac(6, 15)) == "2/5");
  CHECK(to_string(frac(4, -2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(frac(0, 7).get_den() == 1);
  CHECK(parse_rational(" -6/15 ") == frac(-2, 5));
  CHECK(parse_rational("+3") == 3);
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(frac(1, 0), ZeroDenominator);
  CHECK(pow(frac(2, 3), -2) == frac(9, 4));
  CHECK_THROWS_AS(pow(Rational(0), -1), ZeroBase);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(5, 7) == 0);
  CHECK(gcd_of({}) == 0);
  CHECK(gcd_of({-4, 6}) == 2);
  CHECK_THROWS_AS(checked_lcm(INT64_C(1) << 40, (INT64_C(1) << 40) - 1), DegreeOverflow);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial a = P({1, 0, -1});
  CHECK(a.degree() == 2);
  CHECK(Polynomial().degree() == kMinusInfinity);
  CHECK((a - a).is_zero());
  CHECK((a - a).term_count() == 0);
  auto [q, r] = divmod(a, P({1, -1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({1, 0, -1}), P({1, -2, 1})) == P({-1, 1}));
  CHECK(reversed(P({0, 1, 2})) == P({2, 1}));
  CHECK(a.evaluate(3) == -8);
  CHECK(a.substitute_power(3) == one_minus_t_pow(6));
  CHECK(LaurentPolynomial::monomial(-2, 3).evaluate(2) == frac(3, 4));
  CHECK_THROWS(Polynomial::monomial(-1));
  CHECK_THROWS_AS(exact_divide(P({1, 1}), P({1, -1})), InternalInvariantViolation);
}

TEST_CASE("reduce examples") {
  auto f = RationalFunction::reduce(one_minus_t_pow(2), one_minus_t_pow(1));
  CHECK(f.numerator() == P({1, 1}));
  CHECK(f.denominator() == P({1}));

  auto g = RationalFunction::reduce(1, one_minus_t_pow(2) * one_minus_t_pow(4));
  CHECK(g.numerator() == P({1}));
  REQUIRE(g.factored_denominator());
  CHECK(*g.factored_denominator() == FactoredDenominator{{2, 1}, {4, 1}});

  auto h = RationalFunction::reduce(P({2, -2}), P({4, -4}));
  CHECK(h.numerator() == P({1}) * frac(1, 2));
  CHECK(h.denominator() == P({1}));

  CHECK_THROWS_AS(RationalFunction::reduce(1, Polynomial()), ZeroDenominator);
}

TEST_CASE("reduced denominators have constant term one") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto f = random_factored(rng);
    CHECK(f.denominator().constant_term() == 1);
    CHECK(gcd(f.numerator(), f.denominator()).degree() == 0);
  }
}

TEST_CASE("series_at_zero examples") {
  CHECK(series_at_zero(RationalFunction::reduce(1, one_minus_t_pow(1)), 3) == R({"1", "1", "1", "1"}));
  auto f = RationalFunction::reduce(1, one_minus_t_pow(3) * one_minus_t_pow(4));
  auto got = series_at_zero(f, 7);
  CHECK(got == R({"1", "0", "0", "1", "1", "0", "1", "1"}));
  for (std::size_t m = 0; m <= 7; ++m) {
    int solutions = 0;
    for (int a = 0; 3 * a <= static_cast<int>(m); ++a)
      if ((m - 3 * a) % 4 == 0) ++solutions;
    CHECK(got[m] == solutions);
  }
  auto g = RationalFunction::reduce(P({1, 1}), P({1, -1}).pow(2));
  CHECK(series_at_zero(g, 3) == R({"1", "3", "5", "7"}));
  CHECK_THROWS_AS(series_at_zero(RationalFunction::reduce(1, P({0, 1})), 3), PoleAtZero);
}

TEST_CASE("series of reduced and unreduced pairs agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 40; ++i) {
    Polynomial common = P({1, c(rng), c(rng)});
    if (common.constant_term() == 0) continue;
    Polynomial num = P({c(rng), c(rng), c(rng), 1}) * common;
    Polynomial den = one_minus_t_pow(1 + (i % 4)) * one_minus_t_pow(2) * common;
    auto f = RationalFunction::reduce(num, den);
    CHECK(series_at_zero(f, 25) == naive_series(num, den, 25));
  }
}

TEST_CASE("laurent_at_one examples") {
  auto e1 = laurent_at_one(RationalFunction::reduce(1, one_minus_t_pow(1)), 3);
  CHECK(e1.pole_order == 1);
  CHECK(e1.coefficients == R({"1", "0", "0"}));
  auto e2 = laurent_at_one(RationalFunction::reduce(1, one_minus_t_pow(2)), 4);
  CHECK(e2.pole_order == 1);
  CHECK(e2.coefficients == R({"1/2", "1/4", "1/8", "1/16"}));
  auto e3 = laurent_at_one(RationalFunction::reduce(1, one_minus_t_pow(2) * one_minus_t_pow(4)), 3);
  CHECK(e3.pole_order == 2);
  CHECK(e3.coefficients == R({"1/8", "1/4", "9/32"}));
}

TEST_CASE("laurent_at_one matches a direct expansion in s = 1 - t") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> deg(1, 7), coef(0, 4), len(1, 6), mult(1, 2);
    std::vector<std::pair<std::int64_t, int>> factors;
    FactoredDenominator den;
    for (int j = 1 + i % 3; j > 0; --j) {
      std::int64_t d = deg(rng);
      int m = mult(rng);
      factors.push_back({d, m});
      den.push_back({d, m});
    }
    std::vector<Rational> num;
    for (int j = len(rng); j > 0; --j) num.emplace_back(coef(rng));
    num[0] += 1;
    auto f = RationalFunction::from_factored(Polynomial::from_dense(num), den);
    auto expect = oracle::laurent_of_factored(num, factors, 6);
    auto got = laurent_at_one(f, 6);
    CHECK(got.pole_order == expect.pole);
    CHECK(got.coefficients == expect.coeffs);
  }
}

TEST_CASE("laurent_at_one of a product is the Cauchy product") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto f = random_factored(rng), g = random_factored(rng);
    auto lf = laurent_at_one(f, 5), lg = laurent_at_one(g, 5), lfg = laurent_at_one(f * g, 5);
    CHECK(lfg.pole_order == lf.pole_order + lg.pole_order);
    for (std::size_t m = 0; m < 5; ++m) {
      Rational acc = 0;
      for (std::size_t j = 0; j <= m; ++j) acc += lf.coefficients[j] * lg.coefficients[m - j];
      CHECK(lfg.coefficients[m] == acc);
    }
  }
}

TEST_CASE("laurent expansion of 1/(1 - t^c) begins with the displayed four terms") {
  for (std::int64_t c = 1; c <= 50; ++c) {
    auto e = laurent_at_one(RationalFunction::reduce(1, one_minus_t_pow(c)), 4);
    CHECK(e.pole_order == 1);
    CHECK(e.coefficients[0] == frac(1, c));
    CHECK(e.coefficients[1] == frac(c - 1, 2 * c));
    CHECK(e.coefficients[2] == frac(c * c - 1, 12 * c));
    CHECK(e.coefficients[3] == frac(c * c - 1, 24 * c));
  }
}

TEST_CASE("degree") {
  CHECK(degree(RationalFunction::reduce(1, one_minus_t_pow(5))) == -5);
  CHECK(degree(RationalFunction::reduce(P({1, 0, 0, 1}), P({1, -1}).pow(2))) == 1);
  Polynomial ex = P({1, 0, 0, 1, 0, 0, 1, 0, 0, 2, 1, 1, 2, 1, 1, 1});
  auto f = RationalFunction::from_factored(ex, {{2, 1}, {8, 1}, {15, 1}});
  CHECK(degree(f) == -10);
  CHECK_THROWS_AS(degree(RationalFunction()), ZeroFunction);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    auto a = random_factored(rng), b = random_factored(rng);
    CHECK(degree(a * b) == degree(a) + degree(b));
    CHECK(degree(RationalFunction(1) / a) == -degree(a));
  }
}

TEST_CASE("rational function arithmetic and inversion") {
  auto f = RationalFunction::reduce(P({1, 1}), one_minus_t_pow(3));
  auto g = RationalFunction::reduce(P({2}), one_minus_t_pow(2));
  for (long t : {2, 3, -5}) {
    Rational x(t);
    CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
    CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
    CHECK((f / g).evaluate(x) == f.evaluate(x) / g.evaluate(x));
    CHECK(f.at_inverse().evaluate(x) == f.evaluate(1 / x));
  }
  CHECK((f - f).is_zero());
  CHECK(multiplicity_at_one(one_minus_t_pow(4) * one_minus_t_pow(6)) == 2);
}
