#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "circlehilb/laurent_coefficients.hpp"
#include "circlehilb/rational_function.hpp"
#include "circlehilb/schur.hpp"
#include "oracles.hpp"

using namespace circlehilb;

namespace {

std::vector<Rational> V(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Rational all_routes(std::int64_t u, const SplitVariables& s) {
  Rational e = partial_schur_expansion(u, s);
  CHECK(partial_schur_tableaux(u, s) == e);
  CHECK(partial_schur_det(u, s) == e);
  CHECK(oracle::partial_schur(u, s.xs, s.ys) == e);
  return e;
}

}  // namespace

TEST_CASE("vandermonde and alternants") {
  CHECK(vandermonde(V({3, 1})) == 2);
  CHECK(vandermonde(V({5})) == 1);
  CHECK(vandermonde(V({1, 2, 3})) == -2);
  CHECK(alternant(Signature({2, 0}), V({3, 1})) == 8);
  CHECK(alternant(Signature({1, 0}), V({7, 4})) == 3);
  CHECK_THROWS(Signature({0, 1}));
  CHECK_THROWS_AS(alternant(Signature({0, -1}), V({0, 2})), ZeroBase);
}

TEST_CASE("alternant shifting rule") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> part(-4, 5), shift(-3, 3);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::int64_t> p{part(rng), part(rng), part(rng)};
    std::sort(p.rbegin(), p.rend());
    auto xs = oracle::distinct_rationals(rng, 3);
    std::int64_t u = shift(rng);
    std::vector<std::int64_t> q = p;
    for (auto& e : q) e -= u;
    Rational scale = 1;
    for (const auto& x : xs) scale *= oracle::power(x, u);
    CHECK(alternant(Signature(p), xs) == scale * alternant(Signature(q), xs));
  }
}

TEST_CASE("Schur and Laurent-Schur values") {
  CHECK(laurent_schur(Signature({0, 0}), V({2, 3})) == 1);
  CHECK(laurent_schur(Signature({1, 0}), V({2, 3})) == 5);
  CHECK(laurent_schur(Signature({0, -1}), V({2, 3})) == frac(5, 6));
  CHECK(laurent_schur(Signature({1, 0}), V({2, 2})) == 4);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> part(-3, 4);
  for (int i = 0; i < 60; ++i) {
    std::size_t len = 1 + static_cast<std::size_t>(i % 4);
    std::vector<std::int64_t> p;
    for (std::size_t j = 0; j < len; ++j) p.push_back(part(rng));
    std::sort(p.rbegin(), p.rend());
    auto xs = oracle::distinct_rationals(rng, len);
    Rational v = laurent_schur(Signature(p), xs);
    CHECK(schur_jacobi_trudi(Signature(p), xs) == v);
    CHECK(schur_tableaux(Signature(p), xs) == v);
  }
}

TEST_CASE("symmetric functions") {
  CHECK(elementary_symmetric(1, V({-1, -2, 1, 14})) == 12);
  CHECK(elementary_symmetric(2, V({1, 2, 3})) == 11);
  CHECK(elementary_symmetric(0, V({4, 5})) == 1);
  CHECK(elementary_symmetric(3, V({4, 5})) == 0);
  CHECK(complete_symmetric(2, V({1, 2})) == 7);
}

TEST_CASE("partial Schur examples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto pts = oracle::distinct_rationals(rng, 3);
    CHECK(all_routes(0, {{pts[0]}, {pts[1]}}) == 1);
    CHECK(all_routes(1, {{pts[0]}, {pts[1], pts[2]}}) == pts[0]);
    CHECK(all_routes(-2, {{pts[0]}, {pts[1]}}) == 1 / (pts[0] * pts[0]));
  }
  CHECK(all_routes(2, SplitVariables::from_weights({-1, -2, 1, 14})) == -72);
  CHECK(all_routes(1, SplitVariables::from_weights({-1, -2, 1, 14})) == 12);
  CHECK(all_routes(-2, {V({3}), V({5})}) == frac(1, 9));
  CHECK(all_routes(1, {V({3}), V({5, 7})}) == 3);
}

TEST_CASE("routes at repeated points") {
  SplitVariables rep{V({-1, -1}), V({1})};
  CHECK(partial_schur_tableaux(0, rep) == partial_schur_expansion(0, rep));
  CHECK_THROWS_AS(partial_schur_det(0, rep), RepeatedVariables);
  SplitVariables ones{V({1, 1}), V({1})};
  CHECK(partial_schur_tableaux(0, ones) == partial_schur_expansion(0, ones));
}

TEST_CASE("continuity at repeats through an exact perturbation") {
  RationalFunction eps(Polynomial::monomial(1));
  struct Case {
    std::int64_t u;
    std::vector<long> xs, ys;
  };
  std::vector<Case> cases{{0, {-1, -1}, {1}}, {1, {-1, -1}, {1, 3}}, {-1, {2, 2}, {1, 5}}, {2, {-3, -3, -3}, {1}},
                          {0, {2}, {3, 3}},   {-2, {-1, -1}, {4}}};
  for (const auto& c : cases) {
    std::vector<RationalFunction> xs, ys;
    for (std::size_t i = 0; i < c.xs.size(); ++i) xs.push_back(RationalFunction(c.xs[i]) + RationalFunction(static_cast<long>(i)) * eps);
    for (std::size_t i = 0; i < c.ys.size(); ++i) ys.push_back(RationalFunction(c.ys[i]) + RationalFunction(static_cast<long>(i)) * eps);
    RationalFunction perturbed = partial_schur_det_over(c.u, xs, ys);
    std::vector<Rational> qx(c.xs.begin(), c.xs.end()), qy(c.ys.begin(), c.ys.end());
    CHECK(perturbed.evaluate(0) == partial_schur_expansion(c.u, {qx, qy}));
  }
}

TEST_CASE("block symmetry") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    std::size_t k = 1 + static_cast<std::size_t>(i % 3), m = 1 + static_cast<std::size_t>((i / 3) % 3);
    auto xs = oracle::distinct_rationals(rng, k);
    auto ys = oracle::distinct_rationals(rng, m);
    std::int64_t u = static_cast<std::int64_t>(k + m) - 2 - (i % 4);
    Rational base = partial_schur(u, {xs, ys});
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    CHECK(partial_schur(u, {xs, ys}) == base);
  }
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    std::size_t k = 1 + static_cast<std::size_t>(i % 3), m = 1 + static_cast<std::size_t>((i / 3) % 3);
    auto xs = oracle::distinct_rationals(rng, k);
    auto ys = oracle::distinct_rationals(rng, m);
    std::int64_t u = static_cast<std::int64_t>(k + m) - 2 - (i % 5);
    Rational c = oracle::random_rational(rng);
    auto sx = xs, sy = ys;
    for (auto& x : sx) x *= c;
    for (auto& y : sy) y *= c;
    std::int64_t deg = static_cast<std::int64_t>((m - 1) * (k - 1)) + u;
    CHECK(partial_schur(u, {sx, sy}) == oracle::power(c, deg) * partial_schur(u, {xs, ys}));
  }
}

TEST_CASE("symbolic partial Schur") {
  std::mt19937_64 rng(6);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::int64_t u = -2; u <= static_cast<std::int64_t>(k + m) - 2; ++u) {
        auto p = partial_schur_symbolic(u, k, m);
        auto pts = oracle::distinct_rationals(rng, k + m);
        SplitVariables s{{pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k)},
                         {pts.begin() + static_cast<std::ptrdiff_t>(k), pts.end()}};
        CHECK(evaluate(p, pts) == partial_schur_det(u, s));
      }
    }
  }
  auto x1 = partial_schur_symbolic(1, 1, 2);
  CHECK(x1 == MultiLaurent{{{1, 0, 0}, Rational(1)}});
  auto a = alternant_symbolic(Signature({1, 0}), 2);
  CHECK(a == MultiLaurent{{{1, 0}, Rational(1)}, {{0, 1}, Rational(-1)}});
  CHECK_THROWS(partial_schur_symbolic(0, 4, 3));
}

TEST_CASE("domain errors and conventions") {
  CHECK_THROWS_AS(partial_schur_expansion(3, {V({1}), V({2, 3})}), OutOfRange);
  CHECK_THROWS_AS(partial_schur_expansion(-1, {V({0}), V({2})}), ZeroBase);
  CHECK(partial_schur_expansion(0, {{}, V({2, 3})}) == 0);
  CHECK(partial_schur_of(0, {2, 3}) == 0);
  std::vector<Rational> many(6, Rational(1));
  CHECK_THROWS_AS(partial_schur_tableaux(0, {many, many}), CombinatorialExplosion);
}
