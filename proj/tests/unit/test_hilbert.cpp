#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "circlehilb/error.hpp"
#include "circlehilb/hilbert.hpp"
#include "oracles.hpp"

using namespace circlehilb;

using W = std::vector<std::int64_t>;

namespace {

Polynomial P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial::from_dense(c);
}

RationalFunction over(const Polynomial& num, FactoredDenominator den) {
  return RationalFunction::from_factored(num, den);
}

RationalFunction series_1_14() {
  return over(P({1, 0, 0, 1, 0, 0, 1, 0, 0, 2, 1, 1, 2, 1, 1, 1}), {{2, 1}, {8, 1}, {15, 1}});
}

// Sorted tuples of nonzero weights in [-m, m] with both signs and gcd 1.
std::vector<W> stable_tuples(std::size_t n, std::int64_t m) {
  std::vector<std::int64_t> pool;
  for (std::int64_t a = -m; a <= m; ++a)
    if (a != 0) pool.push_back(a);
  std::vector<W> out;
  W cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() == n) {
      if (cur.front() < 0 && cur.back() > 0 && gcd_of(cur) == 1) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      go(i);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

HilbertOptions unverified() {
  HilbertOptions o;
  o.verify_depth.reset();
  return o;
}

}  // namespace

TEST_CASE("section examples") {
  CHECK(section({1, {{1, 1}}, 2}) == RationalFunction::reduce(1, one_minus_t_pow(1)));
  CHECK(section({1, {{1, 2}}, 2}) == RationalFunction::reduce(P({1, 1}), P({1, -1}).pow(2)));
  CHECK(section({1, {{2, 1}}, 3}) == RationalFunction::reduce(1, one_minus_t_pow(2)));
}

TEST_CASE("section agrees with coefficient extraction") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(1, 6), n(2, 5), c(0, 2);
  for (int i = 0; i < 40; ++i) {
    SectionProblem p{P({1, c(rng), c(rng)}), {{d(rng), 1}, {d(rng), 1}}, n(rng)};
    auto src = series_at_zero(RationalFunction::from_factored(p.numerator, p.factors), 30 * p.modulus);
    auto got = series_at_zero(section(p), 30);
    for (std::size_t m = 0; m <= 30; ++m) CHECK(got[m] == src[m * static_cast<std::size_t>(p.modulus)]);
  }
}

TEST_CASE("hilbert_generic examples") {
  CHECK(hilbert_generic(WeightVector::validate({-2, 3})) == RationalFunction::reduce(1, one_minus_t_pow(5)));
  CHECK(hilbert_generic(WeightVector::validate({-1, 2, 3})) == over(1, {{3, 1}, {4, 1}}));
  CHECK(hilbert_generic(WeightVector::validate({-1, -2, 1, 14})) == series_1_14());
  CHECK(hilbert_generic(WeightVector::validate({-3, 1, 3})) == over(1, {{2, 1}, {4, 1}}));
}

TEST_CASE("hilbert_degenerate examples") {
  CHECK(hilbert_degenerate(WeightVector::validate({-1, -1, 1})) == over(1, {{2, 2}}));
  CHECK(hilbert_degenerate(WeightVector::validate({-1, -1, 1, 1})) == over(P({1, 0, 1}), {{2, 3}}));
  CHECK(hilbert_degenerate(WeightVector::validate({-1, -1, 2})) == over(P({1, 0, 0, 1}), {{3, 2}}));
}

TEST_CASE("hilbert_series examples and routes") {
  CHECK(hilbert_series(WeightVector::validate({-1, 1})) == RationalFunction::reduce(1, one_minus_t_pow(2)));
  CHECK(hilbert_series(WeightVector::validate({-1, -2, 1, 14})) == series_1_14());
  CHECK(hilbert_series(WeightVector::validate({-1, -1, 1})) == over(1, {{2, 2}}));
  CHECK(hilbert_series_detailed(WeightVector::validate({-1, -2, 1, 14})).route == "generic");
  CHECK(hilbert_series_detailed(WeightVector::validate({-1, -1, 2})).route == "generic-negated");
  CHECK(hilbert_series_detailed(WeightVector::validate({-1, -1, 2, 2})).route == "degenerate");
  CHECK(hilbert_series_detailed(WeightVector::validate({-1, -2, 1, 14})).verified_depth == 0);
  HilbertOptions opts;
  opts.verify_depth = 50;
  auto d = hilbert_series_detailed(WeightVector::validate({-1, -2, 1, 14}), opts);
  CHECK(d.verified_depth == 50);
  CHECK_FALSE(d.heuristic);
}

TEST_CASE("oracle coefficients") {
  CHECK(molien_coefficient_oracle(WeightVector::validate({-1, 1}), 2) == 1);
  CHECK(molien_coefficient_oracle(WeightVector::validate({-1, -2, 1, 14}), 9) == 3);
  CHECK(molien_coefficient_oracle(WeightVector::validate({-1, 2, 3}), 7) == 1);
  for (W w : {W{-1, -2, 1, 14}, W{-3, -3, 2, 5}, W{-1, 0, 1}, W{-4, 1, 2, 2, 3}}) {
    auto v = WeightVector::validate(w);
    auto all = v.all_weights();
    auto got = molien_coefficients(v, 24);
    for (std::size_t m = 0; m <= 24; ++m) CHECK(got[m] == oracle::count_invariant_monomials(all, m));
  }
}

TEST_CASE("series coefficients match brute-force counts") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : stable_tuples(n, 4)) {
      auto v = WeightVector::validate(w);
      auto coeffs = series_at_zero(hilbert_series(v, unverified()), 30);
      for (std::size_t m = 0; m <= 30; ++m) {
        REQUIRE(coeffs[m] == oracle::count_invariant_monomials(w, static_cast<std::int64_t>(m)));
      }
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("five-weight vectors agree with the library oracle to the automatic depth") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> pick(-6, 6);
  int done = 0;
  while (done < 40) {
    W w;
    while (w.size() < 5) {
      auto a = pick(rng);
      if (a != 0) w.push_back(a);
    }
    WeightVector v;
    try {
      v = WeightVector::validate(w);
    } catch (const Unstable&) {
      continue;
    }
    HilbertOptions o;
    o.verify_depth = HilbertOptions::kAutoDepth;
    CHECK_NOTHROW(hilbert_series(v, o));
    ++done;
  }
}

TEST_CASE("generic and forced degenerate engines agree") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : stable_tuples(n, 4)) {
      auto v = WeightVector::validate(w);
      if (!v.is_generic()) continue;
      CHECK(hilbert_degenerate(v, unverified()) == hilbert_generic(v, unverified()));
    }
  }
}

TEST_CASE("negation invariance, pole order and nonnegative integer coefficients") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : stable_tuples(n, 5)) {
      auto v = WeightVector::validate(w);
      auto f = hilbert_series(v, unverified());
      REQUIRE(f == hilbert_series(v.negated(), unverified()));
      CHECK(laurent_at_one(f, 1).pole_order == static_cast<std::int64_t>(n) - 1);
      for (const auto& c : series_at_zero(f, 40)) REQUIRE((is_integer(c) && c >= 0));
    }
  }
}

TEST_CASE("zero weights multiply by 1/(1-t)") {
  for (W w : {W{-1, 2, 3}, W{-1, -1, 1}, W{-3, 1, 3}}) {
    auto base = hilbert_series(WeightVector::validate(w));
    W with_zero = w;
    with_zero.push_back(0);
    CHECK(hilbert_series(WeightVector::validate(with_zero)) == base * RationalFunction::reduce(1, one_minus_t_pow(1)));
    with_zero.push_back(0);
    CHECK(hilbert_series(WeightVector::validate(with_zero)) ==
          base * RationalFunction::reduce(1, one_minus_t_pow(1).pow(2)));
  }
}

TEST_CASE("method selection") {
  auto v = WeightVector::validate({-1, -2, 1, 14});
  for (auto m : {HilbertMethod::Generic, HilbertMethod::Degenerate, HilbertMethod::Oracle}) {
    HilbertOptions o;
    o.method = m;
    CHECK(hilbert_series(v, o) == series_1_14());
  }
  HilbertOptions o;
  o.method = HilbertMethod::Oracle;
  CHECK(hilbert_series_detailed(v, o).heuristic);
  CHECK(parse_hilbert_method(to_string(HilbertMethod::Degenerate)) == HilbertMethod::Degenerate);
  CHECK_THROWS_AS(parse_hilbert_method("nope"), InvalidArgument);
  HilbertOptions g;
  g.method = HilbertMethod::Generic;
  CHECK_THROWS_AS(hilbert_series(WeightVector::validate({-1, -1, 2, 2}), g), NotGeneric);
}

TEST_CASE("guards and oracle mismatch") {
  HilbertOptions tight;
  tight.max_denominator_degree = 100;
  CHECK_THROWS_AS(hilbert_series(WeightVector::validate({-501, 500, 503}), tight), DegreeOverflow);
  auto v = WeightVector::validate({-1, 2, 3});
  CHECK_THROWS_AS(verify_against_oracle(v, over(1, {{3, 1}, {5, 1}}), 20), OracleMismatch);
  CHECK_NOTHROW(verify_against_oracle(v, over(1, {{3, 1}, {4, 1}}), 60));
  CHECK(auto_verify_depth(over(1, {{3, 1}, {4, 1}})) == 50);
  CHECK(auto_verify_depth(over(1, {{30, 1}, {40, 1}})) == 140);
}
