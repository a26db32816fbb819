#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circlehilb/error.hpp"
#include "circlehilb/weights.hpp"

using namespace circlehilb;

using W = std::vector<std::int64_t>;

TEST_CASE("validate") {
  auto a = WeightVector::validate({2, -3});
  CHECK(a.negatives() == W{-3});
  CHECK(a.positives() == W{2});
  CHECK(a.faithful_scale() == 1);

  auto b = WeightVector::validate({2, 4, -6});
  CHECK(b.negatives() == W{-3});
  CHECK(b.positives() == W{1, 2});
  CHECK(b.faithful_scale() == 2);

  CHECK_THROWS_AS(WeightVector::validate({1, 2, 3}), Unstable);
  CHECK_THROWS_AS(WeightVector::validate({-1, -2}), Unstable);
  CHECK_THROWS_AS(WeightVector::validate({}), Empty);
  CHECK_THROWS_AS(WeightVector::validate({0, 0}), Unstable);

  auto c = WeightVector::validate({0, -1, 1, 0});
  CHECK(c.zero_count() == 2);
  CHECK(c.n() == 2);
  CHECK(c.dimension() == 3);
  CHECK(c.all_weights() == W{-1, 1, 0, 0});
}

TEST_CASE("validate is idempotent") {
  for (W raw : {W{2, 4, -6}, W{0, -2, 2, 6}, W{-1, -1, 3}, W{5, -10, 15, 0}}) {
    auto v = WeightVector::validate(raw);
    auto again = WeightVector::validate(v.all_weights());
    CHECK(again.weights() == v.weights());
    CHECK(again.zero_count() == v.zero_count());
    CHECK(again.faithful_scale() == 1);
  }
}

TEST_CASE("genericity is decided on the negative side") {
  CHECK(WeightVector::validate({-1, -2, 1, 1}).is_generic());
  CHECK_FALSE(WeightVector::validate({-1, -1, 1, 2}).is_generic());
  CHECK(WeightVector::validate({-1, -1, 1, 2}).positive_side_generic());
  auto v = WeightVector::validate({-1, -1, 2});
  CHECK(v.negated().weights() == W{-2, 1, 1});
  CHECK(v.negative_groups() == std::vector<std::pair<std::int64_t, int>>{{-1, 2}});
}

TEST_CASE("remove") {
  auto r1 = remove(WeightVector::validate({-1, 2, 2}), {0});
  CHECK(r1.weights == W{2, 2});
  CHECK(r1.gcd == 2);
  auto r2 = remove(WeightVector::validate({-1, -2, 1, 14}), {3});
  CHECK(r2.weights == W{-2, -1, 1});
  CHECK(r2.gcd == 1);
  auto r3 = remove(WeightVector::validate({-3, 1, 3}), {1});
  CHECK(r3.weights == W{-3, 3});
  CHECK(r3.gcd == 3);
  auto r4 = remove(W{-4, 6}, {0, 1});
  CHECK(r4.weights.empty());
  CHECK(r4.gcd == 0);
  CHECK(remove(W{-4, 6}, {0}).gcd == 6);
}

TEST_CASE("canonical_key") {
  CHECK(canonical_key(WeightVector::validate({-3, 1, 3})) == canonical_key(WeightVector::validate({3, -1, -3})));
  CHECK(canonical_key(WeightVector::validate({-1, 1})) == W{-1, 1});
  CHECK(canonical_key(WeightVector::validate({-2, 3})) == canonical_key(WeightVector::validate({2, -3})));
  CHECK(canonical_key(WeightVector::validate({0, -2, 3})) == canonical_key(WeightVector::validate({2, 0, -3})));
}

TEST_CASE("parse_weights") {
  CHECK(parse_weights("-1,-2, 1 14") == W{-1, -2, 1, 14});
  CHECK(parse_weights("+3,-4") == W{3, -4});
  CHECK_THROWS_AS(parse_weights("1,,x"), ParseError);
}
