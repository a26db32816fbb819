#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlehilb/hilbert.hpp"
#include "circlehilb/rational.hpp"
#include "circlehilb/rational_function.hpp"
#include "circlehilb/weights.hpp"

namespace circlehilb {

// Degree of numerator minus degree of denominator.
std::int64_t a_invariant(const RationalFunction& f);

// f(1/t) == (-1)^dim t^{-a} f(t) with a = degree(f).
bool stanley_test(const RationalFunction& f, std::int64_t dim);

// -2 gamma_1 / gamma_0 - dim; never rounded.
Rational a_invariant_closed_form(const WeightVector& v);
// The same quantity written directly in partial Schur values of v and of the
// one-weight reductions.
Rational a_invariant_schur_form(const WeightVector& v);

struct IntegerObstruction {
  Rational ratio;  // 2 gamma_1 / gamma_0
  bool passes = false;
};
IntegerObstruction integer_obstruction(const WeightVector& v);

// One negative weight dividing the sum of the positive ones.
bool k1_sufficient(const WeightVector& v);

enum class Classification { Gorenstein, NotGorenstein };
enum class SufficientCondition { N2Polynomial, K1Divisibility };

std::string to_string(Classification c);
std::string to_string(SufficientCondition c);
Classification parse_classification(const std::string& s);
SufficientCondition parse_sufficient_condition(const std::string& s);

struct GorensteinReport {
  WeightVector weights;
  // Absent when a short-circuit decided the question without the series.
  std::optional<RationalFunction> hilbert;
  std::int64_t dimension = 0;
  // Degree of the series; known from the series or from a sufficient condition.
  std::optional<std::int64_t> degree;
  Rational gamma0;
  Rational gamma1;
  Rational ratio_2g1_g0;
  bool ratio_is_integer = false;
  bool stanley_holds = false;
  std::vector<SufficientCondition> sufficient_condition_hits;
  Classification classification = Classification::NotGorenstein;
  std::string hilbert_route;

  friend bool operator==(const GorensteinReport&, const GorensteinReport&) = default;
};

struct AnalyzeOptions {
  // Always compute the series and run the Stanley test.
  bool full = false;
  HilbertOptions hilbert;
};

GorensteinReport analyze(const WeightVector& v, const AnalyzeOptions& options = {});

}  // namespace circlehilb
