#include "circlehilb/gorenstein.hpp"

#include <numeric>

#include "circlehilb/error.hpp"
#include "circlehilb/laurent_coefficients.hpp"

namespace circlehilb {

std::int64_t a_invariant(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroFunction("a-invariant of the zero function");
  return degree(f);
}

bool stanley_test(const RationalFunction& f, std::int64_t dim) {
  if (f.is_zero()) return false;
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  // f(1/t) = t^{-a} rev(num) / rev(den)
  const Polynomial lhs = reversed(num) * den;
  Polynomial rhs = num * reversed(den);
  if (dim % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

IntegerObstruction integer_obstruction(const WeightVector& v) {
  IntegerObstruction out;
  out.ratio = 2 * gamma1(v) / gamma0(v);
  out.passes = is_integer(out.ratio);
  return out;
}

Rational a_invariant_closed_form(const WeightVector& v) {
  return -2 * gamma1(v) / gamma0(v) - Rational(v.dimension());
}

Rational a_invariant_schur_form(const WeightVector& v) {
  const auto a = v.weights();
  const auto n = static_cast<std::int64_t>(a.size());
  const Rational top = partial_schur_of(n - 2, a);
  Rational acc = elementary_of(1, a) * partial_schur_of(n - 3, a);
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<std::int64_t> aj;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == j) continue;
      aj.push_back(a[i]);
      g = std::gcd(g, a[i]);
    }
    if (g == 1) continue;
    // prod over the opposite side of the signed differences with a_j
    Rational side = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[j] < 0 && a[i] > 0) side *= Rational(a[j] - a[i]);
      if (a[j] > 0 && a[i] < 0) side *= Rational(a[i] - a[j]);
    }
    acc += Rational(1 - g) * partial_schur_of(n - 3, aj) * side;
  }
  return acc / top - Rational(n) - Rational(v.zero_count());
}

bool k1_sufficient(const WeightVector& v) {
  if (v.k() != 1) return false;
  std::int64_t sum = 0;
  for (auto b : v.positives()) sum += b;
  return sum % v.negatives().front() == 0;
}

std::string to_string(Classification c) {
  return c == Classification::Gorenstein ? "Gorenstein" : "NotGorenstein";
}

std::string to_string(SufficientCondition c) {
  return c == SufficientCondition::N2Polynomial ? "N2Polynomial" : "K1Divisibility";
}

Classification parse_classification(const std::string& s) {
  if (s == "Gorenstein") return Classification::Gorenstein;
  if (s == "NotGorenstein") return Classification::NotGorenstein;
  throw ParseError("unknown classification '" + s + "'");
}

SufficientCondition parse_sufficient_condition(const std::string& s) {
  if (s == "N2Polynomial") return SufficientCondition::N2Polynomial;
  if (s == "K1Divisibility") return SufficientCondition::K1Divisibility;
  throw ParseError("unknown sufficient condition '" + s + "'");
}

namespace {

void check_consistency(const GorensteinReport& r, const WeightVector& v) {
  if (!r.ratio_is_integer && r.stanley_holds) {
    throw InternalInvariantViolation("Stanley test holds but 2 gamma_1 / gamma_0 is not an integer");
  }
  if (!r.sufficient_condition_hits.empty() && r.hilbert && !r.stanley_holds) {
    throw InternalInvariantViolation("sufficient condition hit but the Stanley test fails");
  }
  if (r.stanley_holds && r.degree) {
    const Rational closed = a_invariant_closed_form(v);
    if (closed != Rational(*r.degree)) {
      throw InternalInvariantViolation("closed-form a-invariant " + to_string(closed) + " differs from degree " +
                                       std::to_string(*r.degree));
    }
  }
}

}  // namespace

GorensteinReport analyze(const WeightVector& v, const AnalyzeOptions& options) {
  GorensteinReport r;
  r.weights = v;
  r.dimension = v.dimension();
  r.gamma0 = gamma0(v);
  r.gamma1 = gamma1(v);
  r.ratio_2g1_g0 = 2 * r.gamma1 / r.gamma0;
  r.ratio_is_integer = is_integer(r.ratio_2g1_g0);
  const std::int64_t z = v.zero_count();

  std::optional<std::int64_t> implied;
  if (v.n() == 2) {
    r.sufficient_condition_hits.push_back(SufficientCondition::N2Polynomial);
    implied = v.negatives().front() - v.positives().front() - z;
  }
  if (k1_sufficient(v)) {
    r.sufficient_condition_hits.push_back(SufficientCondition::K1Divisibility);
    std::int64_t sum = v.negatives().front();
    for (auto b : v.positives()) sum += b;
    implied = sum / v.negatives().front() - static_cast<std::int64_t>(v.n()) - z;
  }

  const bool decided_without_series = !options.full && (implied.has_value() || !r.ratio_is_integer);
  if (decided_without_series) {
    if (implied) {
      r.degree = implied;
      r.stanley_holds = true;
      r.classification = Classification::Gorenstein;
    } else {
      r.stanley_holds = false;
      r.classification = Classification::NotGorenstein;
    }
    check_consistency(r, v);
    return r;
  }

  HilbertResult h = hilbert_series_detailed(v, options.hilbert);
  r.hilbert_route = h.route;
  r.hilbert = std::move(h.series);
  r.degree = a_invariant(*r.hilbert);
  r.stanley_holds = stanley_test(*r.hilbert, r.dimension);
  r.classification = r.stanley_holds ? Classification::Gorenstein : Classification::NotGorenstein;
  if (implied && *implied != *r.degree) {
    throw InternalInvariantViolation("sufficient condition predicts degree " + std::to_string(*implied) +
                                     " but the series has degree " + std::to_string(*r.degree));
  }
  check_consistency(r, v);
  return r;
}

}  // namespace circlehilb
