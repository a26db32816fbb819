#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circlehilb/cyclotomic_poly.hpp"
#include "circlehilb/polynomial.hpp"

namespace circlehilb {

// (1 - t^d)^multiplicity
struct DenominatorFactor {
  Exponent d;
  int multiplicity;
  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};
using FactoredDenominator = std::vector<DenominatorFactor>;

// Sorted by d with equal d merged.
FactoredDenominator normalize_factors(FactoredDenominator factors);
Polynomial expand_factors(const FactoredDenominator& factors);
CyclotomicContent content_of(const FactoredDenominator& factors);

// numerator / prod (1 - t^d)^mult, possibly unreduced.
struct FactoredView {
  Polynomial numerator;
  FactoredDenominator denominator;
};

class RationalFunction {
 public:
  RationalFunction() : den_(1), content_(CyclotomicContent{}) {}
  RationalFunction(const Rational& c) : num_(c), den_(1), content_(CyclotomicContent{}) {}
  template <class I>
    requires std::is_integral_v<I>
  RationalFunction(I c) : RationalFunction(Rational(static_cast<long>(c))) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1), content_(CyclotomicContent{}) {}

  static RationalFunction reduce(const Polynomial& num, const Polynomial& den);
  static RationalFunction from_factored(const Polynomial& num, const FactoredDenominator& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  // Known when the denominator is a product of cyclotomic polynomials.
  const std::optional<CyclotomicContent>& denominator_content() const { return content_; }

  // Presentation as numerator / prod (1 - t^d_i): the fewest factors that
  // cover the reduced denominator, smallest total degree, preferring a
  // nonnegative numerator. Absent when the denominator is not cyclotomic.
  std::optional<FactoredView> factored_view() const;
  std::optional<FactoredDenominator> factored_denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  Rational evaluate(const Rational& t) const;
  // f(1/t)
  RationalFunction at_inverse() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  static RationalFunction with_content(Polynomial num, CyclotomicContent content);

  Polynomial num_;
  Polynomial den_;
  std::optional<CyclotomicContent> content_;
  std::optional<FactoredView> constructed_view_;
};

// Sum over m of gamma_m (1-t)^{m - pole_order}. pole_order is the
// multiplicity of t = 1 in the denominator minus that in the numerator;
// it is negative when f vanishes at t = 1.
struct LaurentExpansion {
  std::int64_t pole_order = 0;
  std::vector<Rational> coefficients;
};

// Taylor coefficients c_0..c_order.
std::vector<Rational> series_at_zero(const RationalFunction& f, std::size_t order);
LaurentExpansion laurent_at_one(const RationalFunction& f, std::size_t count);
std::int64_t degree(const RationalFunction& f);
// Multiplicity of the root t = 1.
int multiplicity_at_one(const Polynomial& p);

}  // namespace circlehilb
