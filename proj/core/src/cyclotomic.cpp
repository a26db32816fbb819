#include "circlehilb/cyclotomic.hpp"

#include <numeric>

namespace circlehilb {

template class CyclotomicElement<Rational>;
template class CyclotomicElement<RationalFunction>;

RootExpression<Rational> root_expression(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw ZeroDenominator("root expression with zero denominator");
  RootExpression<Rational> f;
  for (const auto& [e, c] : num.terms()) f.numerator[e] = c;
  for (const auto& [e, c] : den.terms()) f.denominator[e] = c;
  return f;
}

RootExpression<Rational> monomial_over_product(std::int64_t shift,
                                               const std::vector<std::pair<std::int64_t, int>>& factors) {
  LaurentPolynomial den(1);
  for (const auto& [b, m] : factors) {
    LaurentPolynomial f(1);
    f.add_to_coeff(b, -1);
    den *= f.pow(static_cast<unsigned>(m));
  }
  return root_expression(LaurentPolynomial::monomial(shift), den);
}

void RootConstraint::validate() const {
  if (ambient_order < 1) throw InvalidArgument("ambient order must be >= 1");
  for (auto d : excluded_suborders) {
    if (d < 1 || ambient_order % d != 0) {
      throw InvalidArgument("excluded suborder " + std::to_string(d) + " does not divide " +
                            std::to_string(ambient_order));
    }
  }
}

Rational gessel_harmonic(std::int64_t n) {
  if (n < 1) throw InvalidArgument("gessel_harmonic needs N >= 1");
  return frac(n - 1, 2);
}

Rational fourier_dedekind(std::int64_t r, const std::vector<std::int64_t>& a_list, std::int64_t a1) {
  if (a1 < 1) throw InvalidArgument("fourier_dedekind needs a1 >= 1");
  std::vector<std::pair<std::int64_t, int>> factors;
  for (auto a : a_list) {
    if (std::gcd(a, a1) != 1) throw NotCoprime(std::to_string(a) + " and " + std::to_string(a1));
    factors.emplace_back(a, 1);
  }
  if (a1 == 1) return 0;
  RootConstraint c{a1, {1}};
  return constrained_unity_sum(monomial_over_product(r, factors), c) / Rational(a1);
}

}  // namespace circlehilb
