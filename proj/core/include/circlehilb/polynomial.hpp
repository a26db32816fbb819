#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "circlehilb/rational.hpp"

namespace circlehilb {

using Exponent = std::int64_t;

// Degree of the zero polynomial.
inline constexpr Exponent kMinusInfinity = std::numeric_limits<Exponent>::min();

// Sparse univariate polynomial with exact rational coefficients. With
// kLaurent = false exponents are nonnegative (Polynomial); with kLaurent =
// true negative exponents are allowed (LaurentPolynomial).
template <bool kLaurent>
class BasicPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  BasicPolynomial() = default;
  BasicPolynomial(const Rational& c) { set_coeff(0, c); }
  template <class I>
    requires std::is_integral_v<I>
  BasicPolynomial(I c) : BasicPolynomial(Rational(static_cast<long>(c))) {}

  static BasicPolynomial monomial(Exponent e, const Rational& c = 1) {
    BasicPolynomial p;
    p.set_coeff(e, c);
    return p;
  }
  static BasicPolynomial from_terms(const TermMap& terms);
  static BasicPolynomial from_dense(const std::vector<Rational>& coeffs, Exponent offset = 0);

  const TermMap& terms() const { return terms_; }
  Rational coeff(Exponent e) const;
  void set_coeff(Exponent e, const Rational& c);
  void add_to_coeff(Exponent e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  std::size_t term_count() const { return terms_.size(); }
  Exponent degree() const { return terms_.empty() ? kMinusInfinity : terms_.rbegin()->first; }
  Exponent low_degree() const { return terms_.empty() ? kMinusInfinity : terms_.begin()->first; }
  Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
  Rational constant_term() const { return coeff(0); }
  bool has_integer_coefficients() const;
  bool is_nonnegative() const;

  Rational evaluate(const Rational& x) const;
  // p(t^k); k may be negative only for Laurent polynomials.
  BasicPolynomial substitute_power(Exponent k) const;
  // t^k * p
  BasicPolynomial shifted(Exponent k) const;
  BasicPolynomial pow(unsigned exponent) const;
  BasicPolynomial truncated(Exponent max_exponent) const;

  BasicPolynomial operator-() const;
  BasicPolynomial& operator+=(const BasicPolynomial& o);
  BasicPolynomial& operator-=(const BasicPolynomial& o);
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }
  BasicPolynomial& operator*=(const Rational& c);

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) { return multiply(a, b); }
  friend BasicPolynomial operator*(BasicPolynomial a, const Rational& c) { return a *= c; }
  friend BasicPolynomial operator*(const Rational& c, BasicPolynomial a) { return a *= c; }
  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  static BasicPolynomial multiply(const BasicPolynomial& a, const BasicPolynomial& b);
  static void check_exponent(Exponent e);

  TermMap terms_;
};

using Polynomial = BasicPolynomial<false>;
using LaurentPolynomial = BasicPolynomial<true>;

extern template class BasicPolynomial<false>;
extern template class BasicPolynomial<true>;

// 1 - t^d
Polynomial one_minus_t_pow(Exponent d);

std::vector<Rational> dense(const Polynomial& p);

// Quotient and remainder of Euclidean division; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Throws InternalInvariantViolation when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
// t^deg(p) * p(1/t)
Polynomial reversed(const Polynomial& p);
Polynomial to_polynomial(const LaurentPolynomial& p);
LaurentPolynomial to_laurent(const Polynomial& p);

}  // namespace circlehilb
