#include "circlehilb/polynomial.hpp"

#include <sstream>

#include "circlehilb/error.hpp"

namespace circlehilb {

template <bool kLaurent>
void BasicPolynomial<kLaurent>::check_exponent(Exponent e) {
  if constexpr (!kLaurent) {
    if (e < 0) throw InvalidArgument("negative exponent in a polynomial");
  }
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::from_terms(const TermMap& terms) {
  BasicPolynomial p;
  for (const auto& [e, c] : terms) p.set_coeff(e, c);
  return p;
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::from_dense(const std::vector<Rational>& coeffs, Exponent offset) {
  BasicPolynomial p;
  auto hint = p.terms_.end();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      Exponent e = offset + static_cast<Exponent>(i);
      check_exponent(e);
      hint = p.terms_.emplace_hint(hint, e, coeffs[i]);
    }
  }
  return p;
}

template <bool kLaurent>
Rational BasicPolynomial<kLaurent>::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

template <bool kLaurent>
void BasicPolynomial<kLaurent>::set_coeff(Exponent e, const Rational& c) {
  check_exponent(e);
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

template <bool kLaurent>
void BasicPolynomial<kLaurent>::add_to_coeff(Exponent e, const Rational& c) {
  if (c == 0) return;
  check_exponent(e);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

template <bool kLaurent>
bool BasicPolynomial<kLaurent>::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

template <bool kLaurent>
bool BasicPolynomial<kLaurent>::is_nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

template <bool kLaurent>
Rational BasicPolynomial<kLaurent>::evaluate(const Rational& x) const {
  if (terms_.empty()) return 0;
  if (x == 0) {
    if (low_degree() < 0) throw ZeroBase("Laurent polynomial evaluated at 0");
    return coeff(0);
  }
  // Horner from the top, stepping over gaps with powers.
  Rational acc = 0;
  Exponent prev = terms_.rbegin()->first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin()) acc *= circlehilb::pow(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * circlehilb::pow(x, prev);
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::substitute_power(Exponent k) const {
  if (k == 0) {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return BasicPolynomial(s);
  }
  BasicPolynomial p;
  for (const auto& [e, c] : terms_) p.add_to_coeff(e * k, c);
  return p;
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::shifted(Exponent k) const {
  BasicPolynomial p;
  auto hint = p.terms_.end();
  for (const auto& [e, c] : terms_) {
    check_exponent(e + k);
    hint = p.terms_.emplace_hint(hint, e + k, c);
  }
  return p;
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::pow(unsigned exponent) const {
  BasicPolynomial result(1);
  BasicPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::truncated(Exponent max_exponent) const {
  BasicPolynomial p;
  for (const auto& [e, c] : terms_) {
    if (e > max_exponent) break;
    p.terms_.emplace_hint(p.terms_.end(), e, c);
  }
  return p;
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::operator-() const {
  BasicPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

template <bool kLaurent>
BasicPolynomial<kLaurent>& BasicPolynomial<kLaurent>::operator+=(const BasicPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_to_coeff(e, c);
  return *this;
}

template <bool kLaurent>
BasicPolynomial<kLaurent>& BasicPolynomial<kLaurent>::operator-=(const BasicPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_to_coeff(e, -c);
  return *this;
}

template <bool kLaurent>
BasicPolynomial<kLaurent>& BasicPolynomial<kLaurent>::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

template <bool kLaurent>
BasicPolynomial<kLaurent> BasicPolynomial<kLaurent>::multiply(const BasicPolynomial& a, const BasicPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Exponent lo = a.low_degree() + b.low_degree();
  const Exponent hi = a.degree() + b.degree();
  const std::size_t products = a.term_count() * b.term_count();
  const auto span = static_cast<std::size_t>(hi - lo + 1);
  if (span <= 4 * products + 64) {
    // Dense accumulation; integer inputs stay in mpz.
    if (a.has_integer_coefficients() && b.has_integer_coefficients()) {
      std::vector<Integer> acc(span);
      for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
          mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
        }
      }
      BasicPolynomial p;
      for (std::size_t i = 0; i < span; ++i) {
        if (acc[i] != 0) p.terms_.emplace_hint(p.terms_.end(), lo + static_cast<Exponent>(i), Rational(acc[i]));
      }
      return p;
    }
    std::vector<Rational> acc(span);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
    }
    return from_dense(acc, lo);
  }
  BasicPolynomial p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_to_coeff(ea + eb, ca * cb);
  }
  return p;
}

template <bool kLaurent>
std::string BasicPolynomial<kLaurent>::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

template class BasicPolynomial<false>;
template class BasicPolynomial<true>;

Polynomial one_minus_t_pow(Exponent d) {
  if (d <= 0) throw InvalidArgument("1 - t^d needs d >= 1");
  Polynomial p(1);
  p.set_coeff(d, -1);
  return p;
}

std::vector<Rational> dense(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree() + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  const Exponent db = b.degree();
  const Rational lead = b.leading_coefficient();
  const bool monic_integer = lead == 1 && b.has_integer_coefficients();
  std::vector<Rational> r = dense(a);
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  // Skip the leading term of b when subtracting.
  std::vector<std::pair<Exponent, Rational>> tail;
  for (const auto& [e, c] : b.terms()) {
    if (e != db) tail.emplace_back(e, c);
  }
  for (Exponent i = a.degree(); i >= db; --i) {
    Rational& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational factor = monic_integer ? top : Rational(top / lead);
    const Exponent shift = i - db;
    q[static_cast<std::size_t>(shift)] = factor;
    for (const auto& [e, c] : tail) r[static_cast<std::size_t>(shift + e)] -= factor * c;
    top = 0;
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial::from_dense(q), Polynomial::from_dense(r)};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalInvariantViolation("inexact polynomial division");
  return q;
}

bool divides(const Polynomial& b, const Polynomial& a) { return divmod(a, b).second.is_zero(); }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading_coefficient());
}

Polynomial reversed(const Polynomial& p) {
  Polynomial r;
  const Exponent d = p.degree();
  for (const auto& [e, c] : p.terms()) r.set_coeff(d - e, c);
  return r;
}

Polynomial to_polynomial(const LaurentPolynomial& p) {
  if (!p.is_zero() && p.low_degree() < 0) throw InvalidArgument("Laurent polynomial has negative exponents");
  return Polynomial::from_terms(p.terms());
}

LaurentPolynomial to_laurent(const Polynomial& p) { return LaurentPolynomial::from_terms(p.terms()); }

}  // namespace circlehilb
