#include "circlehilb/rational.hpp"

#include <cctype>
#include <numeric>

#include "circlehilb/error.hpp"

namespace circlehilb {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Integer p(strip_plus(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ZeroDenominator("in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int sign(const Rational& q) { return sgn(q); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw ZeroBase("0 raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational frac(std::int64_t p, std::int64_t q) {
  if (q == 0) throw ZeroDenominator("fraction with zero denominator");
  Rational r{Integer(static_cast<long>(p)), Integer(static_cast<long>(q))};
  r.canonicalize();
  return r;
}

Integer binomial(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  if (top >= 0) {
    if (k > top) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return r;
  }
  // C(-n, k) = (-1)^k C(n+k-1, k)
  Integer r = binomial(-top + k - 1, k);
  return (k % 2 == 0) ? r : Integer(-r);
}

Rational factorial(std::int64_t n) {
  if (n < 0) throw OutOfRange("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  std::int64_t g = std::gcd(a, b);
  std::int64_t out;
  if (__builtin_mul_overflow(a / g, b, &out)) throw DegreeOverflow("lcm exceeds 64 bits");
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw OutOfRange("integer does not fit in 64 bits");
  return z.get_si();
}

}  // namespace circlehilb
