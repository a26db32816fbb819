#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "circlehilb/cyclotomic_poly.hpp"
#include "circlehilb/error.hpp"
#include "circlehilb/rational_function.hpp"

namespace circlehilb {

inline bool field_is_zero(const Rational& q) { return q == 0; }
inline bool field_is_zero(const RationalFunction& f) { return f.is_zero(); }

enum class ModulusKind { Phi, FullCycle };

// Phi(d): the d-th cyclotomic polynomial; FullCycle(N): x^N - 1.
struct Modulus {
  ModulusKind kind;
  std::int64_t order;
  static Modulus phi(std::int64_t d) { return {ModulusKind::Phi, d}; }
  static Modulus full_cycle(std::int64_t n) { return {ModulusKind::FullCycle, n}; }
  friend bool operator==(const Modulus&, const Modulus&) = default;
};

namespace densepoly {

// Coefficient vectors, lowest degree first, no trailing zeros.
template <class Field>
void trim(std::vector<Field>& p) {
  while (!p.empty() && field_is_zero(p.back())) p.pop_back();
}

template <class Field>
std::vector<Field> sub(const std::vector<Field>& a, const std::vector<Field>& b) {
  std::vector<Field> r(std::max(a.size(), b.size()), Field(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

template <class Field>
std::vector<Field> mul(const std::vector<Field>& a, const std::vector<Field>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Field> r(a.size() + b.size() - 1, Field(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (field_is_zero(b[j])) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

template <class Field>
std::pair<std::vector<Field>, std::vector<Field>> divmod(std::vector<Field> a, const std::vector<Field>& b) {
  if (b.empty()) throw ZeroDenominator("dense polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  std::vector<Field> q(a.size() - b.size() + 1, Field(0));
  const Field lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (field_is_zero(a[i])) continue;
    const Field factor = a[i] / lead;
    const std::size_t shift = i + 1 - b.size();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - factor * b[j];
    a[i] = Field(0);
  }
  trim(q);
  trim(a);
  return {q, a};
}

// Returns s with s * a = g (mod m), where g = gcd(a, m); g is returned too.
template <class Field>
std::pair<std::vector<Field>, std::vector<Field>> inverse_part(const std::vector<Field>& a, const std::vector<Field>& m) {
  std::vector<Field> r0 = m, r1 = a;
  std::vector<Field> s0, s1{Field(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    std::vector<Field> s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return {s0, r0};
}

}  // namespace densepoly

template <class Field>
class CyclotomicElement {
 public:
  explicit CyclotomicElement(Modulus m) : modulus_(m) { check_modulus(); }

  // sum c_e x^e with any integer exponents (x is a unit).
  static CyclotomicElement from_terms(Modulus m, const std::map<std::int64_t, Field>& terms) {
    CyclotomicElement out(m);
    const std::int64_t n = m.order;
    std::vector<Field> folded(static_cast<std::size_t>(n), Field(0));
    for (const auto& [e, c] : terms) {
      std::int64_t r = ((e % n) + n) % n;
      folded[static_cast<std::size_t>(r)] = folded[static_cast<std::size_t>(r)] + c;
    }
    densepoly::trim(folded);
    out.rep_ = out.reduce(std::move(folded));
    return out;
  }

  static CyclotomicElement constant(Modulus m, const Field& c) { return from_terms(m, {{0, c}}); }

  const Modulus& modulus() const { return modulus_; }
  const std::vector<Field>& representative() const { return rep_; }
  bool is_zero() const { return rep_.empty(); }

  CyclotomicElement operator+(const CyclotomicElement& o) const {
    check_same(o);
    std::vector<Field> r(std::max(rep_.size(), o.rep_.size()), Field(0));
    for (std::size_t i = 0; i < rep_.size(); ++i) r[i] = rep_[i];
    for (std::size_t i = 0; i < o.rep_.size(); ++i) r[i] = r[i] + o.rep_[i];
    densepoly::trim(r);
    return with_rep(std::move(r));
  }
  CyclotomicElement operator-(const CyclotomicElement& o) const {
    check_same(o);
    return with_rep(densepoly::sub(rep_, o.rep_));
  }
  CyclotomicElement operator*(const CyclotomicElement& o) const {
    check_same(o);
    return with_rep(reduce(densepoly::mul(rep_, o.rep_)));
  }
  CyclotomicElement inverse() const {
    auto [s, g] = densepoly::inverse_part(rep_, modulus_poly());
    if (g.size() != 1) throw NonInvertibleDenominator("element shares a root with the modulus");
    const Field ginv = Field(1) / g[0];
    for (auto& c : s) c = c * ginv;
    densepoly::trim(s);
    return with_rep(reduce(std::move(s)));
  }
  CyclotomicElement operator/(const CyclotomicElement& o) const { return *this * o.inverse(); }

  Field constant_coefficient() const { return rep_.empty() ? Field(0) : rep_[0]; }

  // Phi(d): sum over the primitive d-th roots; FullCycle(N): over all N-th roots.
  Field trace() const {
    if (modulus_.kind == ModulusKind::FullCycle) return Field(Rational(modulus_.order)) * constant_coefficient();
    const auto& p = cyclotomic_power_sums(modulus_.order);
    Field acc(0);
    for (std::size_t i = 0; i < rep_.size(); ++i) {
      if (!field_is_zero(rep_[i])) acc = acc + rep_[i] * Field(p[i]);
    }
    return acc;
  }

 private:
  void check_modulus() const {
    if (modulus_.order < 1) throw InvalidArgument("modulus order must be >= 1");
  }
  void check_same(const CyclotomicElement& o) const {
    if (!(modulus_ == o.modulus_)) throw InvalidArgument("mixed moduli in cyclotomic arithmetic");
  }
  CyclotomicElement with_rep(std::vector<Field> r) const {
    CyclotomicElement out(modulus_);
    out.rep_ = std::move(r);
    return out;
  }
  std::vector<Field> modulus_poly() const {
    if (modulus_.kind == ModulusKind::FullCycle) {
      std::vector<Field> m(static_cast<std::size_t>(modulus_.order) + 1, Field(0));
      m.front() = Field(-1);
      m.back() = Field(1);
      return m;
    }
    const Polynomial& phi = cyclotomic_poly(modulus_.order);
    std::vector<Field> m(static_cast<std::size_t>(phi.degree()) + 1, Field(0));
    for (const auto& [e, c] : phi.terms()) m[static_cast<std::size_t>(e)] = Field(c);
    return m;
  }
  std::vector<Field> reduce(std::vector<Field> p) const {
    const auto n = static_cast<std::size_t>(modulus_.order);
    if (p.size() > n) {
      // x^N = 1 holds in both kinds of quotient.
      for (std::size_t i = n; i < p.size(); ++i) p[i % n] = p[i % n] + p[i];
      p.resize(n);
      densepoly::trim(p);
    }
    if (modulus_.kind == ModulusKind::Phi) p = densepoly::divmod(std::move(p), modulus_poly()).second;
    return p;
  }

  Modulus modulus_;
  std::vector<Field> rep_;
};

// F(x) = numerator / denominator, both Laurent polynomials in x.
template <class Field>
struct RootExpression {
  std::map<std::int64_t, Field> numerator;
  std::map<std::int64_t, Field> denominator;
};

RootExpression<Rational> root_expression(const LaurentPolynomial& num, const LaurentPolynomial& den);

// x^shift / prod (1 - x^b)^m over the given (b, m) pairs.
RootExpression<Rational> monomial_over_product(std::int64_t shift, const std::vector<std::pair<std::int64_t, int>>& factors);

struct RootConstraint {
  std::int64_t ambient_order;
  std::vector<std::int64_t> excluded_suborders;
  void validate() const;
};

// Sum of F over the primitive d-th roots of unity.
template <class Field>
Field trace_sum(const RootExpression<Field>& f, std::int64_t d) {
  const Modulus m = Modulus::phi(d);
  auto num = CyclotomicElement<Field>::from_terms(m, f.numerator);
  if (num.is_zero()) return Field(0);
  auto den = CyclotomicElement<Field>::from_terms(m, f.denominator);
  return (num * den.inverse()).trace();
}

template <class Field>
Field full_cycle_sum(const RootExpression<Field>& f, std::int64_t n) {
  const Modulus m = Modulus::full_cycle(n);
  auto num = CyclotomicElement<Field>::from_terms(m, f.numerator);
  auto den = CyclotomicElement<Field>::from_terms(m, f.denominator);
  return (num * den.inverse()).trace();
}

inline std::vector<std::int64_t> admissible_orders(const RootConstraint& c) {
  c.validate();
  std::vector<std::int64_t> out;
  for (auto e : divisors(c.ambient_order)) {
    bool ok = true;
    for (auto d : c.excluded_suborders) ok = ok && (d % e != 0);
    if (ok) out.push_back(e);
  }
  return out;
}

// Sum of F(zeta) over zeta^N = 1 with zeta^d != 1 for each excluded d.
template <class Field>
Field constrained_unity_sum(const RootExpression<Field>& f, const RootConstraint& c) {
  c.validate();
  if (c.excluded_suborders.empty()) {
    try {
      return full_cycle_sum(f, c.ambient_order);
    } catch (const NonInvertibleDenominator&) {
      // Falls through to the per-order traces, which report the offending order.
    }
  }
  Field acc(0);
  for (auto e : admissible_orders(c)) acc = acc + trace_sum(f, e);
  return acc;
}

// sum_{zeta^N = 1, zeta != 1} 1/(1 - zeta) = (N - 1)/2
Rational gessel_harmonic(std::int64_t n);

// (1/a1) sum_{zeta^a1 = 1, zeta != 1} zeta^r / prod (1 - zeta^{a_j})
Rational fourier_dedekind(std::int64_t r, const std::vector<std::int64_t>& a_list, std::int64_t a1);

extern template class CyclotomicElement<Rational>;
extern template class CyclotomicElement<RationalFunction>;

}  // namespace circlehilb
