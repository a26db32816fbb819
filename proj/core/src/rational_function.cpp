#include "circlehilb/rational_function.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "circlehilb/error.hpp"

namespace circlehilb {

FactoredDenominator normalize_factors(FactoredDenominator factors) {
  std::map<Exponent, int> merged;
  for (const auto& f : factors) {
    if (f.d <= 0 || f.multiplicity < 0) throw InvalidArgument("denominator factor needs d >= 1, multiplicity >= 0");
    if (f.multiplicity > 0) merged[f.d] += f.multiplicity;
  }
  FactoredDenominator out;
  for (const auto& [d, m] : merged) out.push_back({d, m});
  return out;
}

Polynomial expand_factors(const FactoredDenominator& factors) {
  Polynomial p(1);
  for (const auto& f : factors) p *= one_minus_t_pow(f.d).pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

CyclotomicContent content_of(const FactoredDenominator& factors) {
  CyclotomicContent c;
  for (const auto& f : factors) {
    for (auto e : divisors(f.d)) c[e] += f.multiplicity;
  }
  return c;
}

namespace {

const Polynomial& content_base(std::int64_t e) {
  static const Polynomial one_minus_t = one_minus_t_pow(1);
  return e == 1 ? one_minus_t : cyclotomic_poly(e);
}

// Cancels cyclotomic factors shared by num and prod base_e^{m_e}.
void cancel_content(Polynomial& num, CyclotomicContent& content) {
  for (auto it = content.begin(); it != content.end();) {
    auto& [e, m] = *it;
    while (m > 0 && divisible_by_cyclotomic(num, e)) {
      num = exact_divide(num, content_base(e));
      --m;
    }
    it = (m == 0) ? content.erase(it) : std::next(it);
  }
}

constexpr Exponent kContentDetectionMaxDegree = 400;

// Writes den = c * prod base_e^{m_e} when possible.
std::optional<std::pair<CyclotomicContent, Rational>> detect_content(const Polynomial& den) {
  if (den.degree() > kContentDetectionMaxDegree || den.constant_term() == 0) return std::nullopt;
  if (!den.has_integer_coefficients()) return std::nullopt;
  const Rational scale = den.constant_term();
  Polynomial rest = den * Rational(1 / scale);
  Polynomial rev = reversed(rest);
  if (!(rev == rest || rev == -rest)) return std::nullopt;
  CyclotomicContent content;
  for (std::int64_t e = 1; rest.degree() > 0; ++e) {
    if (e > 6 * rest.degree() + 6) return std::nullopt;
    if (euler_phi(e) > rest.degree()) continue;
    while (rest.degree() > 0 && divisible_by_cyclotomic(rest, e)) {
      rest = exact_divide(rest, content_base(e));
      ++content[e];
    }
  }
  if (!(rest == Polynomial(1))) return std::nullopt;
  return std::make_pair(content, scale);
}

// Enumerates multisets of `factors` values d (from sorted candidates) whose
// product prod(1 - t^d) is divisible by every Phi_e^{m_e} in needs.
class CoverSearch {
 public:
  CoverSearch(std::vector<std::pair<std::int64_t, int>> needs, std::vector<std::int64_t> candidates, int factors)
      : needs_(std::move(needs)), candidates_(std::move(candidates)), factors_(factors), covered_(needs_.size(), 0) {}

  std::optional<std::int64_t> minimal_sum() {
    best_ = std::numeric_limits<std::int64_t>::max();
    collect_ = false;
    dfs(0, 0);
    if (best_ == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    return best_;
  }

  std::vector<std::vector<std::int64_t>> all_up_to(std::int64_t bound) {
    best_ = bound;
    collect_ = true;
    found_.clear();
    nodes_ = 0;
    dfs(0, 0);
    return found_;
  }

 private:
  static constexpr std::size_t kNodeBudget = 200000;

  void dfs(std::size_t start, std::int64_t sum) {
    if (++nodes_ > kNodeBudget) return;
    const int remaining = factors_ - static_cast<int>(current_.size());
    for (std::size_t i = 0; i < needs_.size(); ++i) {
      if (needs_[i].second - covered_[i] > remaining) return;
    }
    if (remaining == 0) {
      if (collect_) {
        found_.push_back(current_);
      } else {
        best_ = std::min(best_, sum);
      }
      return;
    }
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      const std::int64_t d = candidates_[c];
      const std::int64_t lower = sum + d * remaining;
      if (collect_ ? lower > best_ : lower >= best_) break;
      current_.push_back(d);
      for (std::size_t i = 0; i < needs_.size(); ++i) {
        if (d % needs_[i].first == 0) ++covered_[i];
      }
      dfs(c, sum + d);
      for (std::size_t i = 0; i < needs_.size(); ++i) {
        if (d % needs_[i].first == 0) --covered_[i];
      }
      current_.pop_back();
    }
  }

  std::vector<std::pair<std::int64_t, int>> needs_;
  std::vector<std::int64_t> candidates_;
  int factors_;
  std::vector<int> covered_;
  std::vector<std::int64_t> current_;
  std::vector<std::vector<std::int64_t>> found_;
  std::int64_t best_ = 0;
  bool collect_ = false;
  std::size_t nodes_ = 0;
};

std::vector<std::int64_t> cover_candidates(const std::vector<std::pair<std::int64_t, int>>& needs) {
  constexpr std::int64_t kMaxLcm = std::int64_t{1} << 40;
  constexpr std::size_t kMaxCandidates = 4096;
  std::int64_t l = 1;
  bool ok = true;
  for (const auto& [e, m] : needs) {
    std::int64_t g = std::gcd(l, e);
    if (l / g > kMaxLcm / e) {
      ok = false;
      break;
    }
    l = l / g * e;
  }
  if (ok) {
    auto ds = divisors(l);
    if (ds.size() <= kMaxCandidates) return ds;
  }
  std::vector<std::int64_t> c{1};
  for (std::size_t i = 0; i < needs.size(); ++i) {
    c.push_back(needs[i].first);
    for (std::size_t j = i + 1; j < needs.size(); ++j) {
      std::int64_t a = needs[i].first, b = needs[j].first;
      std::int64_t g = std::gcd(a, b);
      if (a / g <= kMaxLcm / b) c.push_back(a / g * b);
    }
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

std::optional<FactoredView> choose_view(const Polynomial& num, const CyclotomicContent& content) {
  std::vector<std::pair<std::int64_t, int>> needs;
  int factors = 0;
  for (const auto& [e, m] : content) {
    if (e == 1) {
      factors = std::max(factors, m);
    } else if (m > 0) {
      needs.emplace_back(e, m);
      factors = std::max(factors, m);
    }
  }
  if (factors == 0) return FactoredView{num, {}};
  // Larger orders first: they constrain the search most.
  std::sort(needs.begin(), needs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  CoverSearch search(needs, cover_candidates(needs), factors);
  auto best = search.minimal_sum();
  if (!best) return std::nullopt;
  auto covers = search.all_up_to(2 * *best);
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    std::int64_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  constexpr std::size_t kMaxTests = 256;
  std::optional<FactoredView> first;
  for (std::size_t i = 0; i < covers.size() && i < kMaxTests; ++i) {
    FactoredDenominator den;
    for (auto d : covers[i]) den.push_back({d, 1});
    den = normalize_factors(den);
    CyclotomicContent cofactor = content_of(den);
    for (const auto& [e, m] : content) cofactor[e] -= m;
    FactoredView view{num * expand_content(cofactor), den};
    if (view.numerator.is_nonnegative()) return view;
    if (!first) first = std::move(view);
  }
  return first;
}

}  // namespace

RationalFunction RationalFunction::with_content(Polynomial num, CyclotomicContent content) {
  RationalFunction f;
  if (num.is_zero()) return f;
  for (auto it = content.begin(); it != content.end();) {
    it = it->second == 0 ? content.erase(it) : std::next(it);
  }
  cancel_content(num, content);
  f.num_ = std::move(num);
  f.den_ = expand_content(content);
  f.content_ = std::move(content);
  return f;
}

RationalFunction RationalFunction::reduce(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ZeroDenominator("reduce with zero denominator");
  if (num.is_zero()) return RationalFunction();
  if (auto detected = detect_content(den)) {
    return with_content(num * Rational(1 / detected->second), std::move(detected->first));
  }
  Polynomial g = gcd(num, den);
  Polynomial n = exact_divide(num, g);
  Polynomial d = exact_divide(den, g);
  Rational scale = d.constant_term() != 0 ? d.constant_term() : d.leading_coefficient();
  RationalFunction f;
  f.num_ = n * Rational(1 / scale);
  f.den_ = d * Rational(1 / scale);
  f.content_.reset();
  if (auto detected = detect_content(f.den_)) f.content_ = std::move(detected->first);
  return f;
}

RationalFunction RationalFunction::from_factored(const Polynomial& num, const FactoredDenominator& den) {
  FactoredDenominator factors = normalize_factors(den);
  RationalFunction f = with_content(num, content_of(factors));
  if (!f.is_zero()) {
    CyclotomicContent cofactor = content_of(factors);
    for (const auto& [e, m] : *f.content_) cofactor[e] -= m;
    f.constructed_view_ = FactoredView{f.num_ * expand_content(cofactor), factors};
  }
  return f;
}

std::optional<FactoredView> RationalFunction::factored_view() const {
  if (!content_) return std::nullopt;
  if (auto view = choose_view(num_, *content_)) {
    if (view->numerator.is_nonnegative() || !constructed_view_) return view;
  }
  return constructed_view_;
}

std::optional<FactoredDenominator> RationalFunction::factored_denominator() const {
  auto view = factored_view();
  if (!view) return std::nullopt;
  return view->denominator;
}

Rational RationalFunction::evaluate(const Rational& t) const {
  Rational d = den_.evaluate(t);
  if (d == 0) throw ZeroDenominator("evaluation at a pole");
  return num_.evaluate(t) / d;
}

RationalFunction RationalFunction::at_inverse() const {
  if (is_zero()) return *this;
  const Exponent a = num_.degree();
  const Exponent b = den_.degree();
  if (content_ && b >= a) {
    // rev(1 - t) = -(1 - t) and every Phi_e with e >= 2 is palindromic.
    auto it = content_->find(1);
    const int m1 = it == content_->end() ? 0 : it->second;
    Polynomial n = reversed(num_).shifted(b - a);
    if (m1 % 2 == 1) n = -n;
    RationalFunction f = *this;
    f.num_ = std::move(n);
    f.constructed_view_.reset();
    return f;
  }
  Polynomial n = reversed(num_);
  Polynomial d = reversed(den_);
  if (b >= a) {
    n = n.shifted(b - a);
  } else {
    d = d.shifted(a - b);
  }
  return reduce(n, d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  if (f.constructed_view_) f.constructed_view_->numerator = -f.constructed_view_->numerator;
  return f;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.content_ && b.content_) {
    CyclotomicContent lcm = *a.content_;
    for (const auto& [e, m] : *b.content_) lcm[e] = std::max(lcm[e], m);
    CyclotomicContent ca = lcm, cb = lcm;
    for (const auto& [e, m] : *a.content_) ca[e] -= m;
    for (const auto& [e, m] : *b.content_) cb[e] -= m;
    Polynomial num = a.num_ * expand_content(ca) + b.num_ * expand_content(cb);
    return RationalFunction::with_content(std::move(num), std::move(lcm));
  }
  return RationalFunction::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.content_ && b.content_) {
    CyclotomicContent sum = *a.content_;
    for (const auto& [e, m] : *b.content_) sum[e] += m;
    return RationalFunction::with_content(a.num_ * b.num_, std::move(sum));
  }
  return RationalFunction::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
  if (a.is_zero()) return RationalFunction();
  if (b.num_.is_constant() && a.content_) {
    RationalFunction f = a;
    const Rational c = 1 / b.num_.constant_term();
    return f * RationalFunction(b.den_ * c);
  }
  return RationalFunction::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

int multiplicity_at_one(const Polynomial& p) {
  if (p.is_zero()) throw ZeroFunction("multiplicity of a root of the zero polynomial");
  std::vector<Rational> c = dense(p);
  int mult = 0;
  while (true) {
    // Synthetic division by (t - 1).
    Rational acc = 0;
    std::vector<Rational> q(c.size() > 0 ? c.size() - 1 : 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      acc += c[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (acc != 0) return mult;
    ++mult;
    c = std::move(q);
  }
}

namespace {

std::vector<Rational> series_divide(const std::vector<Rational>& num, const Polynomial& den, std::size_t order) {
  const Rational c0 = den.constant_term();
  if (c0 == 0) throw PoleAtZero("denominator vanishes at t = 0");
  const Rational inv = 1 / c0;
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    Rational acc = i < num.size() ? num[i] : Rational(0);
    for (const auto& [e, c] : den.terms()) {
      if (e == 0) continue;
      if (static_cast<std::size_t>(e) > i) break;
      acc -= c * out[i - static_cast<std::size_t>(e)];
    }
    out[i] = acc * inv;
  }
  return out;
}

}  // namespace

std::vector<Rational> series_at_zero(const RationalFunction& f, std::size_t order) {
  const Polynomial& den = f.denominator();
  if (den.constant_term() == 0) throw PoleAtZero("denominator vanishes at t = 0");
  std::vector<Rational> num = dense(f.numerator().truncated(static_cast<Exponent>(order)));
  if (f.denominator_content()) {
    // Expand through prod (1 - t^d) when a factored view is at hand.
    if (auto view = f.factored_view()) {
      std::vector<Rational> s = dense(view->numerator.truncated(static_cast<Exponent>(order)));
      s.resize(order + 1);
      for (const auto& fac : view->denominator) {
        const auto d = static_cast<std::size_t>(fac.d);
        for (int r = 0; r < fac.multiplicity; ++r) {
          for (std::size_t i = d; i <= order; ++i) s[i] += s[i - d];
        }
      }
      return s;
    }
  }
  return series_divide(num, den, order);
}

LaurentExpansion laurent_at_one(const RationalFunction& f, std::size_t count) {
  if (f.is_zero()) throw ZeroFunction("Laurent expansion of zero");
  const int pn = multiplicity_at_one(f.numerator());
  const int pd = multiplicity_at_one(f.denominator());
  const Polynomial one_minus_t = one_minus_t_pow(1);
  const Polynomial nt = exact_divide(f.numerator(), one_minus_t.pow(static_cast<unsigned>(pn)));
  const Polynomial dt = exact_divide(f.denominator(), one_minus_t.pow(static_cast<unsigned>(pd)));
  // [s^j] p(1 - s) = (-1)^j sum_i c_i C(i, j)
  auto shift = [count](const Polynomial& p) {
    std::vector<Rational> out(count);
    for (std::size_t j = 0; j < count; ++j) {
      Integer acc = 0;
      Rational racc = 0;
      for (const auto& [i, c] : p.terms()) {
        if (static_cast<std::size_t>(i) < j) continue;
        Integer b = binomial(i, static_cast<std::int64_t>(j));
        if (c.get_den() == 1) {
          mpz_addmul(acc.get_mpz_t(), c.get_num_mpz_t(), b.get_mpz_t());
        } else {
          racc += c * Rational(b);
        }
      }
      Rational v = racc + Rational(acc);
      out[j] = (j % 2 == 0) ? v : Rational(-v);
    }
    return out;
  };
  std::vector<Rational> ns = shift(nt);
  Polynomial ds = Polynomial::from_dense(shift(dt));
  LaurentExpansion out;
  out.pole_order = pd - pn;
  out.coefficients = count == 0 ? std::vector<Rational>{} : series_divide(ns, ds, count - 1);
  return out;
}

std::int64_t degree(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroFunction("degree of the zero function");
  return f.numerator().degree() - f.denominator().degree();
}

}  // namespace circlehilb
