#include "circlehilb/cyclotomic_poly.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "circlehilb/error.hpp"

namespace circlehilb {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw InvalidArgument("divisors of a nonpositive number");
  std::vector<std::int64_t> small, large;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i != n / i) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

namespace {

template <class Value>
class Memo {
 public:
  template <class Make>
  const Value& get(std::int64_t key, Make&& make) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return *it->second;
    }
    auto value = std::make_unique<Value>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::int64_t, std::unique_ptr<Value>> table_;
};

Memo<Polynomial>& phi_memo() {
  static Memo<Polynomial> memo;
  return memo;
}

Memo<std::vector<Rational>>& power_sum_memo() {
  static Memo<std::vector<Rational>> memo;
  return memo;
}

}  // namespace

const Polynomial& cyclotomic_poly(std::int64_t d) {
  if (d < 1) throw InvalidArgument("cyclotomic_poly needs d >= 1");
  return phi_memo().get(d, [d] {
    // x^d - 1 = prod_{e | d} Phi_e
    Polynomial p = Polynomial::monomial(d) - Polynomial(1);
    for (auto e : divisors(d)) {
      if (e != d) p = exact_divide(p, cyclotomic_poly(e));
    }
    return p;
  });
}

const std::vector<Rational>& cyclotomic_power_sums(std::int64_t d) {
  return power_sum_memo().get(d, [d] {
    const Polynomial& phi = cyclotomic_poly(d);
    const auto n = static_cast<std::size_t>(phi.degree());
    // Elementary symmetric functions of the roots: e_k = (-1)^k c_{n-k}.
    std::vector<Rational> e(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational c = phi.coeff(static_cast<Exponent>(n - k));
      e[k] = (k % 2 == 0) ? c : Rational(-c);
    }
    std::vector<Rational> p(n);
    if (n == 0) return p;
    p[0] = static_cast<long>(n);
    for (std::size_t k = 1; k < n; ++k) {
      Rational s = 0;
      for (std::size_t i = 1; i < k; ++i) {
        Rational term = e[i] * p[k - i];
        if (i % 2 == 1) s += term; else s -= term;
      }
      Rational last = static_cast<long>(k) * e[k];
      if (k % 2 == 1) s += last; else s -= last;
      p[k] = s;
    }
    return p;
  });
}

CyclotomicContent content_of_one_minus(std::int64_t d) {
  CyclotomicContent c;
  for (auto e : divisors(d)) c[e] = 1;
  return c;
}

std::vector<Rational> fold_mod_cycle(const Polynomial& p, std::int64_t n) {
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e % n)] += c;
  return out;
}

bool divisible_by_cyclotomic(const Polynomial& p, std::int64_t e) {
  if (p.is_zero()) return true;
  if (e == 1) return p.evaluate(1) == 0;
  if (e == 2) return p.evaluate(-1) == 0;
  // Phi_e | t^e - 1, so reduce modulo t^e - 1 first.
  Polynomial folded = Polynomial::from_dense(fold_mod_cycle(p, e));
  return divmod(folded, cyclotomic_poly(e)).second.is_zero();
}

Polynomial expand_content(const CyclotomicContent& content) {
  Polynomial p(1);
  for (const auto& [e, m] : content) {
    if (m <= 0) continue;
    const Polynomial base = e == 1 ? one_minus_t_pow(1) : cyclotomic_poly(e);
    p *= base.pow(static_cast<unsigned>(m));
  }
  return p;
}

}  // namespace circlehilb
