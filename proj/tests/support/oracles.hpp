#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's algorithms; inputs and outputs are plain vectors.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "circlehilb/rational.hpp"

namespace oracle {

using circlehilb::Integer;
using circlehilb::Rational;

// Counts exponent vectors e with sum(e) = m and sum(a_i e_i) = 0 by plain
// depth-first enumeration.
inline std::int64_t count_invariant_monomials(const std::vector<std::int64_t>& a, std::int64_t m) {
  std::int64_t count = 0;
  const std::size_t n = a.size();
  std::function<void(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left,
                                                                        std::int64_t weight) {
    if (i + 1 == n) {
      if (weight + a[i] * left == 0) ++count;
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) go(i + 1, left - e, weight + a[i] * e);
  };
  if (n == 0) return m == 0 ? 1 : 0;
  go(0, m, 0);
  return count;
}

// Truncated power series in s with rational coefficients.
using Series = std::vector<Rational>;

inline Series mul(const Series& a, const Series& b, std::size_t len) {
  Series r(len, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Series inverse(const Series& a, std::size_t len) {
  Series r(len, Rational(0));
  r[0] = 1 / a[0];
  for (std::size_t i = 1; i < len; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i && j < a.size(); ++j) acc += a[j] * r[i - j];
    r[i] = -acc / a[0];
  }
  return r;
}

// Coefficients of p(1 - s) for p given densely in t.
inline Series substitute_one_minus(const std::vector<Rational>& p) {
  Series r(p.size(), Rational(0));
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p[e] == 0) continue;
    for (std::size_t j = 0; j <= e; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), e, j);
      r[j] += p[e] * Rational(b) * (j % 2 ? -1 : 1);
    }
  }
  return r;
}

struct Laurent {
  std::int64_t pole = 0;
  std::vector<Rational> coeffs;
};

// numerator(t) / prod (1 - t^d)^mult expanded at t = 1 in powers of s = 1 - t.
// 1 - (1-s)^d = s * q_d(s) with q_d(0) = d.
inline Laurent laurent_of_factored(const std::vector<Rational>& numerator,
                                   const std::vector<std::pair<std::int64_t, int>>& factors, std::size_t count) {
  std::int64_t pole = 0;
  for (auto [d, mult] : factors) pole += mult;
  Series num = substitute_one_minus(numerator);
  std::size_t zeros = 0;
  while (zeros < num.size() && num[zeros] == 0) ++zeros;
  num.erase(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(zeros));
  pole -= static_cast<std::int64_t>(zeros);
  Series acc = num;
  acc.resize(count, Rational(0));
  for (auto [d, mult] : factors) {
    Series q(static_cast<std::size_t>(d), Rational(0));
    for (std::int64_t j = 1; j <= d; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j));
      q[static_cast<std::size_t>(j - 1)] = Rational(b) * (j % 2 ? 1 : -1);
    }
    Series qi = inverse(q, count);
    for (int r = 0; r < mult; ++r) acc = mul(acc, qi, count);
  }
  return {pole, acc};
}

// Leibniz expansion over all permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rational power(const Rational& x, std::int64_t e) {
  Rational r = 1;
  Rational b = e < 0 ? 1 / x : x;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
  return r;
}

inline Rational vandermonde(const std::vector<Rational>& xs) {
  Rational v = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) v *= xs[i] - xs[j];
  return v;
}

// The defining determinant: first row x^u then zeros, rows n-2..0 in every
// variable, divided by the two block Vandermondes.
inline Rational partial_schur(std::int64_t u, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t k = xs.size(), n = xs.size() + ys.size();
  std::vector<std::vector<Rational>> z(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t c = 0; c < n; ++c) {
    const Rational& v = c < k ? xs[c] : ys[c - k];
    if (c < k) z[0][c] = power(v, u);
    for (std::size_t r = 1; r < n; ++r) z[r][c] = power(v, static_cast<std::int64_t>(n - 1 - r));
  }
  return leibniz_det(z) / (vandermonde(xs) * vandermonde(ys));
}

// Sum of f(zeta) over the given roots, in double precision.
template <class F>
std::complex<double> root_sum(std::int64_t n, F&& keep, std::function<std::complex<double>(std::complex<double>)> f) {
  std::complex<double> acc = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    if (!keep(j)) continue;
    const double th = 2.0 * 3.14159265358979323846 * static_cast<double>(j) / static_cast<double>(n);
    acc += f(std::polar(1.0, th));
  }
  return acc;
}

// (-log(1 - s))^k / s^k = (1 + s/2 + s^2/3 + ...)^k for any integer k.
inline Series neg_log_power(std::int64_t k, std::size_t len) {
  Series base(len, Rational(0));
  for (std::size_t i = 0; i < len; ++i) base[i] = Rational(1, static_cast<long>(i + 1));
  for (auto& c : base) c.canonicalize();
  Series b = k < 0 ? inverse(base, len) : base;
  Series r(len, Rational(0));
  r[0] = 1;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, b, len);
  return r;
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t span = 9, bool nonzero = true) {
  std::uniform_int_distribution<std::int64_t> num(-span, span), den(1, span);
  for (;;) {
    Rational q(Integer(static_cast<long>(num(rng))), Integer(static_cast<long>(den(rng))));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, std::size_t count, std::int64_t span = 9) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q = random_rational(rng, span);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

}  // namespace oracle
