#include "circlehilb/hironaka.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "circlehilb/error.hpp"

namespace circlehilb {

void HironakaData::validate() const {
  if (alphas.empty()) throw Empty("need at least one parameter degree");
  if (betas.empty()) throw Empty("need at least one generator degree");
  for (auto a : alphas) {
    if (a < 1) throw InvalidArgument("parameter degrees must be positive");
  }
  for (auto b : betas) {
    if (b < 0) throw InvalidArgument("generator degrees must be nonnegative");
  }
}

namespace {

// Truncated series 1/((1 - e^{-y})/y) up to y^len-1.
const std::vector<Rational>& todd_kernel(std::size_t len) {
  static std::shared_mutex mu;
  static std::vector<Rational> cache;
  {
    std::shared_lock lock(mu);
    if (cache.size() >= len) return cache;
  }
  std::unique_lock lock(mu);
  if (cache.size() < len) {
    std::vector<Rational> f(len);
    Rational fact = 1;
    for (std::size_t i = 0; i < len; ++i) {
      fact *= Rational(static_cast<long>(i + 1));
      f[i] = (i % 2 == 0 ? Rational(1) : Rational(-1)) / fact;
    }
    std::vector<Rational> inv(len);
    inv[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= i; ++j) acc += f[j] * inv[i - j];
      inv[i] = -acc;
    }
    cache = std::move(inv);
  }
  return cache;
}

std::vector<Rational> lambda_values(std::size_t m) {
  // rows[mm][k] = lambda_mm(k) for k = 0..m
  std::vector<std::vector<Rational>> rows(m + 1, std::vector<Rational>(m + 1));
  for (std::size_t k = 0; k <= m; ++k) rows[0][k] = 1;
  for (std::size_t mm = 1; mm <= m; ++mm) {
    rows[mm][0] = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      const Rational kk(static_cast<long>(k));
      const Rational s(static_cast<long>(mm + k));
      rows[mm][k] = (kk * rows[mm][k - 1] + (s - 1) * rows[mm - 1][k]) / s;
    }
  }
  return rows[m];
}

// Newton interpolation through (k, v[k]), k = 0..m, expanded to monomials.
std::vector<Rational> interpolate(const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  std::vector<Rational> diff = v;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) diff[i] = (diff[i] - diff[i - 1]) / Rational(static_cast<long>(j));
  }
  std::vector<Rational> poly(n), basis{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += diff[j] * basis[i];
    // basis *= (k - j)
    std::vector<Rational> next(basis.size() + 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= Rational(static_cast<long>(j)) * basis[i];
    }
    basis = std::move(next);
  }
  return poly;
}

}  // namespace

Rational todd(std::size_t j, const std::vector<std::int64_t>& alphas) {
  const auto& kernel = todd_kernel(j + 1);
  std::vector<Rational> acc(j + 1);
  acc[0] = 1;
  for (auto a : alphas) {
    std::vector<Rational> scaled(j + 1);
    Rational p = 1;
    for (std::size_t i = 0; i <= j; ++i) {
      scaled[i] = kernel[i] * p;
      p *= Rational(a);
    }
    std::vector<Rational> next(j + 1);
    for (std::size_t x = 0; x <= j; ++x) {
      if (acc[x] == 0) continue;
      for (std::size_t y = 0; x + y <= j; ++y) next[x + y] += acc[x] * scaled[y];
    }
    acc = std::move(next);
  }
  return acc[j];
}

const std::vector<Rational>& lambda_coefficients(std::size_t m) {
  static std::shared_mutex mu;
  static std::map<std::size_t, std::vector<Rational>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto poly = interpolate(lambda_values(m));
  std::unique_lock lock(mu);
  return cache.try_emplace(m, std::move(poly)).first->second;
}

Rational lambda_poly(std::size_t m, std::int64_t k) {
  const auto& c = lambda_coefficients(m);
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * Rational(k) + c[i];
  return acc;
}

Integer stirling_first(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) throw OutOfRange("stirling_first needs 0 <= k <= m");
  std::vector<Integer> row{Integer(1)};
  for (std::int64_t i = 0; i < m; ++i) {
    std::vector<Integer> next(row.size() + 1, Integer(0));
    for (std::size_t t = 0; t < row.size(); ++t) {
      next[t + 1] += row[t];
      next[t] -= Integer(static_cast<long>(i)) * row[t];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Rational phi(std::size_t m, const std::vector<std::int64_t>& alphas) {
  const auto d = static_cast<std::int64_t>(alphas.size());
  Rational acc = 0;
  for (std::size_t k = 0; k <= m; ++k) acc += lambda_poly(m - k, static_cast<std::int64_t>(k) - d) * todd(k, alphas);
  return acc;
}

Rational gamma_cm(std::size_t ell, const HironakaData& data) {
  data.validate();
  Integer ed = 1;
  for (auto a : data.alphas) ed *= Integer(static_cast<long>(a));
  auto power_sum = [&](std::size_t k) {
    Integer s = 0;
    for (auto b : data.betas) {
      Integer p = 1;
      for (std::size_t i = 0; i < k; ++i) p *= Integer(static_cast<long>(b));
      s += p;
    }
    return s;
  };
  Rational total = 0;
  Rational fact = 1;
  for (std::size_t j = 0; j <= ell; ++j) {
    if (j > 0) fact *= Rational(static_cast<long>(j));
    Integer inner = 0;
    for (std::size_t k = 0; k <= j; ++k) {
      inner += stirling_first(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)) * power_sum(k);
    }
    Rational term = phi(ell - j, data.alphas) * Rational(inner) / fact;
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total / Rational(ed);
}

RationalFunction hilb_from_hironaka(const HironakaData& data) {
  data.validate();
  Polynomial num;
  for (auto b : data.betas) num.add_to_coeff(b, 1);
  FactoredDenominator den;
  for (auto a : data.alphas) den.push_back({a, 1});
  return RationalFunction::from_factored(num, den);
}

}  // namespace circlehilb
