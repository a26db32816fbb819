#include "circlehilb/schur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace circlehilb {

Signature::Signature(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) throw InvalidArgument("signature parts must be weakly decreasing");
  }
}

SplitVariables SplitVariables::from_weights(const std::vector<std::int64_t>& weights) {
  SplitVariables v;
  for (auto a : weights) {
    if (a < 0) v.xs.emplace_back(a);
    if (a > 0) v.ys.emplace_back(a);
  }
  return v;
}

Rational vandermonde(const std::vector<Rational>& xs) { return detail::vandermonde(xs); }

Rational alternant(const Signature& lambda, const std::vector<Rational>& xs) {
  const std::size_t n = xs.size();
  if (lambda.size() != n) throw InvalidArgument("alternant: signature length differs from variable count");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = detail::field_pow(xs[j], lambda[i]);
  }
  return detail::determinant(std::move(a));
}

Rational elementary_symmetric(std::size_t j, const std::vector<Rational>& values) {
  if (j > values.size()) return 0;
  std::vector<Rational> e(j + 1);
  e[0] = 1;
  for (const auto& x : values) {
    for (std::size_t i = j; i >= 1; --i) e[i] += e[i - 1] * x;
  }
  return e[j];
}

namespace {

std::vector<Rational> complete_table(std::size_t top, const std::vector<Rational>& values) {
  std::vector<Rational> h(top + 1);
  h[0] = 1;
  for (const auto& x : values) {
    for (std::size_t i = 1; i <= top; ++i) h[i] += h[i - 1] * x;
  }
  return h;
}

Rational shift_factor(const std::vector<Rational>& xs, std::int64_t c) {
  Rational p = 1;
  for (const auto& x : xs) p *= detail::field_pow(x, c);
  return p;
}

// Splits a signature into a partition and the shift prod x^c.
std::pair<std::vector<std::int64_t>, std::int64_t> normalize_signature(const Signature& lambda) {
  std::vector<std::int64_t> parts = lambda.parts();
  std::int64_t c = parts.empty() ? 0 : std::min<std::int64_t>(parts.back(), 0);
  for (auto& p : parts) p -= c;
  return {parts, c};
}

// Visits the content (letter counts) of every semistandard tableau of the
// given partition shape with letters 0..letters-1.
void for_each_tableau(const std::vector<std::int64_t>& shape, std::size_t letters,
                      const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> rows;
  for (auto r : shape) {
    if (r > 0) rows.push_back(r);
  }
  if (rows.size() > letters) return;
  std::vector<std::vector<std::size_t>> cell(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) cell[r].assign(static_cast<std::size_t>(rows[r]), 0);
  std::vector<std::int64_t> content(letters, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      visit(content);
      return;
    }
    if (c == cell[r].size()) {
      fill(r + 1, 0);
      return;
    }
    std::size_t lo = c > 0 ? cell[r][c - 1] : 0;
    if (r > 0) lo = std::max(lo, cell[r - 1][c] + 1);
    std::size_t below = 0;
    for (std::size_t rr = r + 1; rr < rows.size() && static_cast<std::size_t>(rows[rr]) > c; ++rr) ++below;
    if (letters < below + 1) return;
    const std::size_t hi = letters - 1 - below;
    for (std::size_t v = lo; v <= hi; ++v) {
      cell[r][c] = v;
      ++content[v];
      fill(r, c + 1);
      --content[v];
    }
  };
  fill(0, 0);
}

Rational tableau_sum(const std::vector<std::int64_t>& shape, const std::vector<Rational>& xs) {
  Rational total = 0;
  for_each_tableau(shape, xs.size(), [&](const std::vector<std::int64_t>& content) {
    Rational p = 1;
    for (std::size_t i = 0; i < content.size(); ++i) {
      if (content[i]) p *= detail::field_pow(xs[i], content[i]);
    }
    total += p;
  });
  return total;
}

Rational jacobi_trudi(const std::vector<std::int64_t>& shape, const std::vector<Rational>& xs) {
  const std::size_t l = shape.size();
  if (l == 0) return 1;
  const std::int64_t top = shape.front() + static_cast<std::int64_t>(l);
  const auto h = complete_table(static_cast<std::size_t>(std::max<std::int64_t>(top, 0)), xs);
  std::vector<std::vector<Rational>> a(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const std::int64_t idx = shape[i] - static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j);
      a[i][j] = idx < 0 ? Rational(0) : h[static_cast<std::size_t>(idx)];
    }
  }
  return detail::determinant(std::move(a));
}

using SchurEvaluator = std::function<Rational(const Signature&, const std::vector<Rational>&)>;

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

// Laplace expansion of the defining determinant along the x columns; each
// minor pair is a product of Laurent-Schur values.
Rational laplace_sum(std::int64_t u, const SplitVariables& vars, const SchurEvaluator& schur) {
  const auto k = static_cast<std::int64_t>(vars.xs.size());
  const auto m = static_cast<std::int64_t>(vars.ys.size());
  const std::int64_t n = k + m;
  if (k == 0) return 0;
  if (u > n - 2) throw OutOfRange("S_u needs u <= n - 2");
  const std::int64_t top = n - 2;
  const std::int64_t chosen = u >= 0 ? k : k - 1;
  const int global = u >= 0 ? parity_sign(k * (k + 1) / 2 + n * (k - 1) + u) : parity_sign(k * (k - 1) / 2 + n * (k - 1));
  Rational total = 0;
  std::vector<std::int64_t> lambda;
  // Strictly decreasing subsets of {0..n-2}.
  std::function<void(std::int64_t)> choose = [&](std::int64_t next_max) {
    if (static_cast<std::int64_t>(lambda.size()) == chosen) {
      std::int64_t i = 0;
      if (u >= 0) {
        auto it = std::find(lambda.begin(), lambda.end(), u);
        if (it == lambda.end()) return;
        i = (it - lambda.begin()) + 1;
      }
      std::vector<std::int64_t> complement;
      for (std::int64_t v = top; v >= 0; --v) {
        if (std::find(lambda.begin(), lambda.end(), v) == lambda.end()) complement.push_back(v);
      }
      if (u >= 0) {
        complement.push_back(u);
        std::sort(complement.rbegin(), complement.rend());
      }
      std::vector<std::int64_t> mx = lambda;
      if (u < 0) mx.push_back(u);
      for (std::int64_t j = 0; j < k; ++j) mx[j] -= (k - 1 - j);
      std::vector<std::int64_t> my = complement;
      for (std::int64_t j = 0; j < m; ++j) my[j] -= (m - 1 - j);
      const std::int64_t norm = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
      const int s = parity_sign(norm + i);
      Rational term = schur(Signature(mx), vars.xs);
      if (term == 0) return;
      term *= schur(Signature(my), vars.ys);
      if (s < 0) term = -term;
      total += term;
      return;
    }
    for (std::int64_t v = next_max; v >= 0; --v) {
      lambda.push_back(v);
      choose(v - 1);
      lambda.pop_back();
    }
  };
  choose(top);
  return global < 0 ? Rational(-total) : total;
}

}  // namespace

Rational complete_symmetric(std::size_t j, const std::vector<Rational>& values) {
  return complete_table(j, values)[j];
}

Rational schur_jacobi_trudi(const Signature& lambda, const std::vector<Rational>& xs) {
  if (lambda.size() != xs.size()) throw InvalidArgument("schur: signature length differs from variable count");
  auto [shape, c] = normalize_signature(lambda);
  return shift_factor(xs, c) * jacobi_trudi(shape, xs);
}

Rational schur_tableaux(const Signature& lambda, const std::vector<Rational>& xs) {
  if (lambda.size() != xs.size()) throw InvalidArgument("schur: signature length differs from variable count");
  auto [shape, c] = normalize_signature(lambda);
  return shift_factor(xs, c) * tableau_sum(shape, xs);
}

Rational laurent_schur(const Signature& lambda, const std::vector<Rational>& xs) {
  if (lambda.size() != xs.size()) throw InvalidArgument("laurent_schur: signature length differs from variable count");
  const Rational v = vandermonde(xs);
  if (v == 0) return schur_tableaux(lambda, xs);
  std::vector<std::int64_t> shifted = lambda.parts();
  const auto n = static_cast<std::int64_t>(shifted.size());
  for (std::int64_t i = 0; i < n; ++i) shifted[i] += n - 1 - i;
  return alternant(Signature(shifted), xs) / v;
}

Rational partial_schur_det(std::int64_t u, const SplitVariables& vars) {
  return partial_schur_det_over<Rational>(u, vars.xs, vars.ys);
}

Rational partial_schur_expansion(std::int64_t u, const SplitVariables& vars) {
  return laplace_sum(u, vars, schur_jacobi_trudi);
}

Rational partial_schur_tableaux(std::int64_t u, const SplitVariables& vars, std::size_t max_variables) {
  if (vars.n() > max_variables) {
    throw CombinatorialExplosion("tableau route limited to k + m <= " + std::to_string(max_variables));
  }
  return laplace_sum(u, vars, schur_tableaux);
}

Rational partial_schur(std::int64_t u, const SplitVariables& vars) { return partial_schur_expansion(u, vars); }

namespace {

void add_term(MultiLaurent& p, const std::vector<std::int64_t>& exps, const Rational& c) {
  auto [it, inserted] = p.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Monomial expansion of s_lambda in `letters` variables placed at `offset`.
MultiLaurent schur_monomials(const Signature& lambda, std::size_t letters, std::size_t offset, std::size_t total) {
  auto [shape, c] = normalize_signature(lambda);
  MultiLaurent out;
  for_each_tableau(shape, letters, [&](const std::vector<std::int64_t>& content) {
    std::vector<std::int64_t> e(total, 0);
    for (std::size_t i = 0; i < letters; ++i) e[offset + i] = content[i] + c;
    add_term(out, e, 1);
  });
  return out;
}

MultiLaurent multiply(const MultiLaurent& a, const MultiLaurent& b) {
  MultiLaurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<std::int64_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

}  // namespace

MultiLaurent partial_schur_symbolic(std::int64_t u, std::size_t k, std::size_t m) {
  if (k + m > kSymbolicVariableLimit) {
    throw CombinatorialExplosion("symbolic output limited to k + m <= " + std::to_string(kSymbolicVariableLimit));
  }
  MultiLaurent total;
  if (k == 0) return total;
  // The Laplace sum with Schur values replaced by their monomial expansions:
  // run it on formal markers by expanding each term directly.
  const auto kk = static_cast<std::int64_t>(k), mm = static_cast<std::int64_t>(m), n = kk + mm;
  if (u > n - 2) throw OutOfRange("S_u needs u <= n - 2");
  const std::int64_t chosen = u >= 0 ? kk : kk - 1;
  const int global = u >= 0 ? parity_sign(kk * (kk + 1) / 2 + n * (kk - 1) + u) : parity_sign(kk * (kk - 1) / 2 + n * (kk - 1));
  std::vector<std::int64_t> lambda;
  std::function<void(std::int64_t)> choose = [&](std::int64_t next_max) {
    if (static_cast<std::int64_t>(lambda.size()) == chosen) {
      std::int64_t i = 0;
      if (u >= 0) {
        auto it = std::find(lambda.begin(), lambda.end(), u);
        if (it == lambda.end()) return;
        i = (it - lambda.begin()) + 1;
      }
      std::vector<std::int64_t> complement;
      for (std::int64_t v = n - 2; v >= 0; --v) {
        if (std::find(lambda.begin(), lambda.end(), v) == lambda.end()) complement.push_back(v);
      }
      if (u >= 0) {
        complement.push_back(u);
        std::sort(complement.rbegin(), complement.rend());
      }
      std::vector<std::int64_t> mx = lambda;
      if (u < 0) mx.push_back(u);
      for (std::int64_t j = 0; j < kk; ++j) mx[j] -= (kk - 1 - j);
      std::vector<std::int64_t> my = complement;
      for (std::int64_t j = 0; j < mm; ++j) my[j] -= (mm - 1 - j);
      const std::int64_t norm = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
      const int s = global * parity_sign(norm + i);
      MultiLaurent term = multiply(schur_monomials(Signature(mx), k, 0, k + m), schur_monomials(Signature(my), m, k, k + m));
      for (const auto& [e, c] : term) add_term(total, e, s < 0 ? Rational(-c) : c);
      return;
    }
    for (std::int64_t v = next_max; v >= 0; --v) {
      lambda.push_back(v);
      choose(v - 1);
      lambda.pop_back();
    }
  };
  choose(n - 2);
  return total;
}

MultiLaurent alternant_symbolic(const Signature& lambda, std::size_t n) {
  if (n > kSymbolicVariableLimit) throw CombinatorialExplosion("symbolic alternant limited to 6 variables");
  if (lambda.size() != n) throw InvalidArgument("alternant: signature length differs from variable count");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiLaurent out;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    // Row i uses exponent lambda_i in column perm[i].
    std::vector<std::int64_t> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[perm[i]] = lambda[i];
    add_term(out, e, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Rational evaluate(const MultiLaurent& p, const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& [e, c] : p) {
    if (e.size() != values.size()) throw InvalidArgument("evaluate: wrong number of values");
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= detail::field_pow(values[i], e[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace circlehilb
