#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "circlehilb/error.hpp"
#include "circlehilb/rational.hpp"
#include "circlehilb/weights.hpp"

namespace circlehilb {

// Weakly decreasing integer sequence; negative parts allowed.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::int64_t> parts);
  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::int64_t operator[](std::size_t i) const { return parts_[i]; }

 private:
  std::vector<std::int64_t> parts_;
};

struct SplitVariables {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  // xs = negative weights, ys = positive weights.
  static SplitVariables from_weights(const std::vector<std::int64_t>& weights);
  std::size_t n() const { return xs.size() + ys.size(); }
};

Rational vandermonde(const std::vector<Rational>& xs);
// det [x_j^{lambda_i}]
Rational alternant(const Signature& lambda, const std::vector<Rational>& xs);
// A_{lambda+delta}(xs) / V(xs); falls back to tableaux on repeated values.
Rational laurent_schur(const Signature& lambda, const std::vector<Rational>& xs);
// s_lambda by the Jacobi-Trudi determinant in complete symmetric functions,
// shifted by prod x^{lambda_last} when the last part is negative.
Rational schur_jacobi_trudi(const Signature& lambda, const std::vector<Rational>& xs);
// s_lambda as a sum over semistandard tableaux (same shift rule).
Rational schur_tableaux(const Signature& lambda, const std::vector<Rational>& xs);

Rational elementary_symmetric(std::size_t j, const std::vector<Rational>& values);
Rational complete_symmetric(std::size_t j, const std::vector<Rational>& values);

// Partial Laurent-Schur polynomial S_u, three routes.
Rational partial_schur_det(std::int64_t u, const SplitVariables& vars);
Rational partial_schur_expansion(std::int64_t u, const SplitVariables& vars);
Rational partial_schur_tableaux(std::int64_t u, const SplitVariables& vars, std::size_t max_variables = 10);
// Default route (expansion).
Rational partial_schur(std::int64_t u, const SplitVariables& vars);

// Monomials over (x_1..x_k, y_1..y_m); exponents may be negative.
using MultiLaurent = std::map<std::vector<std::int64_t>, Rational>;

MultiLaurent partial_schur_symbolic(std::int64_t u, std::size_t k, std::size_t m);
MultiLaurent alternant_symbolic(const Signature& lambda, std::size_t n);
Rational evaluate(const MultiLaurent& p, const std::vector<Rational>& values);

inline constexpr std::size_t kSymbolicVariableLimit = 6;

namespace detail {

template <class Field>
Field field_pow(const Field& x, std::int64_t e) {
  if (e < 0) {
    if (x == Field(0)) throw ZeroBase("zero raised to a negative power");
    return Field(1) / field_pow(x, -e);
  }
  Field r(1);
  Field b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class Field>
bool is_zero_value(const Field& f) {
  return f == Field(0);
}

// Determinant by Gaussian elimination over a field.
template <class Field>
Field determinant(std::vector<std::vector<Field>> a) {
  const std::size_t n = a.size();
  Field det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero_value(a[pivot][col])) ++pivot;
    if (pivot == n) return Field(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = Field(0) - det;
    }
    det = det * a[col][col];
    const Field inv = Field(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero_value(a[r][col])) continue;
      const Field f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

template <class Field>
Field vandermonde(const std::vector<Field>& xs) {
  Field v(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) v = v * (xs[i] - xs[j]);
  }
  return v;
}

}  // namespace detail

// Determinant route over any field (used with rational functions in a
// perturbation parameter to probe repeated points).
template <class Field>
Field partial_schur_det_over(std::int64_t u, const std::vector<Field>& xs, const std::vector<Field>& ys) {
  const std::size_t k = xs.size(), m = ys.size(), n = k + m;
  if (k == 0) return Field(0);
  if (u > static_cast<std::int64_t>(n) - 2) throw OutOfRange("S_u needs u <= n - 2");
  const Field vx = detail::vandermonde(xs);
  const Field vy = detail::vandermonde(ys);
  if (detail::is_zero_value(vx) || detail::is_zero_value(vy)) {
    throw RepeatedVariables("determinant route needs distinct values within each block");
  }
  std::vector<std::vector<Field>> z(n, std::vector<Field>(n, Field(0)));
  for (std::size_t c = 0; c < n; ++c) {
    const Field& v = c < k ? xs[c] : ys[c - k];
    if (c < k) z[0][c] = detail::field_pow(v, u);
    for (std::size_t r = 1; r < n; ++r) z[r][c] = detail::field_pow(v, static_cast<std::int64_t>(n - 1 - r));
  }
  return detail::determinant(std::move(z)) / (vx * vy);
}

}  // namespace circlehilb
