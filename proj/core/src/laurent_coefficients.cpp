#include "circlehilb/laurent_coefficients.hpp"

#include <numeric>

#include "circlehilb/cyclotomic.hpp"
#include "circlehilb/schur.hpp"

namespace circlehilb {

std::string to_string(GammaMethod m) {
  switch (m) {
    case GammaMethod::SchurForm: return "schur";
    case GammaMethod::GenericForm: return "generic";
    case GammaMethod::SeriesForm: return "series";
  }
  return "schur";
}

GammaMethod parse_gamma_method(const std::string& name) {
  if (name == "schur") return GammaMethod::SchurForm;
  if (name == "generic") return GammaMethod::GenericForm;
  if (name == "series") return GammaMethod::SeriesForm;
  throw InvalidArgument("unknown gamma method '" + name + "'");
}

namespace {

using Weights = std::vector<std::int64_t>;

bool has_negative(const Weights& w) {
  for (auto a : w) {
    if (a < 0) return true;
  }
  return false;
}

std::int64_t gcd_of_list(const Weights& w) {
  std::int64_t g = 0;
  for (auto a : w) g = std::gcd(g, a);
  return g;
}

Weights drop(const Weights& w, std::initializer_list<std::size_t> idx) {
  Weights out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool skip = false;
    for (auto j : idx) skip = skip || (i == j);
    if (!skip) out.push_back(w[i]);
  }
  return out;
}

std::int64_t g_without(const Weights& w, std::initializer_list<std::size_t> idx) { return gcd_of_list(drop(w, idx)); }

// Sum over zeta^g = 1 avoiding the excluded orders of zeta^shift / prod (1 - zeta^b)^m.
Rational unity_sum(std::int64_t shift, const std::vector<std::pair<std::int64_t, int>>& factors, std::int64_t g,
                   std::vector<std::int64_t> excluded) {
  const RootConstraint c{g, std::move(excluded)};
  return constrained_unity_sum(monomial_over_product(shift, factors), c);
}

Rational S(std::int64_t u, const Weights& w) { return partial_schur_of(u, w); }
Rational E(std::size_t j, const Weights& w) { return elementary_of(j, w); }
Rational P(const Weights& w) { return cross_product(w); }
Rational q(std::int64_t a) { return Rational(a); }

Weights nonzero(const WeightVector& v) { return v.weights(); }

void require_generic(const WeightVector& v) {
  if (!v.is_generic()) throw NotGeneric("generic form needs pairwise distinct negative weights");
}

// prod over q != i and q not in ex of (a_i - a_q)
Rational prod_except(const Weights& a, std::size_t i, std::initializer_list<std::size_t> ex) {
  Rational p = 1;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == i) continue;
    bool skip = false;
    for (auto e : ex) skip = skip || (r == e);
    if (!skip) p *= q(a[i] - a[r]);
  }
  return p;
}

}  // namespace

Rational partial_schur_of(std::int64_t u, const std::vector<std::int64_t>& weights) {
  if (!has_negative(weights)) return 0;
  return partial_schur(u, SplitVariables::from_weights(weights));
}

Rational cross_product(const std::vector<std::int64_t>& weights) {
  Rational p = 1;
  for (auto a : weights) {
    if (a >= 0) continue;
    for (auto b : weights) {
      if (b > 0) p *= q(a - b);
    }
  }
  return p;
}

Rational elementary_of(std::size_t j, const std::vector<std::int64_t>& weights) {
  std::vector<Rational> vals(weights.begin(), weights.end());
  return elementary_symmetric(j, vals);
}

Rational gamma0(const WeightVector& v) {
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  return -S(n - 2, a) / P(a);
}

Rational gamma1(const WeightVector& v) {
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  Rational r = (E(1, a) * S(n - 3, a) - S(n - 2, a)) / (2 * P(a));
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto aj = drop(a, {j});
    const auto gj = gcd_of_list(aj);
    if (gj == 1) continue;
    r += frac(gj - 1, 2) * (-S(n - 3, aj) / P(aj));
  }
  return r;
}

Gamma2Terms gamma2_terms(const WeightVector& v) {
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  Gamma2Terms t;
  const Rational e1 = E(1, a);
  t.head = (5 * e1 * S(n - 3, a) - (E(2, a) + e1 * e1) * S(n - 4, a) - 4 * S(n - 2, a)) / (12 * P(a));
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto aj = drop(a, {j});
    const auto gj = gcd_of_list(aj);
    if (!has_negative(aj)) continue;
    const Rational pj = P(aj);
    t.g_squared += frac(1 - gj * gj, 12) * (S(n - 3, aj) - q(a[j]) * S(n - 4, aj)) / pj;
    t.g_linear += frac(gj - 1, 4) * (E(1, aj) * S(n - 4, aj) - S(n - 3, aj)) / pj;
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t l = j + 1; l < a.size(); ++l) {
      const auto ajl = drop(a, {j, l});
      if (!has_negative(ajl)) continue;
      const auto g = gcd_of_list(ajl);
      const Rational s = S(n - 4, ajl);
      if (s == 0) continue;
      const Rational c = unity_sum(0, {{a[j], 1}, {a[l], 1}}, g, {g_without(a, {j}), g_without(a, {l})});
      t.constrained -= s / P(ajl) * c;
    }
  }
  return t;
}

Rational gamma2(const WeightVector& v) { return gamma2_terms(v).total(); }

Rational gamma3(const WeightVector& v) {
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  const Rational e1 = E(1, a), e2 = E(2, a);
  Rational r = (-6 * S(n - 2, a) + 8 * e1 * S(n - 3, a) - (3 * e2 + 2 * e1 * e1) * S(n - 4, a) + e1 * e2 * S(n - 5, a)) /
               (24 * P(a));
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto aj = drop(a, {j});
    const auto gj = gcd_of_list(aj);
    if (gj == 1 || !has_negative(aj)) continue;
    const Rational pj = P(aj), f1 = E(1, aj), f2 = E(2, aj), aj_ = q(a[j]);
    r += frac(1 - gj, 24) * (4 * S(n - 3, aj) - 5 * f1 * S(n - 4, aj) + (f2 + f1 * f1) * S(n - 5, aj)) / pj;
    r += frac(gj * gj - 1, 24) * (-2 * S(n - 3, aj) + (2 * aj_ + f1) * S(n - 4, aj) - aj_ * f1 * S(n - 5, aj)) / pj;
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t l = j + 1; l < a.size(); ++l) {
      const auto ajl = drop(a, {j, l});
      if (!has_negative(ajl)) continue;
      const auto g = gcd_of_list(ajl);
      if (g == 1) continue;
      const std::vector<std::int64_t> ex{g_without(a, {j}), g_without(a, {l})};
      const Rational c1 = unity_sum(0, {{a[j], 1}, {a[l], 1}}, g, ex);
      const Rational c2 = unity_sum(a[j], {{a[j], 2}, {a[l], 1}}, g, ex);
      const Rational c3 = unity_sum(a[l], {{a[j], 1}, {a[l], 2}}, g, ex);
      const Rational pp = P(ajl), s4 = S(n - 4, ajl), s5 = S(n - 5, ajl);
      r += c1 * (E(1, ajl) * s5 - s4) / (2 * pp);
      r += c2 * (s4 - q(a[j]) * s5) / pp;
      r += c3 * (s4 - q(a[l]) * s5) / pp;
    }
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t l = j + 1; l < a.size(); ++l) {
      for (std::size_t p = l + 1; p < a.size(); ++p) {
        const auto a3 = drop(a, {j, l, p});
        if (!has_negative(a3)) continue;
        const auto g = gcd_of_list(a3);
        if (g == 1) continue;
        const Rational s5 = S(n - 5, a3);
        if (s5 == 0) continue;
        const Rational c = unity_sum(0, {{a[j], 1}, {a[l], 1}, {a[p], 1}}, g,
                                     {g_without(a, {j, l}), g_without(a, {j, p}), g_without(a, {l, p})});
        r -= s5 / P(a3) * c;
      }
    }
  }
  return r;
}

Rational gamma0_generic(const WeightVector& v) {
  require_generic(v);
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  Rational r = 0;
  for (std::size_t i = 0; i < v.k(); ++i) r -= pow(q(a[i]), n - 2) / prod_except(a, i, {});
  return r;
}

Rational gamma1_generic(const WeightVector& v) {
  require_generic(v);
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  Rational r = 0;
  for (std::size_t i = 0; i < v.k(); ++i) {
    const Rational ai = pow(q(a[i]), n - 3);
    const Rational full = prod_except(a, i, {});
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      r += ai * q(a[j]) / (2 * full);
      const auto gj = g_without(a, {j});
      if (gj != 1) r += frac(gj - 1, 2) * (-ai) / prod_except(a, i, {j});
    }
  }
  return r;
}

Rational gamma2_generic(const WeightVector& v) {
  require_generic(v);
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  Rational r = 0;
  for (std::size_t i = 0; i < v.k(); ++i) {
    const Rational ai = q(a[i]);
    const Rational pw = pow(ai, n - 4);
    Rational s1 = 0, s2 = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      s1 += (2 * ai - q(a[j])) * q(a[j]);
      for (std::size_t l = j + 1; l < a.size(); ++l) {
        if (l != i) s2 += q(a[j]) * q(a[l]);
      }
    }
    r += pw / (12 * prod_except(a, i, {})) * (s1 - 3 * s2);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      const auto gj = g_without(a, {j});
      if (gj == 1) continue;
      const Rational pij = prod_except(a, i, {j});
      r += frac(1 - gj * gj, 12) * pw * (ai - q(a[j])) / pij;
      Rational inner = 0;
      for (std::size_t l = 0; l < a.size(); ++l) {
        if (l != i && l != j) inner += q(a[l]);
      }
      r += frac(gj - 1, 2) * pw * inner / (2 * pij);
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (std::size_t l = j + 1; l < a.size(); ++l) {
        if (j == i || l == i) continue;
        const auto g = g_without(a, {j, l});
        if (g == 1) continue;
        const Rational c = unity_sum(0, {{a[j], 1}, {a[l], 1}}, g, {g_without(a, {j}), g_without(a, {l})});
        r -= pw / prod_except(a, i, {j, l}) * c;
      }
    }
  }
  return r;
}

Rational gamma3_generic(const WeightVector& v) {
  require_generic(v);
  const auto a = nonzero(v);
  const auto n = static_cast<std::int64_t>(a.size());
  const std::size_t N = a.size();
  Rational r = 0;
  for (std::size_t i = 0; i < v.k(); ++i) {
    const Rational ai = q(a[i]);
    const Rational pw = pow(ai, n - 5);
    Rational t1 = 0, t2 = 0, t3 = 0;
    for (std::size_t j = 0; j < N; ++j) {
      if (j == i) continue;
      const Rational aj = q(a[j]);
      t3 += ai * aj * (2 * ai - aj);
      for (std::size_t l = 0; l < N; ++l) {
        if (l == i || l == j) continue;
        const Rational al = q(a[l]);
        t2 += aj * al * (al - 2 * ai);
        if (l <= j) continue;
        for (std::size_t p = l + 1; p < N; ++p) {
          if (p != i) t1 += 3 * aj * al * q(a[p]);
        }
      }
    }
    r += pw * (t1 + t2 + t3) / (24 * prod_except(a, i, {}));
    for (std::size_t j = 0; j < N; ++j) {
      if (j == i) continue;
      const auto gj = g_without(a, {j});
      if (gj == 1) continue;
      const Rational pij = prod_except(a, i, {j});
      Rational s = 0, others = 0;
      for (std::size_t l = 0; l < N; ++l) {
        if (l == i || l == j) continue;
        const Rational al = q(a[l]);
        others += al;
        s -= pw * al * (al - 2 * ai) / (12 * pij);
        for (std::size_t p = l + 1; p < N; ++p) {
          if (p != i && p != j) s -= pw * al * q(a[p]) / (4 * pij);
        }
      }
      r += frac(gj - 1, 2) * s;
      r += frac(gj * gj - 1, 24) * pw * (ai - q(a[j])) * (others - ai) / pij;
    }
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t l = j + 1; l < N; ++l) {
        if (j == i || l == i) continue;
        const auto g = g_without(a, {j, l});
        if (g == 1) continue;
        const std::vector<std::int64_t> ex{g_without(a, {j}), g_without(a, {l})};
        const Rational pijl = prod_except(a, i, {j, l});
        const Rational c1 = unity_sum(0, {{a[j], 1}, {a[l], 1}}, g, ex);
        const Rational c2 = unity_sum(a[j], {{a[j], 2}, {a[l], 1}}, g, ex);
        const Rational c3 = unity_sum(a[l], {{a[j], 1}, {a[l], 2}}, g, ex);
        Rational rest = 0;
        for (std::size_t p = 0; p < N; ++p) {
          if (p != i && p != j && p != l) rest += q(a[p]);
        }
        r += c1 * pw * rest / (2 * pijl);
        r += pw / pijl * (c2 * (ai - q(a[j])) + c3 * (ai - q(a[l])));
      }
    }
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t l = j + 1; l < N; ++l) {
        for (std::size_t p = l + 1; p < N; ++p) {
          if (j == i || l == i || p == i) continue;
          const auto g = g_without(a, {j, l, p});
          if (g == 1) continue;
          const Rational c = unity_sum(0, {{a[j], 1}, {a[l], 1}, {a[p], 1}}, g,
                                       {g_without(a, {j, l}), g_without(a, {j, p}), g_without(a, {l, p})});
          r -= pw * c / prod_except(a, i, {j, l, p});
        }
      }
    }
  }
  return r;
}

namespace {

GammaVector closed_forms(const WeightVector& v, std::size_t upto, GammaMethod method) {
  if (upto > 3) throw OutOfRange("closed forms stop at gamma_3; use the series method");
  using Fn = Rational (*)(const WeightVector&);
  const Fn schur_forms[] = {gamma0, gamma1, gamma2, gamma3};
  const Fn generic_forms[] = {gamma0_generic, gamma1_generic, gamma2_generic, gamma3_generic};
  GammaVector out;
  out.method = method;
  for (std::size_t m = 0; m <= upto; ++m) {
    out.values.push_back(method == GammaMethod::GenericForm ? generic_forms[m](v) : schur_forms[m](v));
  }
  return out;
}

}  // namespace

GammaVector gammas_schur(const WeightVector& v, std::size_t upto) {
  return closed_forms(v, upto, GammaMethod::SchurForm);
}

GammaVector gammas_generic(const WeightVector& v, std::size_t upto) {
  return closed_forms(v, upto, GammaMethod::GenericForm);
}

GammaVector gammas_from_series(const WeightVector& v, std::size_t upto, const HilbertOptions& options) {
  const RationalFunction f = hilbert_series(v, options);
  const LaurentExpansion e = laurent_at_one(f, upto + 1);
  if (e.pole_order != v.dimension()) {
    throw InternalInvariantViolation("pole order " + std::to_string(e.pole_order) + " differs from dimension " +
                                     std::to_string(v.dimension()));
  }
  GammaVector out;
  out.method = GammaMethod::SeriesForm;
  out.values = e.coefficients;
  out.values.resize(upto + 1);
  return out;
}

}  // namespace circlehilb
