#include "circlehilb/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "circlehilb/error.hpp"

namespace circlehilb {

std::string to_string(HilbertMethod m) {
  switch (m) {
    case HilbertMethod::Auto: return "auto";
    case HilbertMethod::Generic: return "generic";
    case HilbertMethod::Degenerate: return "degenerate";
    case HilbertMethod::Oracle: return "oracle";
  }
  return "auto";
}

HilbertMethod parse_hilbert_method(const std::string& name) {
  if (name == "auto") return HilbertMethod::Auto;
  if (name == "generic") return HilbertMethod::Generic;
  if (name == "degenerate") return HilbertMethod::Degenerate;
  if (name == "oracle") return HilbertMethod::Oracle;
  throw InvalidArgument("unknown method '" + name + "' (auto|generic|degenerate|oracle)");
}

namespace {

// s[i] += s[i - c], once per unit of multiplicity, for every factor.
bool expand_int64(std::vector<std::int64_t>& s, const FactoredDenominator& factors) {
  for (const auto& f : factors) {
    const auto c = static_cast<std::size_t>(f.d);
    for (int r = 0; r < f.multiplicity; ++r) {
      for (std::size_t i = c; i < s.size(); ++i) {
        if (__builtin_add_overflow(s[i], s[i - c], &s[i])) return false;
      }
    }
  }
  return true;
}

void expand_mpz(std::vector<Integer>& s, const FactoredDenominator& factors) {
  for (const auto& f : factors) {
    const auto c = static_cast<std::size_t>(f.d);
    for (int r = 0; r < f.multiplicity; ++r) {
      for (std::size_t i = c; i < s.size(); ++i) s[i] += s[i - c];
    }
  }
}

}  // namespace

RationalFunction section(const SectionProblem& p, const HilbertOptions& options) {
  const std::int64_t n = p.modulus;
  if (n < 1) throw InvalidArgument("section modulus must be >= 1");
  if (p.numerator.is_zero()) return RationalFunction();
  const FactoredDenominator factors = normalize_factors(p.factors);

  // (1 - u^c)^mult becomes (1 - t^{c/g})^{g mult}, g = gcd(N, c).
  FactoredDenominator t_factors;
  std::int64_t den_degree = 0;
  std::int64_t spread = 0;
  for (const auto& f : factors) {
    const std::int64_t g = std::gcd(n, f.d);
    t_factors.push_back({f.d / g, static_cast<int>(g * f.multiplicity)});
    if (__builtin_mul_overflow(f.d, static_cast<std::int64_t>(f.multiplicity), &spread) ||
        __builtin_add_overflow(den_degree, spread, &den_degree)) {
      throw DegreeOverflow("section denominator degree overflows");
    }
  }
  if (den_degree > options.max_denominator_degree) {
    throw DegreeOverflow("section denominator degree " + std::to_string(den_degree) + " exceeds the limit " +
                         std::to_string(options.max_denominator_degree));
  }
  t_factors = normalize_factors(t_factors);

  // Numerator of the section has degree at most this bound.
  std::int64_t top = 0;
  if (__builtin_mul_overflow(den_degree, n - 1, &top) ||
      __builtin_add_overflow(top, p.numerator.degree(), &top)) {
    throw DegreeOverflow("section numerator bound overflows");
  }
  const std::int64_t bound = top / n;
  std::int64_t length = 0;
  if (__builtin_mul_overflow(bound, n, &length) || length + 1 > options.max_series_length) {
    throw DegreeOverflow("section needs more than " + std::to_string(options.max_series_length) +
                         " series coefficients");
  }
  length += 1;

  // Clear denominators of the source numerator.
  Integer scale = 1;
  for (const auto& [e, c] : p.numerator.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());

  std::vector<Integer> picked(static_cast<std::size_t>(bound) + 1);
  bool small = true;
  std::vector<std::int64_t> s64;
  for (const auto& [e, c] : p.numerator.terms()) {
    Integer v = c.get_num() * (scale / c.get_den());
    if (!v.fits_slong_p()) small = false;
  }
  if (small) {
    s64.assign(static_cast<std::size_t>(length), 0);
    for (const auto& [e, c] : p.numerator.terms()) {
      if (e < length) s64[static_cast<std::size_t>(e)] = Integer(c.get_num() * (scale / c.get_den())).get_si();
    }
    if (expand_int64(s64, factors)) {
      for (std::int64_t m = 0; m <= bound; ++m) picked[static_cast<std::size_t>(m)] = static_cast<long>(s64[m * n]);
    } else {
      small = false;
    }
  }
  if (!small) {
    std::vector<Integer> s(static_cast<std::size_t>(length));
    for (const auto& [e, c] : p.numerator.terms()) {
      if (e < length) s[static_cast<std::size_t>(e)] = c.get_num() * (scale / c.get_den());
    }
    expand_mpz(s, factors);
    for (std::int64_t m = 0; m <= bound; ++m) picked[static_cast<std::size_t>(m)] = s[static_cast<std::size_t>(m * n)];
  }
  s64.clear();
  s64.shrink_to_fit();

  // Multiply by the constructed denominator, truncated at the bound.
  const Polynomial den = expand_factors(t_factors).truncated(bound);
  std::vector<Integer> num(static_cast<std::size_t>(bound) + 1);
  for (const auto& [j, dj] : den.terms()) {
    const Integer& dz = dj.get_num();
    for (std::int64_t m = 0; m + j <= bound; ++m) {
      const Integer& pm = picked[static_cast<std::size_t>(m)];
      if (pm != 0) mpz_addmul(num[static_cast<std::size_t>(m + j)].get_mpz_t(), dz.get_mpz_t(), pm.get_mpz_t());
    }
  }
  std::vector<Rational> coeffs(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) coeffs[i] = Rational(num[i], scale);
  for (auto& c : coeffs) c.canonicalize();
  return RationalFunction::from_factored(Polynomial::from_dense(coeffs), t_factors);
}

RationalFunction hilbert_generic(const WeightVector& v, const HilbertOptions& options) {
  if (!v.is_generic()) throw NotGeneric("repeated negative weights; use the degenerate route");
  const std::vector<std::int64_t> w = v.weights();
  RationalFunction total;
  for (std::size_t i = 0; i < v.k(); ++i) {
    SectionProblem p;
    p.modulus = -w[i];
    Polynomial num(1);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j == i) continue;
      const std::int64_t c = w[j] - w[i];
      if (c > 0) {
        p.factors.push_back({c, 1});
      } else {
        // 1/(1 - u^{-|c|}) = -u^{|c|}/(1 - u^{|c|})
        num = -num.shifted(-c);
        p.factors.push_back({-c, 1});
      }
    }
    p.numerator = std::move(num);
    total += section(p, options);
  }
  return total;
}

namespace {

using WSeries = std::vector<Rational>;    // truncated series in w
using VSeries = std::vector<Polynomial>;  // truncated series in w over Q[v]

WSeries series_mul(const WSeries& a, const WSeries& b, std::size_t len) {
  WSeries r(len);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

WSeries series_inverse(const WSeries& a, std::size_t len) {
  WSeries r(len);
  const Rational inv = 1 / a[0];
  for (std::size_t i = 0; i < len; ++i) {
    Rational acc = i == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= i && j < a.size(); ++j) acc -= a[j] * r[i - j];
    r[i] = acc * inv;
  }
  return r;
}

// (1 + w)^b - 1
WSeries binomial_minus_one(std::int64_t b, std::size_t len) {
  WSeries s(len);
  for (std::size_t i = 1; i < len; ++i) s[i] = Rational(binomial(b, static_cast<std::int64_t>(i)));
  return s;
}

// 1/(1 - v^c (1+w)^b), c > 0, as numerators over (1 - v^c)^r.
VSeries geometric_block(std::int64_t c, std::int64_t b, std::size_t r) {
  const WSeries s = binomial_minus_one(b, r);
  const Polynomial x = Polynomial::monomial(c);
  const Polynomial one_minus_x = one_minus_t_pow(c);
  VSeries out(r);
  WSeries sj(r);
  sj[0] = 1;  // S^0
  Polynomial xj(1);
  for (std::size_t j = 0; j < r; ++j) {
    const Polynomial weight = xj * one_minus_x.pow(static_cast<unsigned>(r - 1 - j));
    for (std::size_t i = j; i < r; ++i) {
      if (sj[i] != 0) out[i] += weight * sj[i];
    }
    sj = series_mul(sj, s, r);
    xj *= x;
  }
  return out;
}

VSeries factor_block(std::int64_t c, std::int64_t b, std::size_t r) {
  if (c > 0) return geometric_block(c, b, r);
  // 1/(1 - X) = 1 - 1/(1 - Y), Y = v^{|c|} (1+w)^{-b}
  VSeries g = geometric_block(-c, -b, r);
  VSeries out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = -g[i];
  out[0] += one_minus_t_pow(-c).pow(static_cast<unsigned>(r));
  return out;
}

VSeries vseries_mul(const VSeries& a, const VSeries& b) {
  const std::size_t len = a.size();
  VSeries r(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

void check_hilbert_prefix(const RationalFunction& f, const char* route) {
  for (const auto& c : series_at_zero(f, 12)) {
    if (!is_integer(c) || c < 0) {
      throw InternalInvariantViolation(std::string(route) + " route produced a non-count Taylor coefficient " +
                                       to_string(c));
    }
  }
}

}  // namespace

RationalFunction hilbert_degenerate(const WeightVector& v, const HilbertOptions& options) {
  const std::vector<std::int64_t> w = v.weights();
  RationalFunction total;
  for (const auto& [a, mult] : v.negative_groups()) {
    const std::int64_t n = -a;
    const auto r = static_cast<std::size_t>(mult);
    // z = x u (1 + w): the group contributes w^r h(w)^r, h(w) = (1 - (1+w)^{-N})/w.
    WSeries h(r);
    for (std::size_t i = 0; i < r; ++i) h[i] = Rational(-binomial(-n, static_cast<std::int64_t>(i) + 1));
    WSeries hinv = series_inverse(h, r);
    WSeries kernel(r);
    for (std::size_t i = 0; i < r; ++i) kernel[i] = (i % 2 == 0) ? 1 : -1;  // (1+w)^{-1}
    for (std::size_t i = 0; i < r; ++i) kernel = series_mul(kernel, hinv, r);

    VSeries product(r);
    product[0] = Polynomial(1);
    FactoredDenominator factors;
    int skipped = 0;
    for (auto b : w) {
      if (b == a && skipped < mult) {
        ++skipped;
        continue;
      }
      const std::int64_t c = b + n;
      product = vseries_mul(product, factor_block(c, b, r));
      factors.push_back({c > 0 ? c : -c, mult});
    }
    // Residue: coefficient of w^{r-1} in kernel * product.
    Polynomial residue;
    for (std::size_t i = 0; i < r; ++i) {
      if (kernel[r - 1 - i] != 0) residue += product[i] * kernel[r - 1 - i];
    }
    // Summing over the N roots gives N * U_N.
    SectionProblem p{residue * Rational(n), factors, n};
    total += section(p, options);
  }
  check_hilbert_prefix(total, "degenerate");
  return total;
}

namespace {

RationalFunction zero_factor(int zero_count) {
  if (zero_count == 0) return RationalFunction(1);
  return RationalFunction::from_factored(Polynomial(1), {{1, zero_count}});
}

}  // namespace

HilbertResult hilbert_series_detailed(const WeightVector& v, const HilbertOptions& options) {
  HilbertResult out;
  switch (options.method) {
    case HilbertMethod::Auto:
    case HilbertMethod::Generic:
      if (v.is_generic()) {
        out.series = hilbert_generic(v, options);
        out.route = "generic";
      } else if (v.positive_side_generic()) {
        out.series = hilbert_generic(v.negated(), options);
        out.route = "generic-negated";
      } else if (options.method == HilbertMethod::Auto) {
        out.series = hilbert_degenerate(v, options);
        out.route = "degenerate";
      } else {
        throw NotGeneric("both sides of the weight vector have repeated weights");
      }
      break;
    case HilbertMethod::Degenerate:
      out.series = hilbert_degenerate(v, options);
      out.route = "degenerate";
      break;
    case HilbertMethod::Oracle:
      out.series = hilbert_from_oracle(v);
      out.route = "heuristic-oracle";
      out.heuristic = true;
      break;
  }
  if (v.zero_count() > 0 && !out.heuristic) out.series = out.series * zero_factor(v.zero_count());
  check_hilbert_prefix(out.series, out.route.c_str());
  if (options.verify_depth && *options.verify_depth > 0) {
    const std::size_t depth =
        *options.verify_depth == HilbertOptions::kAutoDepth ? auto_verify_depth(out.series) : *options.verify_depth;
    verify_against_oracle(v, out.series, depth);
    out.verified_depth = depth;
  }
  return out;
}

RationalFunction hilbert_series(const WeightVector& v, const HilbertOptions& options) {
  return hilbert_series_detailed(v, options).series;
}

std::vector<Integer> molien_coefficients(const WeightVector& v, std::size_t depth) {
  const std::vector<std::int64_t> w = v.all_weights();
  std::int64_t amax = 0;
  for (auto a : w) amax = std::max(amax, a < 0 ? -a : a);
  const auto d1 = static_cast<std::int64_t>(depth);
  const std::int64_t half = d1 * amax;
  const std::int64_t width = 2 * half + 1;
  constexpr std::int64_t kMaxCells = 200'000'000;
  if ((d1 + 1) > kMaxCells / width) throw DegreeOverflow("oracle table exceeds " + std::to_string(kMaxCells) + " cells");
  // table[d][s + half] counts exponent vectors of degree d and weighted sum s.
  std::vector<std::uint64_t> table(static_cast<std::size_t>((d1 + 1) * width), 0);
  auto at = [&](std::int64_t d, std::int64_t s) -> std::uint64_t& {
    return table[static_cast<std::size_t>(d * width + s + half)];
  };
  at(0, 0) = 1;
  for (auto a : w) {
    for (std::int64_t d = 1; d <= d1; ++d) {
      const std::int64_t reach = d * amax;
      for (std::int64_t s = -reach; s <= reach; ++s) {
        const std::int64_t prev = s - a;
        if (prev < -(d - 1) * amax || prev > (d - 1) * amax) continue;
        std::uint64_t& cell = at(d, s);
        if (__builtin_add_overflow(cell, at(d - 1, prev), &cell)) throw CountOverflow("oracle count exceeds 64 bits");
      }
    }
  }
  std::vector<Integer> out(depth + 1);
  for (std::int64_t d = 0; d <= d1; ++d) {
    mpz_set_ui(out[static_cast<std::size_t>(d)].get_mpz_t(), at(d, 0));
  }
  return out;
}

Integer molien_coefficient_oracle(const WeightVector& v, std::size_t m) { return molien_coefficients(v, m).back(); }

std::size_t auto_verify_depth(const RationalFunction& f) {
  return std::max<std::size_t>(2 * static_cast<std::size_t>(f.denominator().degree()), 50);
}

void verify_against_oracle(const WeightVector& v, const RationalFunction& f, std::size_t depth) {
  const auto series = series_at_zero(f, depth);
  const auto oracle = molien_coefficients(v, depth);
  for (std::size_t i = 0; i <= depth; ++i) {
    if (series[i] != Rational(oracle[i])) {
      throw OracleMismatch("coefficient of t^" + std::to_string(i) + ": series " + to_string(series[i]) +
                           ", oracle " + to_string(oracle[i]));
    }
  }
}

RationalFunction hilbert_from_oracle(const WeightVector& v) {
  FactoredDenominator den;
  for (auto a : v.negatives()) {
    for (auto b : v.positives()) den.push_back({b - a, 1});
  }
  if (v.zero_count() > 0) den.push_back({1, v.zero_count()});
  den = normalize_factors(den);
  std::int64_t degree_sum = 0;
  for (const auto& f : den) degree_sum += f.d * f.multiplicity;
  const auto d = static_cast<std::size_t>(degree_sum);
  const auto coeffs = molien_coefficients(v, 2 * d);
  // Numerator = oracle series * denominator, truncated at the denominator degree.
  const Polynomial q = expand_factors(den);
  std::vector<Rational> num(d + 1);
  for (const auto& [j, c] : q.terms()) {
    for (std::size_t m = 0; m + static_cast<std::size_t>(j) <= d; ++m) num[m + j] += c * Rational(coeffs[m]);
  }
  RationalFunction f = RationalFunction::from_factored(Polynomial::from_dense(num), den);
  const auto check = series_at_zero(f, 2 * d);
  for (std::size_t i = 0; i <= 2 * d; ++i) {
    if (check[i] != Rational(coeffs[i])) {
      throw InternalInvariantViolation("heuristic candidate denominator failed verification at t^" +
                                       std::to_string(i));
    }
  }
  return f;
}

}  // namespace circlehilb
