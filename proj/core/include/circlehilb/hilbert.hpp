#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlehilb/rational_function.hpp"
#include "circlehilb/weights.hpp"

namespace circlehilb {

enum class HilbertMethod { Auto, Generic, Degenerate, Oracle };

std::string to_string(HilbertMethod m);
HilbertMethod parse_hilbert_method(const std::string& name);

struct HilbertOptions {
  HilbertMethod method = HilbertMethod::Auto;
  // Ceiling on the degree of any constructed section denominator.
  std::int64_t max_denominator_degree = 10'000'000;
  // Ceiling on the number of source-series coefficients expanded per section.
  std::int64_t max_series_length = 50'000'000;
  // Oracle cross-check depth; nullopt disables, kAutoDepth means
  // max(2 * deg(denominator), 50).
  std::optional<std::size_t> verify_depth;
  static constexpr std::size_t kAutoDepth = static_cast<std::size_t>(-1);
};

// source(u) = numerator(u) / prod (1 - u^c)^mult; section returns U_N source,
// where (U_N G)(t) = sum_m G_{mN} t^m.
struct SectionProblem {
  Polynomial numerator;
  FactoredDenominator factors;
  std::int64_t modulus = 1;
};

RationalFunction section(const SectionProblem& p, const HilbertOptions& options = {});

// Both operate on the nonzero weights of v and ignore zero_count.
RationalFunction hilbert_generic(const WeightVector& v, const HilbertOptions& options = {});
RationalFunction hilbert_degenerate(const WeightVector& v, const HilbertOptions& options = {});

struct HilbertResult {
  RationalFunction series;
  // "generic", "generic-negated", "degenerate" or "heuristic-oracle".
  std::string route;
  bool heuristic = false;
  std::size_t verified_depth = 0;
};

HilbertResult hilbert_series_detailed(const WeightVector& v, const HilbertOptions& options = {});
RationalFunction hilbert_series(const WeightVector& v, const HilbertOptions& options = {});

// Number of monomials of degree m with weighted exponent sum zero.
Integer molien_coefficient_oracle(const WeightVector& v, std::size_t m);
// Oracle coefficients for degrees 0..depth.
std::vector<Integer> molien_coefficients(const WeightVector& v, std::size_t depth);

std::size_t auto_verify_depth(const RationalFunction& f);

// Compares the first depth+1 Taylor coefficients with the oracle; throws
// OracleMismatch on disagreement.
void verify_against_oracle(const WeightVector& v, const RationalFunction& f, std::size_t depth);

// Heuristic: candidate denominator prod (1 - t^{a_j - a_i}) over negative i,
// positive j, numerator fitted from the oracle and verified to twice the
// candidate degree.
RationalFunction hilbert_from_oracle(const WeightVector& v);

}  // namespace circlehilb
