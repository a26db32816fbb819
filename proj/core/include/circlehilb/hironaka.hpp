#pragma once

#include <cstdint>
#include <vector>

#include "circlehilb/rational.hpp"
#include "circlehilb/rational_function.hpp"

namespace circlehilb {

// Degrees of a homogeneous system of parameters (alphas) and of the free
// module generators (betas).
struct HironakaData {
  std::vector<std::int64_t> alphas;
  std::vector<std::int64_t> betas;
  void validate() const;
};

// Coefficient of x^j in prod x a_i / (1 - e^{-x a_i}).
Rational todd(std::size_t j, const std::vector<std::int64_t>& alphas);
// lambda_m as a polynomial in k (coefficients of k^0..k^m).
const std::vector<Rational>& lambda_coefficients(std::size_t m);
Rational lambda_poly(std::size_t m, std::int64_t k);
// Signed: coefficient of x^k in x (x - 1) ... (x - m + 1).
Integer stirling_first(std::int64_t m, std::int64_t k);
Rational phi(std::size_t m, const std::vector<std::int64_t>& alphas);
Rational gamma_cm(std::size_t ell, const HironakaData& data);
RationalFunction hilb_from_hironaka(const HironakaData& data);

}  // namespace circlehilb
