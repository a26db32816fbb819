#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "circlehilb/polynomial.hpp"

namespace circlehilb {

// Multiplicities of cyclotomic factors, e -> m_e, meaning prod Phi_e^{m_e}.
using CyclotomicContent = std::map<std::int64_t, int>;

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);

// The d-th cyclotomic polynomial over the integers (memoized, thread-safe).
const Polynomial& cyclotomic_poly(std::int64_t d);

// Power sums p_0..p_{phi(d)-1} of the roots of Phi_d (memoized, thread-safe).
const std::vector<Rational>& cyclotomic_power_sums(std::int64_t d);

// Cyclotomic content of 1 - t^d: every divisor once.
CyclotomicContent content_of_one_minus(std::int64_t d);

// p mod (t^n - 1), as a dense vector of length n.
std::vector<Rational> fold_mod_cycle(const Polynomial& p, std::int64_t n);

bool divisible_by_cyclotomic(const Polynomial& p, std::int64_t e);

// prod Phi_e^{m_e}, with (1 - t) used for e = 1 so the constant term is 1.
Polynomial expand_content(const CyclotomicContent& content);

}  // namespace circlehilb
