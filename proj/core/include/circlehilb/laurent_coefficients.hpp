#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circlehilb/hilbert.hpp"
#include "circlehilb/rational.hpp"
#include "circlehilb/weights.hpp"

namespace circlehilb {

enum class GammaMethod { SchurForm, GenericForm, SeriesForm };

std::string to_string(GammaMethod m);
GammaMethod parse_gamma_method(const std::string& name);

struct GammaVector {
  std::vector<Rational> values;
  GammaMethod method = GammaMethod::SchurForm;
};

// Weights are split by sign into (xs, ys); 0 when there are no negatives.
Rational partial_schur_of(std::int64_t u, const std::vector<std::int64_t>& weights);
// prod over negative p, positive q of (a_p - a_q); 1 when either side is empty.
Rational cross_product(const std::vector<std::int64_t>& weights);
Rational elementary_of(std::size_t j, const std::vector<std::int64_t>& weights);

// Closed forms on the nonzero weights of v; the result equals the Laurent
// coefficient of the full series since zero weights only shift the pole order.
Rational gamma0(const WeightVector& v);
Rational gamma1(const WeightVector& v);
Rational gamma2(const WeightVector& v);
Rational gamma3(const WeightVector& v);

// Forms valid for distinct negative weights; throw NotGeneric otherwise.
Rational gamma0_generic(const WeightVector& v);
Rational gamma1_generic(const WeightVector& v);
Rational gamma2_generic(const WeightVector& v);
Rational gamma3_generic(const WeightVector& v);

// gamma2 split into its four families; total() == gamma2(v).
struct Gamma2Terms {
  Rational head;
  Rational g_squared;
  Rational g_linear;
  Rational constrained;
  Rational total() const { return head + g_squared + g_linear + constrained; }
};
Gamma2Terms gamma2_terms(const WeightVector& v);

// upto is the last index; values has upto + 1 entries. Closed forms stop at 3.
GammaVector gammas_schur(const WeightVector& v, std::size_t upto = 3);
GammaVector gammas_generic(const WeightVector& v, std::size_t upto = 3);
GammaVector gammas_from_series(const WeightVector& v, std::size_t upto = 3, const HilbertOptions& options = {});

}  // namespace circlehilb
