#pragma once

#include <json.hpp>

#include "circlehilb/error.hpp"
#include "circlehilb/gorenstein.hpp"
#include "circlehilb/laurent_coefficients.hpp"
#include "circlehilb/rational_function.hpp"

namespace circlehilb::cli {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Sorted [exponent, "coeff"] pairs.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// [d, multiplicity] pairs.
Json to_json(const FactoredDenominator& f);
FactoredDenominator factored_from_json(const Json& j);

// numerator/denominator in reduced form plus the factored view when known.
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);
// Human-readable numerator / prod (1 - t^d)^m, or num/den.
std::string pretty(const RationalFunction& f);

Json weights_json(const WeightVector& v);
WeightVector weights_from_json(const Json& j);

Json to_json(const std::vector<Rational>& values);
Json to_json(const GorensteinReport& r);
GorensteinReport report_from_json(const Json& j);

Json error_json(const std::string& kind, const std::string& detail);

}  // namespace circlehilb::cli
