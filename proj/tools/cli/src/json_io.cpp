#include "circlehilb/cli/json_io.hpp"

#include <sstream>

namespace circlehilb::cli {

Json to_json(const Rational& q) { return circlehilb::to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, circlehilb::to_string(c)}));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  Polynomial p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("polynomial terms are [exponent, coeff] pairs");
    p.add_to_coeff(term[0].get<Exponent>(), rational_from_json(term[1]));
  }
  return p;
}

Json to_json(const FactoredDenominator& f) {
  Json out = Json::array();
  for (const auto& [d, m] : f) out.push_back(Json::array({d, m}));
  return out;
}

FactoredDenominator factored_from_json(const Json& j) {
  FactoredDenominator f;
  for (const auto& term : j) f.push_back({term.at(0).get<Exponent>(), term.at(1).get<int>()});
  return f;
}

std::string pretty(const RationalFunction& f) {
  std::ostringstream os;
  if (auto view = f.factored_view()) {
    os << "(" << view->numerator.to_string() << ")";
    if (!view->denominator.empty()) {
      os << "/(";
      bool first = true;
      for (const auto& [d, m] : view->denominator) {
        if (!first) os << "*";
        first = false;
        os << "(1-t^" << d << ")";
        if (m != 1) os << "^" << m;
      }
      os << ")";
    }
    return os.str();
  }
  os << "(" << f.numerator().to_string() << ")/(" << f.denominator().to_string() << ")";
  return os.str();
}

Json to_json(const RationalFunction& f) {
  Json out;
  out["numerator"] = to_json(f.numerator());
  out["denominator"] = to_json(f.denominator());
  if (auto view = f.factored_view()) {
    out["factored"] = {{"numerator", to_json(view->numerator)}, {"denominator", to_json(view->denominator)}};
  } else {
    out["factored"] = nullptr;
  }
  out["degree"] = f.is_zero() ? Json(nullptr) : Json(degree(f));
  out["text"] = pretty(f);
  return out;
}

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction::reduce(polynomial_from_json(j.at("numerator")), polynomial_from_json(j.at("denominator")));
}

Json weights_json(const WeightVector& v) { return v.all_weights(); }

WeightVector weights_from_json(const Json& j) {
  auto raw = j.at("weights").get<std::vector<std::int64_t>>();
  const auto scale = j.value("faithful_scale", std::int64_t{1});
  for (auto& a : raw) a *= scale;
  return WeightVector::validate(raw);
}

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values) out.push_back(to_json(q));
  return out;
}

Json to_json(const GorensteinReport& r) {
  Json out;
  out["weights"] = weights_json(r.weights);
  out["faithful_scale"] = r.weights.faithful_scale();
  out["classification"] = to_string(r.classification);
  out["a_invariant"] = r.degree ? Json(std::to_string(*r.degree)) : Json(nullptr);
  out["dimension"] = r.dimension;
  out["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  out["gamma0"] = to_json(r.gamma0);
  out["gamma1"] = to_json(r.gamma1);
  out["ratio_2g1_g0"] = to_json(r.ratio_2g1_g0);
  out["ratio_is_integer"] = r.ratio_is_integer;
  out["stanley_holds"] = r.stanley_holds;
  Json hits = Json::array();
  for (auto h : r.sufficient_condition_hits) hits.push_back(to_string(h));
  out["sufficient_condition_hits"] = hits;
  out["hilbert"] = r.hilbert ? to_json(*r.hilbert) : Json(nullptr);
  out["hilbert_route"] = r.hilbert_route;
  return out;
}

GorensteinReport report_from_json(const Json& j) {
  GorensteinReport r;
  r.weights = weights_from_json(j);
  r.classification = parse_classification(j.at("classification").get<std::string>());
  r.dimension = j.at("dimension").get<std::int64_t>();
  if (!j.at("degree").is_null()) r.degree = j.at("degree").get<std::int64_t>();
  r.gamma0 = rational_from_json(j.at("gamma0"));
  r.gamma1 = rational_from_json(j.at("gamma1"));
  r.ratio_2g1_g0 = rational_from_json(j.at("ratio_2g1_g0"));
  r.ratio_is_integer = j.at("ratio_is_integer").get<bool>();
  r.stanley_holds = j.at("stanley_holds").get<bool>();
  for (const auto& h : j.at("sufficient_condition_hits")) {
    r.sufficient_condition_hits.push_back(parse_sufficient_condition(h.get<std::string>()));
  }
  if (!j.at("hilbert").is_null()) r.hilbert = rational_function_from_json(j.at("hilbert"));
  r.hilbert_route = j.value("hilbert_route", std::string{});
  return r;
}

Json error_json(const std::string& kind, const std::string& detail) {
  return {{"error", {{"kind", kind}, {"detail", detail}}}};
}

}  // namespace circlehilb::cli
