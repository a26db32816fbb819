#include "circlehilb/cli/commands.hpp"

#include "circlehilb/schur.hpp"

namespace circlehilb::cli {

HilbertOptions GlobalOptions::hilbert_options() const {
  HilbertOptions o;
  o.method = method;
  o.max_denominator_degree = max_denominator_degree;
  if (verify_depth != 0) o.verify_depth = verify_depth;
  return o;
}

Json cmd_hilb(const std::vector<std::int64_t>& weights, const GlobalOptions& g) {
  const auto v = WeightVector::validate(weights);
  const HilbertResult r = hilbert_series_detailed(v, g.hilbert_options());
  Json out;
  out["weights"] = weights_json(v);
  out["dimension"] = v.dimension();
  out["hilbert"] = to_json(r.series);
  out["route"] = r.route;
  out["heuristic"] = r.heuristic;
  out["verified_depth"] = r.verified_depth;
  return out;
}

Json cmd_gamma(const std::vector<std::int64_t>& weights, std::size_t upto, const std::string& method,
               const GlobalOptions& g) {
  const auto v = WeightVector::validate(weights);
  Json out;
  out["weights"] = weights_json(v);
  out["pole_order"] = v.dimension();
  if (method != "all") {
    const GammaMethod m = parse_gamma_method(method);
    GammaVector gv = m == GammaMethod::SchurForm     ? gammas_schur(v, upto)
                     : m == GammaMethod::GenericForm ? gammas_generic(v, upto)
                                                     : gammas_from_series(v, upto, g.hilbert_options());
    out["gamma"] = to_json(gv.values);
    out["method"] = to_string(gv.method);
    return out;
  }
  const std::size_t closed = std::min<std::size_t>(upto, 3);
  const GammaVector series = gammas_from_series(v, upto, g.hilbert_options());
  const GammaVector schur = gammas_schur(v, closed);
  bool agree = std::equal(schur.values.begin(), schur.values.end(), series.values.begin());
  Json methods;
  methods["series"] = to_json(series.values);
  methods["schur"] = to_json(schur.values);
  if (v.is_generic()) {
    const GammaVector gen = gammas_generic(v, closed);
    agree = agree && std::equal(gen.values.begin(), gen.values.end(), series.values.begin());
    methods["generic"] = to_json(gen.values);
  } else {
    methods["generic"] = nullptr;
  }
  out["gamma"] = to_json(series.values);
  out["method"] = "all";
  out["methods"] = methods;
  out["agree"] = agree;
  return out;
}

Json cmd_analyze(const std::vector<std::int64_t>& weights, bool full, const GlobalOptions& g) {
  const auto v = WeightVector::validate(weights);
  AnalyzeOptions o;
  o.full = full;
  o.hilbert = g.hilbert_options();
  Json out = to_json(analyze(v, o));
  out["a_invariant_closed_form"] = to_json(a_invariant_closed_form(v));
  return out;
}

Json cmd_schur(std::int64_t u, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const SplitVariables vars{xs, ys};
  Json out;
  out["u"] = u;
  out["xs"] = to_json(xs);
  out["ys"] = to_json(ys);
  const Rational value = partial_schur_expansion(u, vars);
  out["value"] = to_json(value);
  Json routes;
  routes["expansion"] = to_json(value);
  bool agree = true;
  try {
    const Rational d = partial_schur_det(u, vars);
    routes["determinant"] = to_json(d);
    agree = agree && d == value;
  } catch (const RepeatedVariables&) {
    routes["determinant"] = nullptr;
  }
  try {
    const Rational t = partial_schur_tableaux(u, vars);
    routes["tableau"] = to_json(t);
    agree = agree && t == value;
  } catch (const CombinatorialExplosion&) {
    routes["tableau"] = nullptr;
  }
  out["routes"] = routes;
  out["agree"] = agree;
  return out;
}

Json cmd_hironaka(const HironakaData& data, std::size_t upto) {
  data.validate();
  const RationalFunction f = hilb_from_hironaka(data);
  const LaurentExpansion e = laurent_at_one(f, upto + 1);
  std::vector<Rational> gammas;
  for (std::size_t l = 0; l <= upto; ++l) gammas.push_back(gamma_cm(l, data));
  std::vector<Rational> direct = e.coefficients;
  direct.resize(upto + 1);
  Json out;
  out["alphas"] = data.alphas;
  out["betas"] = data.betas;
  out["gamma"] = to_json(gammas);
  out["laurent"] = to_json(direct);
  out["agree"] = gammas == direct && e.pole_order == static_cast<std::int64_t>(data.alphas.size());
  out["hilbert"] = to_json(f);
  return out;
}

}  // namespace circlehilb::cli
