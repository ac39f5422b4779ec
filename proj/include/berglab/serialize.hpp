// berglab: JSON serialization for experiment persistence and report files.
// Custom closed forms persist as their truncated coefficient vectors.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "berglab/analytic.hpp"
#include "berglab/extremal.hpp"
#include "berglab/growth.hpp"
#include "berglab/means.hpp"

namespace berglab {

using json = nlohmann::ordered_json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const AnalyticFunction& f) {
  json j;
  j["label"] = f.label();
  switch (f.kind()) {
    case FunctionKind::Polynomial: {
      j["kind"] = "polynomial";
      json c = json::array();
      for (const auto& a : f.coefficients()) c.push_back(to_json(a));
      j["coeffs"] = c;
      break;
    }
    case FunctionKind::Monomial:
      j["kind"] = "monomial";
      j["params"] = {{"n", f.monomial_degree()}, {"scale", to_json(f.scale())}};
      break;
    case FunctionKind::PolePower:
      j["kind"] = "pole_power";
      j["params"] = {{"gamma", f.pole_gamma()}, {"scale", to_json(f.scale())}};
      break;
    case FunctionKind::Exponential:
      j["kind"] = "exponential";
      j["params"] = {{"scale", to_json(f.scale())}};
      break;
    case FunctionKind::Custom: {
      j["kind"] = "polynomial";  // persists as its truncated series
      json c = json::array();
      for (const auto& a : f.coefficients(f.truncation())) c.push_back(to_json(a));
      j["coeffs"] = c;
      break;
    }
  }
  return j;
}

inline cplx cplx_from_json(const json& j) { return cplx(j.at(0), j.at(1)); }

inline AnalyticFunction function_from_json(const json& j) {
  std::string kind = j.at("kind");
  std::string label = j.value("label", kind);
  if (kind == "polynomial") {
    std::vector<cplx> c;
    for (const auto& x : j.at("coeffs")) c.push_back(cplx_from_json(x));
    return AnalyticFunction::polynomial(std::move(c), label);
  }
  if (kind == "monomial")
    return AnalyticFunction::monomial(j.at("params").at("n"),
                                      cplx_from_json(j.at("params").at("scale")))
        .relabeled(label);
  if (kind == "pole_power")
    return AnalyticFunction::pole_power(j.at("params").at("gamma"),
                                        cplx_from_json(j.at("params").at("scale")))
        .relabeled(label);
  if (kind == "exponential")
    return AnalyticFunction::exponential(cplx_from_json(j.at("params").at("scale")))
        .relabeled(label);
  throw parameter_error("function_from_json: unknown kind " + kind);
}

inline json to_json(const GrowthReport& rep) {
  return json{{"radii", rep.radii},
              {"values", rep.values},
              {"fitted_slope", rep.fitted_slope},
              {"fit_constant", rep.fit_constant},
              {"max_rel_residual", rep.max_rel_residual},
              {"log_flag", rep.log_flag}};
}

inline json to_json(const Margin& m) {
  return json{{"point", m.point},
              {"lhs", m.lhs},
              {"rhs_bound", m.rhs},
              {"satisfied", m.satisfied},
              {"label", m.label}};
}

inline json to_json(const TheoremReport& rep) {
  json margins = json::array();
  for (const auto& m : rep.margins) margins.push_back(to_json(m));
  return json{{"theorem_id", rep.theorem_id},
              {"hypothesis_constant", rep.hypothesis_constant},
              {"margins", margins},
              {"all_satisfied", rep.all_satisfied},
              {"notes", rep.notes}};
}

inline json to_json(const HolderEstimate& est) {
  return json{{"beta", est.beta},
              {"constant_estimate", est.constant_estimate},
              {"t_grid", est.t_grid},
              {"per_t_values", est.per_t_values}};
}

inline json to_json(const ExtremalSolution& sol) {
  json trace = json::array();
  for (const auto& t : sol.trace)
    trace.push_back(json{{"iteration", t.iteration}, {"value", t.value}, {"residual", t.residual}});
  return json{{"F", to_json(sol.F)},
              {"value", sol.value},
              {"stationarity_residual", sol.stationarity_residual},
              {"iterations", sol.iterations},
              {"converged", sol.converged},
              {"trace", trace}};
}

}  // namespace berglab
