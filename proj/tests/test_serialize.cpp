#include "catch2/catch_amalgamated.hpp"

#include "berglab/serialize.hpp"

using namespace berglab;
using Catch::Approx;

TEST_CASE("analytic function round trips") {
  auto p = random_polynomial(5, 1.0, 77);
  auto jp = to_json(p);
  auto p2 = function_from_json(jp);
  for (int n = 0; n <= 5; ++n) CHECK(std::abs(p.coeff(n) - p2.coeff(n)) == 0.0);
  CHECK(p2.label() == p.label());

  auto m = AnalyticFunction::monomial(4, cplx(0.0, 2.0));
  auto m2 = function_from_json(to_json(m));
  CHECK(m2.kind() == FunctionKind::Monomial);
  CHECK(std::abs(m2.coeff(4) - cplx(0.0, 2.0)) == 0.0);

  auto g = AnalyticFunction::pole_power(0.75);
  auto g2 = function_from_json(to_json(g));
  CHECK(g2.kind() == FunctionKind::PolePower);
  CHECK(g2.pole_gamma() == 0.75);

  // Customs persist as their truncated series.
  auto c = AnalyticFunction::custom([](int n) { return cplx(1.0 / (n + 1.0)); }, 8);
  auto c2 = function_from_json(to_json(c));
  CHECK(c2.kind() == FunctionKind::Polynomial);
  CHECK(std::abs(c2.coeff(8) - cplx(1.0 / 9.0)) < 1e-16);
}

TEST_CASE("report serialization carries the pass/fail structure") {
  TheoremReport rep;
  rep.theorem_id = "demo";
  rep.hypothesis_constant = 2.5;
  rep.add(0.5, 1.0, 2.0, "a");
  rep.add(0.9, 3.0, 2.0, "b");
  rep.note("one note");
  auto j = to_json(rep);
  CHECK(j["theorem_id"] == "demo");
  CHECK(j["all_satisfied"] == false);
  CHECK(j["margins"].size() == 2);
  CHECK(j["margins"][0]["satisfied"] == true);
  CHECK(j["margins"][1]["satisfied"] == false);
  CHECK(j["notes"].size() == 1);
}

TEST_CASE("holder estimate and growth report serialize") {
  auto est = lambda_star_seminorm(AnalyticFunction::monomial(1), 2.0, 0.0, 1.0);
  auto j = to_json(est);
  CHECK(j["t_grid"].size() == est.t_grid.size());
  CHECK(j["constant_estimate"].get<double>() == Approx(est.constant_estimate));

  auto rep = fit_growth_exponent(AnalyticFunction::monomial(2), MeanKind::CircleMp, 2.0, 0.0);
  auto jg = to_json(rep);
  CHECK(jg["radii"].size() == rep.radii.size());
}
