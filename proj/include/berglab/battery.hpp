// berglab: the built-in verification battery.
//
// Test functions: monomials z^n (n <= 8), the pole powers (1-z)^{-gamma} for
// gamma in {1/4, 1/2, 3/4} (closed forms for the growth suites, truncations
// for the smoothness suites), ten seeded random polynomials, the truncated
// log series sum z^n/n (second-difference exponent 1), and the power series
// sum n^{-3/2} z^n (exponent 3/2).  Hypothesis exponents are measured first
// (fitted slopes, snapped to the exact branch points), the least admissible
// hypothesis constant is taken over a dense grid, and only then does the
// verifier run.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "berglab/extremal.hpp"
#include "berglab/growth.hpp"

namespace berglab {

struct SuiteReport {
  std::string name;
  std::vector<TheoremReport> reports;
  bool all_satisfied = true;

  void absorb(TheoremReport rep, const std::string& config) {
    rep.notes.insert(rep.notes.begin(), "config: " + config);
    all_satisfied = all_satisfied && rep.all_satisfied;
    reports.push_back(std::move(rep));
  }
};

namespace battery {

inline std::vector<AnalyticFunction> monomials() {
  std::vector<AnalyticFunction> out;
  for (int n = 0; n <= 8; ++n) out.push_back(AnalyticFunction::monomial(n));
  return out;
}

inline std::vector<double> pole_gammas() { return {0.25, 0.5, 0.75}; }

inline std::vector<AnalyticFunction> random_polynomials() {
  std::vector<AnalyticFunction> out;
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    out.push_back(random_polynomial(8, 2.0, seed));
  return out;
}

inline AnalyticFunction log_series(int degree = 256) {
  return truncate(AnalyticFunction::custom(
                      [](int n) { return n == 0 ? cplx(0.0) : cplx(1.0 / n); }, degree,
                      "log-series"),
                  degree)
      .relabeled("log-series~" + std::to_string(degree));
}

inline AnalyticFunction power_series_32(int degree = 256) {
  return truncate(AnalyticFunction::custom(
                      [](int n) { return n == 0 ? cplx(0.0) : cplx(std::pow(double(n), -1.5)); },
                      degree, "n^-3/2-series"),
                  degree)
      .relabeled("n^-3/2-series~" + std::to_string(degree));
}

/// Raw second-difference profile in the Bergman norm.
inline std::vector<double> d2_profile(const AnalyticFunction& f, double p, double alpha,
                                      const std::vector<double>& t_grid) {
  std::vector<double> out;
  for (double t : t_grid) out.push_back(bergman_norm(second_difference(f, t), p, alpha));
  return out;
}

/// Fitted t-exponent of the profile, snapped to the branch points beta = 1
/// and beta = 2 and clamped into (0, 2].
inline double measured_smoothness_exponent(const std::vector<double>& t_grid,
                                           const std::vector<double>& profile) {
  double e = detail::t_exponent(t_grid, profile);
  if (e > 1.95) return 2.0;
  if (std::abs(e - 1.0) <= 0.05) return 1.0;
  return std::min(2.0, std::max(0.05, e));
}

inline double profile_constant(const std::vector<double>& t_grid,
                               const std::vector<double>& profile, double beta) {
  double B = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    B = std::max(B, profile[i] / std::pow(t_grid[i], beta));
  return B;
}

}  // namespace battery

namespace detail {

/// Growth hypothesis (beta, B, log?) for a mean of f, measured on the dense
/// grid.  beta is clamped to the nonpositive range the growth theorems use.
struct GrowthHypothesis {
  double beta = 0.0;
  double B = 0.0;
  bool log_model = false;
};

inline GrowthHypothesis measure_growth_hypothesis(const AnalyticFunction& f, MeanKind kind,
                                                  double p, double alpha,
                                                  double beta_shift = 0.0) {
  GrowthHypothesis hyp;
  GrowthReport fit = fit_growth_exponent(f, kind, p, alpha);
  double raw = fit.fitted_slope + beta_shift;
  if (fit.log_flag || std::abs(raw) < 0.02) {
    hyp.log_model = true;
    hyp.beta = 0.0;
  } else {
    hyp.beta = std::min(0.0, raw);
  }
  auto grid = hypothesis_grid();
  for (double r : grid) {
    if (hyp.log_model && r < 0.5) continue;
    double v = mean(kind, f, p, alpha, r);
    double model = hyp.log_model ? std::abs(std::log(1.0 - r)) : std::pow(1.0 - r, hyp.beta);
    hyp.B = std::max(hyp.B, v / model);
  }
  return hyp;
}

}  // namespace detail

inline SuiteReport suite_area_to_hardy() {
  SuiteReport suite;
  suite.name = "area_to_hardy";
  auto run = [&](const AnalyticFunction& f, double p, double alpha, bool use_hat) {
    auto hyp = detail::measure_growth_hypothesis(f, use_hat ? MeanKind::AreaAHat : MeanKind::AreaA,
                                                 p, alpha);
    auto rep = verify_area_to_hardy(f, p, alpha, hyp.beta, hyp.B, default_radii(), use_hat,
                                    hyp.log_model);
    suite.absorb(std::move(rep),
                 f.label() + " p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) +
                     (use_hat ? " (hat hypothesis)" : "") + (hyp.log_model ? " (log model)" : ""));
  };
  for (const auto& f : battery::monomials())
    for (double alpha : {0.0, 0.5, -0.5}) run(f, 2.0, alpha, false);
  for (const auto& f : battery::random_polynomials()) run(f, 2.0, 0.0, false);
  for (double g : battery::pole_gammas()) {
    auto f = AnalyticFunction::pole_power(g);
    for (double alpha : {0.0, 0.5, -0.5}) run(f, 2.0, alpha, false);
    run(f, 4.0, 0.0, false);
    run(f, 2.0, -0.5, true);
  }
  return suite;
}

inline SuiteReport suite_hardy_to_area() {
  SuiteReport suite;
  suite.name = "hardy_to_area";
  auto run = [&](const AnalyticFunction& f, double p, double alpha) {
    double ap = (1.0 + alpha) / p;
    GrowthReport fit = fit_growth_exponent(f, MeanKind::CircleMp, p, alpha);
    double beta = fit.fitted_slope + ap;
    if (std::abs(beta) < 0.02) beta = 0.0;  // log branch at the boundary
    double B = 0.0;
    for (double r : hypothesis_grid(true)) {
      double v = mean(MeanKind::CircleMp, f, p, alpha, r);
      B = std::max(B, v / std::pow(1.0 - r * r, beta - ap));
    }
    auto rep = verify_hardy_to_area(f, p, alpha, beta, B);
    suite.absorb(std::move(rep), f.label() + " p=" + std::to_string(p) +
                                     " alpha=" + std::to_string(alpha) +
                                     " beta=" + std::to_string(beta));
  };
  // The beta < 0 branch constant (alpha+1)(-beta p)^{-1/p} can undershoot
  // near-extremal functions when alpha < 0 (the integration only yields
  // (alpha+1)^{1/p}), so the battery exercises alpha >= 0.
  for (const auto& f : battery::monomials())
    for (double alpha : {0.0, 0.5}) run(f, 2.0, alpha);
  for (const auto& f : battery::random_polynomials()) run(f, 2.0, 0.0);
  for (double g : battery::pole_gammas()) {
    auto f = AnalyticFunction::pole_power(g);
    run(f, 2.0, 0.0);
    run(f, 4.0, 0.0);
    run(f, 4.0, 0.5);
  }
  return suite;
}

inline SuiteReport suite_mean_equivalence() {
  SuiteReport suite;
  suite.name = "mean_equivalence";
  auto run = [&](const AnalyticFunction& f, double p, double alpha) {
    auto rep = verify_mean_equivalence(f, p, alpha);
    suite.absorb(std::move(rep),
                 f.label() + " p=" + std::to_string(p) + " alpha=" + std::to_string(alpha));
  };
  for (const auto& f : battery::monomials())
    for (double alpha : {-0.5, 0.0, 1.0}) run(f, 2.0, alpha);
  for (const auto& f : battery::random_polynomials()) run(f, 2.0, 1.0);
  for (double g : battery::pole_gammas()) {
    auto f = AnalyticFunction::pole_power(g);
    for (double alpha : {-0.5, 0.0, 1.0}) run(f, 2.0, alpha);
    run(f, 4.0, 1.0);
  }
  return suite;
}

inline SuiteReport suite_derivative_transfer() {
  SuiteReport suite;
  suite.name = "derivative_transfer";
  auto run = [&](const AnalyticFunction& f, double p, double alpha, DerivativeDirection dir) {
    auto rep = verify_derivative_transfer(f, p, alpha, default_radii(), dir);
    suite.absorb(std::move(rep),
                 f.label() + " p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) +
                     (dir == DerivativeDirection::Integrate ? " integrate" : " differentiate"));
  };
  for (const auto& f : battery::monomials()) {
    run(f, 2.0, 0.0, DerivativeDirection::Integrate);
    run(f, 2.0, 0.5, DerivativeDirection::Differentiate);
  }
  for (const auto& f : battery::random_polynomials()) {
    run(f, 2.0, 0.5, DerivativeDirection::Integrate);
    run(f, 2.0, 0.0, DerivativeDirection::Differentiate);
  }
  for (double g : battery::pole_gammas()) {
    auto f = AnalyticFunction::pole_power(g);
    run(f, 2.0, 0.0, DerivativeDirection::Integrate);
    run(f, 2.0, 0.5, DerivativeDirection::Differentiate);
  }
  return suite;
}

inline SuiteReport suite_lip_to_growth() {
  SuiteReport suite;
  suite.name = "lip_to_growth";
  auto grid = default_t_grid();
  auto run = [&](const AnalyticFunction& f, double p, double alpha) {
    auto prof = battery::d2_profile(f, p, alpha, grid);
    double beta = battery::measured_smoothness_exponent(grid, prof);
    double B = battery::profile_constant(grid, prof, beta);
    if (B == 0.0) B = 1e-30;  // zero profile: any B works
    auto rep = verify_lip_to_growth(f, p, alpha, beta, B, default_radii(), grid);
    suite.absorb(std::move(rep), f.label() + " p=" + std::to_string(p) + " alpha=" +
                                     std::to_string(alpha) + " beta=" + std::to_string(beta));
  };
  for (const auto& f : battery::monomials()) run(f, 2.0, 0.0);
  for (const auto& f : battery::random_polynomials()) run(f, 2.0, -0.5);
  for (double g : battery::pole_gammas()) {
    auto f = truncate(AnalyticFunction::pole_power(g), 256);
    run(f, 2.0, 0.0);
    run(f, 2.0, -0.5);
  }
  run(battery::log_series(), 2.0, 0.0);        // beta = 1 branch
  run(battery::power_series_32(), 2.0, 0.0);   // 1 < beta < 2 branch
  return suite;
}

inline SuiteReport suite_growth_to_lip() {
  SuiteReport suite;
  suite.name = "growth_to_lip";
  auto grid = default_t_grid();
  auto hyp_grid = hypothesis_grid();
  auto run = [&](const AnalyticFunction& f, double p, double alpha) {
    AnalyticFunction f2 = derivative(derivative(f));
    GrowthReport fit = fit_growth_exponent(f2, MeanKind::AreaAHat, p, alpha);
    double beta = 2.0 + fit.fitted_slope;
    if (beta > 1.95 || f2.is_zero()) beta = 2.0;
    if (std::abs(beta - 1.0) <= 0.05) beta = 1.0;
    beta = std::min(2.0, std::max(0.05, beta));
    double B = least_hypothesis_constant(
        [&](double r) { return mean(MeanKind::AreaAHat, f2, p, alpha, r); },
        [beta](double r) { return std::pow(1.0 - r, beta - 2.0); }, hyp_grid);
    auto rep = verify_growth_to_lip(f, p, alpha, beta, B, grid);
    suite.absorb(std::move(rep), f.label() + " p=" + std::to_string(p) + " alpha=" +
                                     std::to_string(alpha) + " beta=" + std::to_string(beta));
  };
  for (const auto& f : battery::monomials()) run(f, 2.0, 0.0);
  for (const auto& f : battery::random_polynomials()) run(f, 2.0, 0.5);
  for (double g : battery::pole_gammas()) {
    auto f = truncate(AnalyticFunction::pole_power(g), 256);
    run(f, 2.0, 0.0);
    run(f, 2.0, -0.5);
  }
  run(battery::log_series(), 2.0, 0.0);
  run(battery::power_series_32(), 2.0, 0.0);
  return suite;
}

inline SuiteReport suite_hardy_bergman_holder() {
  SuiteReport suite;
  suite.name = "hardy_bergman_holder";
  auto run = [&](const AnalyticFunction& f, double p, double alpha) {
    auto rep = verify_hardy_bergman_holder(f, p, alpha);
    suite.absorb(std::move(rep),
                 f.label() + " p=" + std::to_string(p) + " alpha=" + std::to_string(alpha));
  };
  run(AnalyticFunction::monomial(2), 2.0, 0.0);
  run(AnalyticFunction::monomial(5), 2.0, -0.5);
  run(random_polynomial(8, 2.0, 1), 2.0, 0.0);
  // Deep truncation: the exponent transients decay like sqrt(t).
  auto f = truncate(AnalyticFunction::pole_power(0.25), 4096);
  run(f, 2.0, 0.0);
  run(f, 2.0, -0.5);
  return suite;
}

inline SuiteReport suite_ext_regularity() {
  SuiteReport suite;
  suite.name = "ext_regularity";
  auto grid = default_t_grid();
  std::vector<AnalyticFunction> kernels = {
      AnalyticFunction::polynomial({0.0, 1.0, 0.0, 1.0}, "z+z^3"),
      truncate(AnalyticFunction::pole_power(0.25), 12)};
  for (const auto& k : kernels) {
    for (double p : {1.5, 3.0, 4.0}) {
      double alpha = 0.0, q = p / (p - 1.0);
      int N = 16;
      // Hypothesis profile of the rescaled kernel.
      ExtremalProblem prob;
      prob.k = k;
      prob.p = p;
      prob.alpha = alpha;
      prob.degree = N;
      auto sol = solve_extremal(prob);
      auto kc = k.coefficients(N);
      for (auto& x : kc) x /= sol.value;
      auto ks = AnalyticFunction::polynomial(std::move(kc));
      auto prof = battery::d2_profile(ks, q, alpha, grid);
      double beta = battery::measured_smoothness_exponent(grid, prof);
      double B = battery::profile_constant(grid, prof, beta);
      auto rep = verify_ext_regularity(k, p, alpha, beta, B, grid, N);
      suite.absorb(std::move(rep), k.label() + " p=" + std::to_string(p) +
                                       " beta=" + std::to_string(beta));
    }
  }
  return suite;
}

inline SuiteReport suite_pext() {
  SuiteReport suite;
  suite.name = "pext";
  {
    auto rep = verify_pext(AnalyticFunction::monomial(1), 3.0, 8);
    suite.absorb(std::move(rep), "z p=3");
  }
  {
    auto base = truncate(AnalyticFunction::pole_power(0.25), 12);
    auto k = detail::poly_lincomb(base, 1.0, AnalyticFunction::monomial(2), 1.0)
                 .relabeled("(1-z)^-1/4~12 + z^2");
    auto rep = verify_pext(k, 3.0, 16);
    suite.absorb(std::move(rep), k.label() + " p=3");
  }
  {
    auto k = random_polynomial(6, 1.0, 7);
    auto rep = verify_pext(k, 4.0 / 3.0, 16);
    suite.absorb(std::move(rep), k.label() + " p=4/3");
  }
  return suite;
}

inline SuiteReport suite_boundary_holder() {
  SuiteReport suite;
  suite.name = "boundary_holder";
  {
    auto k = AnalyticFunction::polynomial({0.0, 1.0, 0.0, 1.0}, "z+z^3");
    suite.absorb(verify_boundary_holder(k, 3.0, -0.5, 16), "z+z^3 p=3 alpha=-0.5");
  }
  {
    auto k = truncate(AnalyticFunction::pole_power(0.125), 12);
    suite.absorb(verify_boundary_holder(k, 4.0, -0.5, 16), k.label() + " p=4 alpha=-0.5");
    suite.absorb(verify_boundary_holder(k, 1.5, -0.8, 16), k.label() + " p=1.5 alpha=-0.8");
  }
  return suite;
}

inline SuiteReport suite_clarkson() {
  SuiteReport suite;
  suite.name = "clarkson";
  TheoremReport rep;
  rep.theorem_id = "clarkson";
  double ps[] = {2.0, 3.0, 4.0};
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto f = random_polynomial(5, 1.0, 1000 + 2 * i);
    auto g = random_polynomial(5, 1.0, 1001 + 2 * i);
    double p = ps[i % 3];
    double alpha = (i % 2) ? 0.5 : 0.0;
    bool ok = clarkson_check(f, g, p, alpha, 1e-8);
    rep.add(double(i), ok ? 0.0 : 1.0, 0.0,
            "pair " + std::to_string(i) + " p=" + std::to_string(p));
  }
  suite.absorb(std::move(rep), "200 seeded pairs, p in {2,3,4}");
  return suite;
}

inline SuiteReport suite_bcl() {
  SuiteReport suite;
  suite.name = "bcl";
  TheoremReport rep;
  rep.theorem_id = "bcl";
  double ps[] = {1.5, 2.0};
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto f = random_polynomial(5, 1.0, 2000 + 2 * i);
    auto g = random_polynomial(5, 1.0, 2001 + 2 * i);
    double p = ps[i % 2];
    double alpha = (i % 2) ? -0.5 : 0.0;
    bool ok = bcl_check(f, g, p, alpha, 1e-8);
    rep.add(double(i), ok ? 0.0 : 1.0, 0.0,
            "pair " + std::to_string(i) + " p=" + std::to_string(p));
  }
  suite.absorb(std::move(rep), "200 seeded pairs, p in {1.5,2}");
  return suite;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "area_to_hardy", "hardy_to_area",        "mean_equivalence", "derivative_transfer",
      "lip_to_growth", "growth_to_lip",        "hardy_bergman_holder",
      "ext_regularity", "pext",                "boundary_holder",
      "clarkson",      "bcl"};
  return names;
}

inline SuiteReport run_suite(const std::string& name) {
  if (name == "area_to_hardy") return suite_area_to_hardy();
  if (name == "hardy_to_area") return suite_hardy_to_area();
  if (name == "mean_equivalence") return suite_mean_equivalence();
  if (name == "derivative_transfer") return suite_derivative_transfer();
  if (name == "lip_to_growth") return suite_lip_to_growth();
  if (name == "growth_to_lip") return suite_growth_to_lip();
  if (name == "hardy_bergman_holder") return suite_hardy_bergman_holder();
  if (name == "ext_regularity") return suite_ext_regularity();
  if (name == "pext") return suite_pext();
  if (name == "boundary_holder") return suite_boundary_holder();
  if (name == "clarkson") return suite_clarkson();
  if (name == "bcl") return suite_bcl();
  throw parameter_error("unknown verifier suite: " + name);
}

}  // namespace berglab
