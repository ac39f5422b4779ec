#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "berglab/growth.hpp"

using namespace berglab;
using Catch::Approx;

TEST_CASE("power-law fit recovers exact exponents") {
  auto radii = default_radii();
  for (double gamma : {-1.3, -0.5, 0.0, 0.8}) {
    std::vector<double> values;
    for (double r : radii) values.push_back(2.7 * std::pow(1.0 - r, gamma));
    auto rep = fit_power_law(radii, values);
    CHECK(rep.fitted_slope == Approx(gamma).margin(1e-10));
    CHECK(rep.fit_constant == Approx(2.7).epsilon(1e-10));
    CHECK(rep.max_rel_residual < 1e-10);
    CHECK_FALSE(rep.log_flag);
  }
  CHECK_THROWS_AS(fit_power_law({0.5, 0.5}, {1.0, 1.0}), parameter_error);
}

TEST_CASE("growth exponents of model functions") {
  // Bounded means for polynomials.
  auto poly = random_polynomial(6, 1.0, 12);
  auto rep = fit_growth_exponent(poly, MeanKind::CircleMp, 2.0, 0.0);
  CHECK(std::abs(rep.fitted_slope) < 0.02);

  // M_2(r, (1-z)^{-1}) = (1-r^2)^{-1/2}: slope -1/2.
  auto pole = AnalyticFunction::pole_power(1.0);
  auto rep2 = fit_growth_exponent(pole, MeanKind::CircleMp, 2.0, 0.0);
  CHECK(rep2.fitted_slope == Approx(-0.5).margin(0.01));

  // Atilde^2 = log(1/(1-r^2)): the log model wins.
  auto rep3 = fit_growth_exponent(pole, MeanKind::AreaATilde, 2.0, 0.0);
  CHECK(rep3.log_flag);

  // Zero function: flat report.
  auto rep4 = fit_growth_exponent(AnalyticFunction::constant(0.0), MeanKind::CircleMp, 2.0, 0.0);
  CHECK(rep4.fitted_slope == 0.0);
}

TEST_CASE("area growth controls circle growth") {
  auto grid = hypothesis_grid();
  // Constant function, beta = 0.
  auto one = AnalyticFunction::constant(1.0);
  for (double alpha : {-0.5, 0.0, 0.7}) {
    double B = least_hypothesis_constant(
        [&](double r) { return mean(MeanKind::AreaA, one, 2.0, alpha, r); },
        [](double) { return 1.0; }, grid);
    auto rep = verify_area_to_hardy(one, 2.0, alpha, 0.0, B);
    CHECK(rep.all_satisfied);
  }
  // (1-z)^{-1}, p = 2, alpha = 0, beta = -1/2; both sides known in closed form.
  auto pole = AnalyticFunction::pole_power(1.0);
  double B = least_hypothesis_constant(
      [&](double r) { return mean(MeanKind::AreaA, pole, 2.0, 0.0, r); },
      [](double r) { return std::pow(1.0 - r, -0.5); }, grid);
  auto rep = verify_area_to_hardy(pole, 2.0, 0.0, -0.5, B);
  CHECK(rep.all_satisfied);

  // Hat-mean hypothesis variant for alpha <= 0.
  auto rep_hat = verify_area_to_hardy(pole, 2.0, -0.5, -0.5,
                                      least_hypothesis_constant(
                                          [&](double r) {
                                            return mean(MeanKind::AreaAHat, pole, 2.0, -0.5, r);
                                          },
                                          [](double r) { return std::pow(1.0 - r, -0.5); }, grid),
                                      default_radii(), true);
  CHECK(rep_hat.all_satisfied);

  // A deliberately small B violates the hypothesis, not the theorem.
  CHECK_THROWS_AS(verify_area_to_hardy(pole, 2.0, 0.0, -0.5, 1e-3), hypothesis_violation);
  CHECK_THROWS_AS(verify_area_to_hardy(pole, 2.0, 0.0, 0.5, 1.0), parameter_error);
}

TEST_CASE("circle growth controls area growth") {
  // beta > 0 branch: constants are in every space.
  auto c = AnalyticFunction::constant(cplx(2.0, 1.0));
  auto rep = verify_hardy_to_area(c, 2.0, 0.5, 0.3, 3.0);
  CHECK(rep.all_satisfied);

  // (1-z)^{-1}, p = 2, alpha = 0: M_2(r) = (1-r^2)^{-1/2} exactly.
  auto pole = AnalyticFunction::pole_power(1.0);
  // beta = -1/2: explicit constant (-beta p)^{-1/p} = 1.
  auto rep2 = verify_hardy_to_area(pole, 2.0, 0.0, -0.5, 1.0);
  CHECK(rep2.all_satisfied);
  // beta = 0: log model with equality Atilde^2 = |log(1-r^2)|.
  auto rep3 = verify_hardy_to_area(pole, 2.0, 0.0, 0.0, 1.0);
  CHECK(rep3.all_satisfied);
  for (const auto& m : rep3.margins) CHECK(m.lhs == Approx(m.rhs).epsilon(1e-6));
}

TEST_CASE("A and Ahat growth equivalence") {
  auto pole = AnalyticFunction::pole_power(1.0);
  // alpha = 0: the two means coincide.
  auto rep = verify_mean_equivalence(pole, 2.0, 0.0);
  CHECK(rep.all_satisfied);
  CHECK(rep.margins.front().lhs < 1e-12);
  // alpha = -0.5 and alpha = 1 (dilation chain engaged).
  CHECK(verify_mean_equivalence(pole, 2.0, -0.5).all_satisfied);
  auto rep2 = verify_mean_equivalence(pole, 2.0, 1.0);
  CHECK(rep2.all_satisfied);
  bool has_chain = false;
  for (const auto& m : rep2.margins) has_chain = has_chain || m.label == "growth chain";
  CHECK(has_chain);
}

TEST_CASE("derivative transfer") {
  auto radii = default_radii();
  // Monomials: closed-form norms on both sides.
  for (int n : {2, 5}) {
    auto f = AnalyticFunction::monomial(n);
    CHECK(verify_derivative_transfer(f, 2.0, 0.0, radii, DerivativeDirection::Integrate)
              .all_satisfied);
    CHECK(verify_derivative_transfer(f, 2.0, 0.5, radii, DerivativeDirection::Differentiate)
              .all_satisfied);
  }
  // Constants: lhs identically zero in the integrate direction.
  auto c = AnalyticFunction::constant(5.0);
  auto repc = verify_derivative_transfer(c, 2.0, 0.0, radii, DerivativeDirection::Integrate);
  CHECK(repc.all_satisfied);

  // (1-z)^{-1/2}: slope(f') is about slope(f) - 1 in the circle means and
  // obeys the one-order bound in the area means.
  auto pole = AnalyticFunction::pole_power(0.5);
  auto repi = verify_derivative_transfer(pole, 2.0, 0.0, radii, DerivativeDirection::Integrate);
  CHECK(repi.all_satisfied);
  auto repd =
      verify_derivative_transfer(pole, 2.0, 0.0, radii, DerivativeDirection::Differentiate);
  CHECK(repd.all_satisfied);
}

TEST_CASE("smoothness to growth") {
  auto grid = default_t_grid();
  // f = z: the second difference is 2(cos t - 1) z and f'' = 0.
  auto z = AnalyticFunction::monomial(1);
  double B = lambda_star_seminorm(z, 2.0, 0.0, 1.0, grid).constant_estimate * 1.0000001;
  auto rep = verify_lip_to_growth(z, 2.0, 0.0, 1.0, B);
  CHECK(rep.all_satisfied);

  // Truncated (1-z)^{-1/2} at p = 2, alpha = 0: measured exponent ~ 1/2,
  // explicit branch engaged.
  auto f = truncate(AnalyticFunction::pole_power(0.5), 256);
  double beta = 0.5;
  double Bf = lambda_star_seminorm(f, 2.0, 0.0, beta, grid).constant_estimate;
  auto rep2 = verify_lip_to_growth(f, 2.0, 0.0, beta, Bf);
  CHECK(rep2.all_satisfied);
  bool has_explicit = false;
  for (const auto& m : rep2.margins)
    has_explicit = has_explicit || m.label == "explicit 382.5 branch +o";
  CHECK(has_explicit);

  // Random polynomial at beta = 2: bounded f'' means.
  auto rp = random_polynomial(8, 1.0, 17);
  double Bp = lambda_star_seminorm(rp, 2.0, 0.0, 2.0, grid).constant_estimate;
  CHECK(verify_lip_to_growth(rp, 2.0, 0.0, 2.0, Bp).all_satisfied);
}

TEST_CASE("growth to smoothness") {
  auto grid = default_t_grid();
  auto hyp = hypothesis_grid();
  // f = z^2: f'' = 2, B from the ladder; closed forms on both sides.
  auto f = AnalyticFunction::monomial(2);
  double beta = 2.0;
  double B = least_hypothesis_constant(
      [&](double r) { return mean(MeanKind::AreaAHat, derivative(derivative(f)), 2.0, 0.0, r); },
      [beta](double r) { return std::pow(1.0 - r, beta - 2.0); }, hyp);
  CHECK(B == Approx(2.0).epsilon(1e-9));
  auto rep = verify_growth_to_lip(f, 2.0, 0.0, beta, B);
  CHECK(rep.all_satisfied);

  // Constants: zero against a nonnegative bound.
  CHECK(verify_growth_to_lip(AnalyticFunction::constant(3.0), 2.0, 0.0, 1.0, 0.0).all_satisfied);

  // A power series with second-difference exponent 3/2: a_n = n^{-3/2}.
  auto s = AnalyticFunction::custom(
      [](int n) { return n == 0 ? cplx(0.0) : cplx(std::pow(double(n), -1.5)); }, 256, "n^-3/2");
  auto sf = truncate(s, 256);
  double beta2 = 1.5;
  double B2 = least_hypothesis_constant(
      [&](double r) { return mean(MeanKind::AreaAHat, derivative(derivative(sf)), 2.0, 0.0, r); },
      [beta2](double r) { return std::pow(1.0 - r, beta2 - 2.0); }, hyp);
  CHECK(verify_growth_to_lip(sf, 2.0, 0.0, beta2, B2).all_satisfied);

  // Truncated (1-z)^{-1/2} at its measured exponent 1/2.
  auto g = truncate(AnalyticFunction::pole_power(0.5), 256);
  double beta3 = 0.5;
  double B3 = least_hypothesis_constant(
      [&](double r) { return mean(MeanKind::AreaAHat, derivative(derivative(g)), 2.0, 0.0, r); },
      [beta3](double r) { return std::pow(1.0 - r, beta3 - 2.0); }, hyp);
  CHECK(verify_growth_to_lip(g, 2.0, 0.0, beta3, B3).all_satisfied);
}

TEST_CASE("hardy vs bergman holder classes") {
  // Monomials: degenerate, Zygmund-regular in both scales.
  auto rep = verify_hardy_bergman_holder(AnalyticFunction::monomial(3), 2.0, 0.0);
  CHECK(rep.all_satisfied);
  CHECK(rep.margins.front().label.find("degenerate") != std::string::npos);

  // Truncated (1-z)^{-1/4}: Bergman exponent 3/4, Hardy exponent 1/4.
  // The exponent transients decay like sqrt(t), so the truncation must be
  // deep enough for the fit window to sit in the asymptotic regime.
  auto f = truncate(AnalyticFunction::pole_power(0.25), 4096);
  CHECK(verify_hardy_bergman_holder(f, 2.0, 0.0).all_satisfied);
  // Same function at alpha = -0.5: shift 1/4.
  CHECK(verify_hardy_bergman_holder(f, 2.0, -0.5).all_satisfied);
}
