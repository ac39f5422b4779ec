#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "berglab/analytic.hpp"
#include "berglab/quadrature.hpp"
#include "berglab/special.hpp"

using namespace berglab;
using Catch::Approx;

namespace {
// Test-side Beta moment: int_0^1 u^k (1-u)^alpha du.
double beta_moment(double k, double alpha) {
  return std::exp(std::lgamma(k + 1.0) + std::lgamma(alpha + 1.0) -
                  std::lgamma(k + alpha + 2.0));
}
}  // namespace

TEST_CASE("radial rule mass and moments") {
  CHECK_THROWS_AS(build_rule(-1.0, 16, 64), parameter_error);
  CHECK_THROWS_AS(build_rule(0.0, 16, 3), parameter_error);

  auto r0 = build_rule(0.0, 16, 64);
  double mass0 = 0.0;
  for (double w : r0.w) mass0 += w;
  CHECK(mass0 == Approx(1.0).epsilon(1e-13));

  auto rh = build_rule(0.5, 16, 64);
  double massh = 0.0;
  for (double w : rh.w) massh += w;
  CHECK(massh == Approx(1.0 / 1.5).epsilon(1e-13));

  // Beta(2, 1/2): int u (1-u)^{-1/2} du = 4/3.
  auto rj = build_rule(-0.5, 32, 64);
  double m1 = 0.0;
  for (int j = 0; j < rj.radial(); ++j) m1 += rj.w[j] * rj.u[j];
  CHECK(m1 == Approx(4.0 / 3.0).epsilon(1e-13));

  // Exactness through degree 2n-1 for several alphas.
  for (double alpha : {-0.7, -0.5, 0.0, 0.5, 1.0, 2.5}) {
    const RadialRule& rule = radial_rule(alpha, 12);
    for (int k : {0, 1, 5, 11, 23}) {
      double mk = 0.0;
      for (int j = 0; j < rule.size(); ++j) mk += rule.w[j] * std::pow(rule.u[j], k);
      CHECK(mk == Approx(beta_moment(k, alpha)).epsilon(1e-12));
    }
  }
}

TEST_CASE("disc integrals") {
  for (double alpha : {-0.5, 0.0, 0.7}) {
    auto rule = build_rule(alpha, 24, 64);
    CHECK(integrate_disc(rule, [](cplx) { return 1.0; }) == Approx(1.0).epsilon(1e-13));
  }
  auto rule = build_rule(0.0, 24, 64);
  CHECK(integrate_disc(rule, [](cplx z) { return std::norm(z); }) ==
        Approx(0.5).epsilon(1e-13));
  // |z| has a sqrt-type radial kink at the origin; certify by refinement.
  CHECK(adaptive_integrate([](cplx z) { return std::abs(z); }, 0.0, 1e-9).value ==
        Approx(2.0 / 3.0).epsilon(5e-9));
}

TEST_CASE("circle averages") {
  for (int n : {0, 1, 3}) {
    for (double r : {0.2, 0.8}) {
      double got = integrate_circle([n](cplx z) { return std::abs(std::pow(z, n)); }, r, 64);
      CHECK(got == Approx(std::pow(r, n)).epsilon(1e-13));
    }
  }
  CHECK(integrate_circle([](cplx z) { return 1.0 / std::norm(1.0 - 0.5 * (z / std::abs(z))); },
                         0.5, 4096) == Approx(4.0 / 3.0).epsilon(1e-10));
  // |1 - r e^{i t}|^{-2} mean via z on the circle directly.
  CHECK(integrate_circle([](cplx z) { return 1.0 / std::norm(cplx(1.0) - z); }, 0.5, 4096) ==
        Approx(4.0 / 3.0).epsilon(1e-10));
  double r = 0.999;
  CHECK(integrate_circle([](cplx z) { return std::norm(cplx(1.0) + z); }, r, 64) ==
        Approx(1.0 + r * r).epsilon(1e-12));
}

TEST_CASE("rotation invariance of disc integrals") {
  auto f = random_polynomial(8, 1.0, 7);
  auto rule = build_rule(-0.5, 64, 256);
  for (double t : {0.37, 1.9, 4.4}) {
    auto g = rotate(f, t);
    double a = integrate_disc(rule, [&](cplx z) { return std::norm(f.eval_at(z)); });
    double b = integrate_disc(rule, [&](cplx z) { return std::norm(g.eval_at(z)); });
    CHECK(b == Approx(a).epsilon(1e-10));
  }
}

TEST_CASE("adaptive integration") {
  auto res = adaptive_integrate([](cplx) { return 1.0; }, 0.0, 1e-10);
  CHECK(res.value == Approx(1.0).epsilon(1e-12));
  CHECK(res.error_estimate <= 1e-10);

  // |(1-z)^{-0.4}|^2 against the coefficient-series oracle
  // sum a_n^2/(n+1), a_n the Taylor coefficients of (1-z)^{-0.4}.
  double oracle = 0.0;
  {
    double a = 1.0, gamma = 0.4;
    long N = 2000000;
    for (long n = 0; n <= N; ++n) {
      oracle += a * a / (n + 1.0);
      a *= (gamma + n) / (n + 1.0);
    }
    // Integral tail of the asymptotic a_n ~ n^{gamma-1}/Gamma(gamma).
    double c = 1.0 / std::tgamma(gamma);
    oracle += c * c * std::pow(double(N), 2.0 * gamma - 2.0) / (2.0 - 2.0 * gamma);
  }
  auto res2 = adaptive_integrate(
      [](cplx z) { return std::pow(std::abs(cplx(1.0) - z), -0.8); }, 0.0, 1e-8);
  CHECK(res2.value == Approx(oracle).epsilon(2e-8));

  // Non-integrable: |(1-z)^{-1}|^2.
  CHECK_THROWS_AS(
      adaptive_integrate([](cplx z) { return 1.0 / std::norm(cplx(1.0) - z); }, 0.0, 1e-8),
      tolerance_not_met);

  CHECK_THROWS_AS(adaptive_integrate([](cplx) { return 1.0; }, 0.0, 1e-13), parameter_error);
}

TEST_CASE("monomial norms against the Gamma closed form (sample)") {
  // The full sweep is in the acceptance suite; spot checks here.
  for (double alpha : {-0.5, 0.0, 1.0}) {
    auto rule = build_rule(alpha, 40, 128);
    for (int n : {0, 1, 4}) {
      for (double p : {2.0, 4.0}) {
        double got = integrate_disc(rule, [&](cplx z) { return std::pow(std::abs(z), n * p); });
        CHECK(got == Approx(monomial_norm_pow(n, p, alpha)).epsilon(1e-12));
      }
    }
  }
}
