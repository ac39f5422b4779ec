#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "berglab/extremal.hpp"

using namespace berglab;
using Catch::Approx;

namespace {
ExtremalProblem make_problem(AnalyticFunction k, double p, double alpha, int N,
                             double tol = 1e-8) {
  ExtremalProblem prob;
  prob.k = std::move(k);
  prob.p = p;
  prob.alpha = alpha;
  prob.degree = N;
  prob.tol = tol;
  return prob;
}
}  // namespace

TEST_CASE("p = 2 solution is the normalized truncation") {
  auto k = random_polynomial(6, 1.0, 21);
  auto sol = solve_extremal(make_problem(k, 2.0, 0.5, 12));
  CHECK(sol.converged);
  double nk = bergman_norm(k, 2.0, 0.5);
  for (int j = 0; j <= 6; ++j)
    CHECK(std::abs(sol.F.coeff(j) - k.coeff(j) / nk) < 1e-9);
  CHECK(sol.value == Approx(nk).epsilon(1e-9));
  CHECK(bergman_norm(sol.F, 2.0, 0.5) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("constant kernel gives the constant solution") {
  auto sol = solve_extremal(make_problem(AnalyticFunction::constant(1.0), 3.0, 0.0, 8));
  CHECK(sol.converged);
  CHECK(sol.value == Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(sol.F.coeff(0) - cplx(1.0)) < 1e-7);
  for (int j = 1; j <= 8; ++j) CHECK(std::abs(sol.F.coeff(j)) < 1e-7);
}

TEST_CASE("monomial kernels solve to normalized monomials") {
  for (double p : {4.0 / 3.0, 3.0, 4.0}) {
    for (int m : {1, 2, 4}) {
      for (double alpha : {0.0, 0.6}) {
        auto sol = solve_extremal(make_problem(AnalyticFunction::monomial(m), p, alpha, 8));
        CHECK(sol.converged);
        CHECK(sol.stationarity_residual <= 1e-8);
        double nm = monomial_norm(m, p, alpha);
        CHECK(std::abs(sol.F.coeff(m) - cplx(1.0 / nm)) < 1e-7);
        for (int j = 0; j <= 8; ++j)
          if (j != m) CHECK(std::abs(sol.F.coeff(j)) < 1e-7);
        // attained value <F, k> = ||z^m||^2_{A^2} / ||z^m||_{A^p}
        CHECK(sol.value == Approx(bergman_moment(m, alpha) / nm).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("stationarity residual flags wrong candidates") {
  // F = z^2/||z^2|| is stationary for k = z^2 but not for k = z.
  double n2 = monomial_norm(2, 4.0, 0.0);
  auto F = AnalyticFunction::monomial(2, 1.0 / n2);
  CHECK(stationarity_residual(F, AnalyticFunction::monomial(2), 4.0, 0.0, 8) < 1e-10);
  CHECK(stationarity_residual(F, AnalyticFunction::monomial(1), 4.0, 0.0, 8) >= 0.1);
}

TEST_CASE("ascent is monotone and converges on a mixed kernel") {
  auto k = AnalyticFunction::polynomial({0.3, 1.0, cplx(0.0, 0.5), 0.8});
  for (double p : {4.0 / 3.0, 3.0}) {
    auto sol = solve_extremal(make_problem(k, p, 0.0, 12, 1e-9));
    CHECK(sol.converged);
    CHECK(sol.stationarity_residual <= 1e-9);
    for (std::size_t i = 1; i < sol.trace.size(); ++i)
      CHECK(sol.trace[i].value >= sol.trace[i - 1].value * (1.0 - 1e-12));
    CHECK(bergman_norm(sol.F, p, 0.0, 1e-9) == Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("rotation equivariance and scaling invariance") {
  auto k = AnalyticFunction::polynomial({0.5, 1.0, cplx(0.2, -0.4), 0.0, 0.9});
  double p = 3.0, alpha = 0.0;
  auto base = solve_extremal(make_problem(k, p, alpha, 10, 1e-10));
  REQUIRE(base.converged);
  double t = 0.73;
  auto rot = solve_extremal(make_problem(rotate(k, t), p, alpha, 10, 1e-10));
  REQUIRE(rot.converged);
  auto expect = rotate(base.F, t);
  for (int j = 0; j <= 10; ++j)
    CHECK(std::abs(rot.F.coeff(j) - expect.coeff(j)) < 1e-7);

  auto scaled = solve_extremal(make_problem(
      AnalyticFunction::polynomial({cplx(1.5) * k.coeff(0), cplx(1.5) * k.coeff(1),
                                    cplx(1.5) * k.coeff(2), 0.0, cplx(1.5) * k.coeff(4)}),
      p, alpha, 10, 1e-10));
  for (int j = 0; j <= 10; ++j)
    CHECK(std::abs(scaled.F.coeff(j) - base.F.coeff(j)) < 1e-8);
  CHECK(scaled.value == Approx(1.5 * base.value).epsilon(1e-9));
}

TEST_CASE("value dominates random competitors") {
  auto k = AnalyticFunction::polynomial({0.2, 0.7, cplx(-0.1, 0.3), 0.5});
  double p = 4.0, alpha = 0.5;
  int N = 8;
  auto sol = solve_extremal(make_problem(k, p, alpha, N));
  REQUIRE(sol.converged);
  auto c = [&] {
    std::vector<cplx> out(N + 1);
    for (int j = 0; j <= N; ++j) out[j] = std::conj(k.coeff(j)) * bergman_moment(j, alpha);
    return out;
  }();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = random_polynomial(N, 0.5, seed);
    double ng = bergman_norm(g, p, alpha);
    double pairing = 0.0;
    for (int j = 0; j <= N; ++j) pairing += (g.coeff(j) / ng * c[j]).real();
    CHECK(pairing <= sol.value * (1.0 + 1e-9));
  }
}

TEST_CASE("degree stability for polynomial kernels") {
  auto k = AnalyticFunction::polynomial({0.3, 1.0, 0.0, cplx(0.4, 0.2)});
  auto lo = solve_extremal(make_problem(k, 3.0, 0.0, 19, 1e-10));
  auto hi = solve_extremal(make_problem(k, 3.0, 0.0, 35, 1e-10));
  REQUIRE(lo.converged);
  REQUIRE(hi.converged);
  CHECK(std::abs(lo.value - hi.value) < 1e-6);
}

TEST_CASE("uniform convexity inequalities") {
  // Endpoint sanity: g = f and g = -f.
  auto f0 = random_polynomial(5, 1.0, 31);
  CHECK(clarkson_check(f0, f0, 2.0, 0.0));
  CHECK(clarkson_check(f0, detail::poly_lincomb(f0, -1.0, f0, 0.0), 3.0, 0.0));
  CHECK(bcl_check(f0, f0, 1.5, 0.0));
  CHECK(bcl_check(f0, detail::poly_lincomb(f0, -1.0, f0, 0.0), 1.5, 0.0));
  // Seeded sample; the full 200-pair battery runs in the acceptance suite.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto f = random_polynomial(5, 1.0, 2 * seed);
    auto g = random_polynomial(5, 1.0, 2 * seed + 1);
    CHECK(clarkson_check(f, g, 2.0, 0.5));
    CHECK(clarkson_check(f, g, 3.0, 0.0));
    CHECK(bcl_check(f, g, 1.5, 0.0));
    CHECK(bcl_check(f, g, 2.0, -0.5));
  }
  CHECK_THROWS_AS(clarkson_check(f0, f0, 1.5, 0.0), parameter_error);
  CHECK_THROWS_AS(bcl_check(f0, f0, 3.0, 0.0), parameter_error);
}

TEST_CASE("extremal regularity bounds (monomial smoke)") {
  // k = z^2: F is the normalized monomial and both profiles are explicit.
  auto grid = default_t_grid();
  auto k = AnalyticFunction::monomial(2);
  double p = 3.0, alpha = 0.0, q = 1.5;
  // Hypothesis constant for the rescaled kernel at beta = 2.
  ExtremalProblem prob = make_problem(k, p, alpha, 8);
  auto sol = solve_extremal(prob);
  REQUIRE(sol.converged);
  double B = 0.0;
  for (double t : grid) {
    double v = 2.0 * (1.0 - std::cos(2.0 * t)) * monomial_norm(2, q, alpha) / sol.value;
    B = std::max(B, v / (t * t));
  }
  auto rep = verify_ext_regularity(k, p, alpha, 2.0, B, grid, 8);
  CHECK(rep.all_satisfied);
}

TEST_CASE("pext integrability (k = z smoke)") {
  auto rep = verify_pext(AnalyticFunction::monomial(1), 3.0, 6);
  CHECK(rep.all_satisfied);
}

TEST_CASE("boundary holder (polynomial kernel)") {
  auto k = AnalyticFunction::polynomial({0.0, 1.0, 0.0, 1.0});
  auto rep = verify_boundary_holder(k, 3.0, -0.5, 10);
  CHECK(rep.all_satisfied);
  CHECK_THROWS_AS(verify_boundary_holder(k, 3.0, 0.5, 10), parameter_error);
}
