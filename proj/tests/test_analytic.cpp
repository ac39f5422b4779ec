#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "berglab/analytic.hpp"
#include "berglab/special.hpp"

using namespace berglab;
using Catch::Approx;

namespace {
double dist(cplx a, cplx b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("evaluation") {
  CHECK(AnalyticFunction::monomial(3).eval_at(0.5) == cplx(0.125));
  CHECK(AnalyticFunction::pole_power(1.0).eval_at(0.0) == cplx(1.0));
  auto f = AnalyticFunction::polynomial({1.0, 2.0, 1.0});
  CHECK(dist(f.eval_at(cplx(0.0, 0.5)), cplx(0.75, 1.0)) < 1e-15);

  CHECK_THROWS_AS(AnalyticFunction::pole_power(0.5).eval_at(cplx(1.0)), domain_error);
  CHECK_THROWS_AS(AnalyticFunction::pole_power(0.5).eval_at(cplx(0.8, 0.7)), domain_error);
  // Polynomials extend to the closed disc.
  CHECK(dist(f.eval_at(cplx(1.0)), cplx(4.0)) < 1e-15);
  CHECK_THROWS_AS(f.eval_at(cplx(1.5)), domain_error);
  CHECK_THROWS_AS(AnalyticFunction::pole_power(0.0), parameter_error);
}

TEST_CASE("rotation") {
  auto m1 = rotate(AnalyticFunction::monomial(1), pi);
  CHECK(dist(m1.coeff(1), cplx(-1.0)) < 1e-15);

  auto c = rotate(AnalyticFunction::polynomial({cplx(2.5, -1.0)}), 1.234);
  CHECK(dist(c.coeff(0), cplx(2.5, -1.0)) < 1e-15);

  auto f = rotate(AnalyticFunction::polynomial({0.0, 1.0, 1.0}), 0.5 * pi);
  CHECK(dist(f.coeff(0), 0.0) < 1e-15);
  CHECK(dist(f.coeff(1), cplx(0.0, 1.0)) < 1e-15);
  CHECK(dist(f.coeff(2), cplx(-1.0, 0.0)) < 1e-15);

  // rotate(rotate(f,s),t) = rotate(f,s+t) on coefficients.
  auto g = random_polynomial(8, 1.0, 3);
  auto lhs = rotate(rotate(g, 0.7), 1.1);
  auto rhs = rotate(g, 1.8);
  for (int n = 0; n <= 8; ++n) CHECK(dist(lhs.coeff(n), rhs.coeff(n)) < 1e-14);

  // Rotated closed form keeps an exact evaluator.
  auto pp = rotate(AnalyticFunction::pole_power(0.5), 0.9);
  cplx z(0.3, -0.2);
  cplx expect = std::pow(cplx(1.0) - std::polar(1.0, 0.9) * z, -0.5);
  CHECK(dist(pp.eval_at(z), expect) < 1e-14);
}

TEST_CASE("second difference") {
  auto zero = second_difference(AnalyticFunction::constant(cplx(3.0, 1.0)), 0.77);
  CHECK(zero.is_zero());

  double t = 0.6;
  auto d1 = second_difference(AnalyticFunction::monomial(1), t);
  CHECK(dist(d1.coeff(1), 2.0 * (std::cos(t) - 1.0)) < 1e-15);

  auto d2 = second_difference(AnalyticFunction::polynomial({0.0, 0.0, 1.0}), 0.5 * pi);
  CHECK(dist(d2.coeff(2), -4.0) < 1e-14);

  // Coefficient action agrees pointwise with rotations on a disc sample.
  auto f = random_polynomial(10, 1.5, 11);
  auto d = second_difference(f, 0.31);
  auto r1 = rotate(f, 0.31), r2 = rotate(f, -0.31);
  for (int i = 0; i < 100; ++i) {
    double rho = 0.97 * (i + 1) / 100.0;
    cplx z = std::polar(rho, 0.063 * i);
    cplx direct = r1.eval_at(z) + r2.eval_at(z) - 2.0 * f.eval_at(z);
    CHECK(dist(d.eval_at(z), direct) <= 1e-12);
  }
}

TEST_CASE("derivative, antiderivative, dilation") {
  auto d = derivative(AnalyticFunction::polynomial({5.0, 0.0, 3.0}));
  CHECK(d.degree() == 1);
  CHECK(dist(d.coeff(0), 0.0) < 1e-15);
  CHECK(dist(d.coeff(1), 6.0) < 1e-15);

  auto a = antiderivative(AnalyticFunction::polynomial({1.0}), 0.0);
  CHECK(dist(a.coeff(0), 0.0) < 1e-15);
  CHECK(dist(a.coeff(1), 1.0) < 1e-15);

  auto m = dilate(AnalyticFunction::monomial(2), 0.5);
  CHECK(dist(m.coeff(2), 0.25) < 1e-15);

  CHECK_THROWS_AS(antiderivative(AnalyticFunction::pole_power(0.5), 0.0),
                  unsupported_representation);

  // derivative(dilate(f,s)) = s * dilate(derivative(f), s)
  auto f = random_polynomial(7, 1.0, 5);
  double s = 0.63;
  auto lhs = derivative(dilate(f, s));
  auto rhs = dilate(derivative(f), s);
  for (int n = 0; n <= 6; ++n) CHECK(dist(lhs.coeff(n), s * rhs.coeff(n)) < 1e-14);

  // derivative of antiderivative is the identity.
  auto back = derivative(antiderivative(f, cplx(2.0, 1.0)));
  for (int n = 0; n <= 7; ++n) CHECK(dist(back.coeff(n), f.coeff(n)) < 1e-14);

  // dilate(f, 1) = f; dilate(f, 0) = f(0).
  auto one = dilate(f, 1.0);
  for (int n = 0; n <= 7; ++n) CHECK(dist(one.coeff(n), f.coeff(n)) == 0.0);
  auto zerod = dilate(f, 0.0);
  CHECK(dist(zerod.eval_at(0.77), f.coeff(0)) < 1e-15);

  // Pole powers differentiate in closed form.
  auto pd = derivative(AnalyticFunction::pole_power(0.75));
  CHECK(pd.kind() == FunctionKind::PolePower);
  CHECK(pd.pole_gamma() == Approx(1.75));
  CHECK(dist(pd.eval_at(0.5), 0.75 * std::pow(0.5, -1.75)) < 1e-14);
}

TEST_CASE("test function constructors") {
  CHECK(AnalyticFunction::monomial(0).eval_at(0.3) == cplx(1.0));

  auto geo = truncate(AnalyticFunction::pole_power(1.0), 4);
  for (int n = 0; n <= 4; ++n) CHECK(dist(geo.coeff(n), 1.0) < 1e-15);
  CHECK(geo.degree() == 4);

  // Same seed, same stream.
  auto p1 = random_polynomial(8, 2.0, 42);
  auto p2 = random_polynomial(8, 2.0, 42);
  for (int n = 0; n <= 8; ++n) CHECK(dist(p1.coeff(n), p2.coeff(n)) == 0.0);
  auto p3 = random_polynomial(8, 2.0, 43);
  bool same = true;
  for (int n = 0; n <= 8; ++n) same = same && dist(p1.coeff(n), p3.coeff(n)) == 0.0;
  CHECK_FALSE(same);

  CHECK_THROWS_AS(random_polynomial(-1, 2.0, 1), parameter_error);

  // Exponential coefficients are 1/n!.
  auto e = AnalyticFunction::exponential();
  CHECK(dist(e.coeff(4), 1.0 / 24.0) < 1e-16);
  CHECK(dist(e.eval_at(0.5), std::exp(0.5)) < 1e-15);
}

TEST_CASE("golden random polynomial (seed 42)") {
  // Frozen from the fixed splitmix64 stream; guards the seeded generator
  // against accidental reordering of draws.
  auto p = random_polynomial(8, 2.0, 42);
  CHECK(p.coeff(0).real() == Approx(0.48312975754364662).epsilon(1e-15));
  CHECK(p.coeff(0).imag() == Approx(-0.68017921424615979).epsilon(1e-15));
  CHECK(p.coeff(8).real() == Approx(-0.01238830513502279).epsilon(1e-15));
  CHECK(p.coeff(8).imag() == Approx(-0.00014066693283614276).epsilon(1e-15));
}
