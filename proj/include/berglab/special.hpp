// berglab: special functions and closed-form constants (Gauss 2F1, Gamma
// ratios, kernel means on circles, and the explicit constants used by the
// growth and smoothness bounds).
#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "berglab/errors.hpp"

namespace berglab {

inline constexpr double pi = 3.14159265358979323846;

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("log_gamma: argument must be positive");
  return std::lgamma(x);
}

/// Gamma(x) for non-pole real x, as (log|Gamma|, sign).
inline std::pair<double, int> signed_log_gamma(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};
  if (x == std::floor(x)) throw domain_error("signed_log_gamma: pole at non-positive integer");
  // Reflection sign: Gamma is negative on (-1,0), positive on (-2,-1), ...
  int sign = (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
  return {std::lgamma(x), sign};
}

/// Gamma(a)/Gamma(b) for positive a, b, overflow-safe.
inline double gamma_ratio(double a, double b) {
  return std::exp(log_gamma(a) - log_gamma(b));
}

namespace detail {

inline bool is_nonpositive_integer(double x, double tol = 1e-12) {
  return x <= tol && std::abs(x - std::round(x)) < tol;
}

/// Plain power-series summation of 2F1; valid for |x| < 1, and for x in [0,1]
/// when c-a-b > 0. Terminates early when a or b is a non-positive integer.
inline double hyp2f1_series(double a, double b, double c, double x, long max_terms) {
  double term = 1.0, sum = 1.0;
  for (long n = 0; n < max_terms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    sum += term;
    if (term == 0.0) return sum;  // terminating (polynomial) case
    if (std::abs(term) < 1e-15 * std::abs(sum) && n > 4) return sum;
  }
  throw tolerance_not_met("hyp2f1_series: no convergence within term budget", sum,
                          std::abs(term));
}

}  // namespace detail

/// 2F1(a, b; c; 1) by the Gauss summation formula; requires c-a-b > 0 and
/// c, c-a, c-b away from poles.
inline double gauss_2f1_at_one(double a, double b, double c) {
  double cab = c - a - b;
  if (!(cab > 0.0)) throw domain_error("gauss_2f1_at_one: requires c-a-b > 0");
  auto [l1, s1] = signed_log_gamma(c);
  auto [l2, s2] = signed_log_gamma(cab);
  auto [l3, s3] = signed_log_gamma(c - a);
  auto [l4, s4] = signed_log_gamma(c - b);
  return s1 * s2 * s3 * s4 * std::exp(l1 + l2 - l3 - l4);
}

/// Gauss hypergeometric function 2F1(a, b; c; x) for real parameters and
/// x in [0, 1).  Direct series for small x; the linear x -> 1-x connection
/// formula when x is close to 1 and c-a-b is not an integer.  When c-a-b is
/// a positive integer the series still converges on [0,1) and is summed
/// directly with an enlarged term budget; other near-1 parameter regimes are
/// rejected rather than extrapolated.
inline double gauss_2f1(double a, double b, double c, double x) {
  if (detail::is_nonpositive_integer(c))
    throw domain_error("gauss_2f1: c must not be a non-positive integer");
  if (!(x >= 0.0 && x < 1.0)) throw domain_error("gauss_2f1: x must lie in [0,1)");
  if (x == 0.0) return 1.0;
  // Terminating series is exact regardless of x.
  if (detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b))
    return detail::hyp2f1_series(a, b, c, x, 200000);
  if (x <= 0.7) return detail::hyp2f1_series(a, b, c, x, 200000);

  double cab = c - a - b;
  double nearest = std::round(cab);
  if (std::abs(cab - nearest) > 1e-6) {
    // Connection formula in terms of 1-x.
    double y = 1.0 - x;
    auto [lc, sc] = signed_log_gamma(c);
    auto [l1, s1] = signed_log_gamma(cab);
    auto [l2, s2] = signed_log_gamma(c - a);
    auto [l3, s3] = signed_log_gamma(c - b);
    auto [l4, s4] = signed_log_gamma(-cab);
    auto [l5, s5] = signed_log_gamma(a);
    auto [l6, s6] = signed_log_gamma(b);
    double coef1 = sc * s1 * s2 * s3 * std::exp(lc + l1 - l2 - l3);
    double coef2 = sc * s4 * s5 * s6 * std::exp(lc + l4 - l5 - l6);
    double f1 = detail::hyp2f1_series(a, b, a + b - c + 1.0, y, 200000);
    double f2 = detail::hyp2f1_series(c - a, c - b, cab + 1.0, y, 200000);
    return coef1 * f1 + coef2 * std::pow(y, cab) * f2;
  }
  if (cab > 0.05) {
    // Convergent on [0,1); terms decay like n^{-1-cab} x^n.
    return detail::hyp2f1_series(a, b, c, x, 4000000);
  }
  throw domain_error("gauss_2f1: unsupported parameters near x = 1 (integer c-a-b <= 0)");
}

/// The constant C1(s, m, k) bounding
///   int_0^1 (1-y)^{-s} (1-xy)^{-m} y^k dy  <=  C1 * (1-x)^{1-s-m}
/// for s < 1, m+s > 1, k > -1.  Closed Gamma form when 2+k > s+m; otherwise
/// the prefactor times the maximum of 2F1(2+k-s-m, 1-s; 2+k-s; .) over [0,1],
/// located on a grid with local refinement.
inline double c1_constant(double s, double m, double k) {
  if (!(s < 1.0)) throw domain_error("c1_constant: requires s < 1");
  if (!(m + s > 1.0)) throw domain_error("c1_constant: requires m + s > 1");
  if (!(k > -1.0)) throw domain_error("c1_constant: requires k > -1");
  if (2.0 + k > s + m && 2.0 + k > s)
    return std::exp(log_gamma(s + m - 1.0) + log_gamma(1.0 - s) - log_gamma(m));

  const double a = 2.0 + k - s - m, b = 1.0 - s, c = 2.0 + k - s;
  auto value = [&](double x) {
    if (x >= 1.0) return gauss_2f1_at_one(a, b, c);  // c-a-b = m+s-1 > 0
    return gauss_2f1(a, b, c, x);
  };
  double best_x = 0.0, best = value(0.0);
  for (int i = 1; i <= 1000; ++i) {
    double x = i / 1000.0;
    double v = value(x);
    if (v > best) { best = v; best_x = x; }
  }
  // Local refinement around the grid argmax.
  double lo = std::max(0.0, best_x - 1e-3), hi = std::min(1.0, best_x + 1e-3);
  for (int it = 0; it < 40; ++it) {
    double x1 = lo + (hi - lo) / 3.0, x2 = hi - (hi - lo) / 3.0;
    if (value(x1) < value(x2)) lo = x1; else hi = x2;
  }
  best = std::max(best, value(0.5 * (lo + hi)));
  return std::exp(log_gamma(k + 1.0) + log_gamma(1.0 - s) - log_gamma(2.0 + k - s)) * best;
}

/// (1/2pi) int_0^{2pi} |1 - r e^{i theta}|^{-p} d theta for p > 1, 0 <= r < 1,
/// via (1-r^2)^{1-p} 2F1(1-p/2, 1-p/2; 1; r^2).
inline double circle_kernel_mean(double p, double r) {
  if (!(p > 1.0)) throw domain_error("circle_kernel_mean: requires p > 1");
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("circle_kernel_mean: requires 0 <= r < 1");
  double a = 1.0 - 0.5 * p;
  return std::pow(1.0 - r * r, 1.0 - p) * gauss_2f1(a, a, 1.0, r * r);
}

/// Upper bound Gamma(p-1)/Gamma(p/2)^2 * (1-r^2)^{1-p} for the same mean.
inline double circle_kernel_mean_bound(double p, double r) {
  if (!(p > 1.0)) throw domain_error("circle_kernel_mean_bound: requires p > 1");
  return std::exp(log_gamma(p - 1.0) - 2.0 * log_gamma(0.5 * p)) *
         std::pow(1.0 - r * r, 1.0 - p);
}

/// C3(rho) = (3 pi^6 + 3 pi^4 rho + 8 pi^2 rho^2 + 24 rho^3) / (24 pi rho^3),
/// rho in (0, 1].
inline double c3_constant(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw domain_error("c3_constant: requires rho in (0,1]");
  double p2 = pi * pi, p4 = p2 * p2, p6 = p4 * p2;
  return (3.0 * p6 + 3.0 * p4 * rho + 8.0 * p2 * rho * rho + 24.0 * rho * rho * rho) /
         (24.0 * pi * rho * rho * rho);
}

/// ||z^n||^p in the weighted Bergman space with weight exponent alpha:
/// Gamma(alpha+2) Gamma(np/2+1) / Gamma(np/2+alpha+2).
inline double monomial_norm_pow(int n, double p, double alpha) {
  if (n < 0) throw parameter_error("monomial_norm_pow: requires n >= 0");
  if (!(p > 0.0)) throw parameter_error("monomial_norm_pow: requires p > 0");
  if (!(alpha > -1.0)) throw parameter_error("monomial_norm_pow: requires alpha > -1");
  double h = 0.5 * n * p;
  return std::exp(log_gamma(alpha + 2.0) + log_gamma(h + 1.0) - log_gamma(h + alpha + 2.0));
}

/// ||z^n|| itself.
inline double monomial_norm(int n, double p, double alpha) {
  return std::pow(monomial_norm_pow(n, p, alpha), 1.0 / p);
}

/// M_{alpha,p} = ||z||, the norm of the identity function.
inline double m_alpha_p(double alpha, double p) { return monomial_norm(1, p, alpha); }

/// ||z^n||^2 at p = 2; the diagonal moments of the weighted area measure.
inline double bergman_moment(int n, double alpha) { return monomial_norm_pow(n, 2.0, alpha); }

}  // namespace berglab
