// berglab: growth-exponent estimation on radii ladders and numerical
// verifiers for the growth-transfer and smoothness-transfer theorems,
// explicit constants included.
//
// Every verifier first confirms its hypothesis on a dense radius (or t) grid
// and raises hypothesis_violation instead of reporting a vacuous pass.
// Asymptotic-order claims are checked through fitted log-log slopes with a
// 0.05 tolerance; explicit-constant claims use multiplicative slack 1e-9,
// except where an unquantified lower-order term in the bound forces a 1.10
// allowance at r >= 0.99 (those rows carry a "+o" label and the strict
// outcome is recorded in the report notes).
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "berglab/analytic.hpp"
#include "berglab/means.hpp"
#include "berglab/special.hpp"

namespace berglab {

// ---------------------------------------------------------------------------
// Growth fits

struct GrowthReport {
  std::vector<double> radii;
  std::vector<double> values;
  double fitted_slope = 0.0;    // beta in value ~ C (1-r)^beta
  double fit_constant = 0.0;    // C
  double max_rel_residual = 0.0;
  bool log_flag = false;        // a C |log(1-r)|^{1/p} model fits better
};

/// Least-squares power-law fit of (1-r) against the values; the log model is
/// compared at the p-th power, matching the log-growth statements.
inline GrowthReport fit_power_law(const std::vector<double>& radii,
                                  const std::vector<double>& values, double p = 1.0) {
  if (radii.size() != values.size() || radii.size() < 2)
    throw parameter_error("fit_power_law: need matching radii/values, at least two");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0 && radii[i] < 1.0) || (i > 0 && radii[i] <= radii[i - 1]))
      throw parameter_error("fit_power_law: radii must increase strictly within [0,1)");
  }
  GrowthReport rep;
  rep.radii = radii;
  rep.values = values;
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));
  if (vmax < 1e-280) return rep;  // identically zero data: flat fit

  const std::size_t n = values.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::log(1.0 - radii[i]);
    double y = std::log(values[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  rep.fitted_slope = (n * sxy - sx * sy) / denom;
  rep.fit_constant = std::exp((sy - rep.fitted_slope * sx) / n);
  for (std::size_t i = 0; i < n; ++i) {
    double model = rep.fit_constant * std::pow(1.0 - radii[i], rep.fitted_slope);
    rep.max_rel_residual = std::max(rep.max_rel_residual,
                                    std::abs(values[i] - model) / values[i]);
  }
  if (rep.max_rel_residual > 0.02) {
    double slc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      slc += std::log(values[i]) - std::log(std::abs(std::log(1.0 - radii[i]))) / p;
    double c_log = std::exp(slc / n);
    double res_log = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double model = c_log * std::pow(std::abs(std::log(1.0 - radii[i])), 1.0 / p);
      res_log = std::max(res_log, std::abs(values[i] - model) / values[i]);
    }
    rep.log_flag = res_log < rep.max_rel_residual;
  }
  return rep;
}

/// Growth of a chosen mean of f along a radii ladder.
inline GrowthReport fit_growth_exponent(const AnalyticFunction& f, MeanKind kind, double p,
                                        double alpha,
                                        const std::vector<double>& radii = default_radii(),
                                        const MeanOptions& opts = {}) {
  std::vector<double> values;
  values.reserve(radii.size());
  for (double r : radii) values.push_back(mean(kind, f, p, alpha, r, opts));
  return fit_power_law(radii, values, p);
}

// ---------------------------------------------------------------------------
// Theorem reports

struct Margin {
  double point = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = true;
  std::string label;
};

struct TheoremReport {
  std::string theorem_id;
  double hypothesis_constant = 0.0;  // B
  std::vector<Margin> margins;
  bool all_satisfied = true;
  std::vector<std::string> notes;

  void add(double point, double lhs, double rhs, std::string label = "") {
    bool ok = lhs <= rhs * (1.0 + 1e-9) + 1e-12;
    margins.push_back({point, lhs, rhs, ok, std::move(label)});
    all_satisfied = all_satisfied && ok;
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

/// Dense geometric grid in (1-r) on which "for all r" hypotheses are checked.
inline std::vector<double> hypothesis_grid(bool include_small = false) {
  std::vector<double> g;
  if (include_small)
    for (double r : {0.05, 0.1, 0.15, 0.2, 0.25}) g.push_back(r);
  for (int k = 2; k <= 48; ++k) g.push_back(1.0 - std::pow(2.0, -k / 4.0));
  return g;
}

/// Least B making value(r) <= B * model(r) on the grid: the grid maximum of
/// the ratio.  Used to instantiate hypotheses before running a verifier.
inline double least_hypothesis_constant(const std::function<double(double)>& value,
                                        const std::function<double(double)>& model,
                                        const std::vector<double>& grid) {
  double best = 0.0;
  for (double r : grid) {
    double m = model(r);
    if (m > 0.0) best = std::max(best, value(r) / m);
  }
  return best;
}

namespace detail {

inline void require_hypothesis(const std::string& id, double value, double bound, double point) {
  if (value > bound * (1.0 + 1e-9) + 1e-12)
    throw hypothesis_violation(id + ": hypothesis fails at point " + std::to_string(point) +
                               " (value " + std::to_string(value) + " > bound " +
                               std::to_string(bound) + ")");
}

/// Log-log slope of a t-profile.  Exponents are small-t asymptotics, so the
/// fit uses t in [pi/512, pi/16] when enough points land there: larger t is
/// oscillatory for trigonometric-polynomial profiles and the smallest grid
/// points can sit inside the truncation regime of series-backed functions.
inline double t_exponent(const std::vector<double>& t, const std::vector<double>& v) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= pi / 512.0 - 1e-12 && t[i] <= pi / 16.0 + 1e-12) {
      x.push_back(std::log(t[i]));
      y.push_back(std::log(std::max(v[i], 1e-300)));
    }
  }
  if (x.size() < 4) {
    x.clear();
    y.clear();
    for (std::size_t i = 0; i < t.size(); ++i) {
      x.push_back(std::log(t[i]));
      y.push_back(std::log(std::max(v[i], 1e-300)));
    }
  }
  double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Area-mean growth -> circle-mean growth

/// Checks that an area-mean bound A(r,f) <= B (1-r)^beta (or B|log(1-r)| in
/// the log variant; the hat mean may carry the hypothesis when alpha <= 0)
/// forces the stated circle-mean bound.  Hypothesis points live at r; the
/// conclusion is checked at r^2, which is exactly the radius the hypothesis
/// reaches.
inline TheoremReport verify_area_to_hardy(const AnalyticFunction& f, double p, double alpha,
                                          double beta, double B,
                                          const std::vector<double>& radii = default_radii(),
                                          bool use_hat_hypothesis = false,
                                          bool log_hypothesis = false) {
  if (!log_hypothesis && !(beta <= 0.0))
    throw parameter_error("verify_area_to_hardy: requires beta <= 0");
  if (use_hat_hypothesis && alpha > 0.0)
    throw parameter_error("verify_area_to_hardy: hat-mean hypothesis requires alpha <= 0");
  TheoremReport rep;
  rep.theorem_id = "area_to_hardy";
  rep.hypothesis_constant = B;
  MeanKind kind = use_hat_hypothesis ? MeanKind::AreaAHat : MeanKind::AreaA;
  for (double r : hypothesis_grid()) {
    if (log_hypothesis && r < 0.5) continue;  // log model is asymptotic
    double H = mean(kind, f, p, alpha, r);
    double bound = log_hypothesis ? B * std::abs(std::log(1.0 - r))
                                  : B * std::pow(1.0 - r, beta);
    detail::require_hypothesis(rep.theorem_id, H, bound, r);
  }
  double ap = (1.0 + alpha) / p;
  for (double r : radii) {
    double s = r * r;
    double lhs = mean(MeanKind::CircleMp, f, p, alpha, s);
    double sq = std::sqrt(s);
    double denom = alpha >= 0.0
                       ? std::pow(1.0 + sq, ap)
                       : std::pow(1.0 + sq, 1.0 / p) *
                             std::pow(1.0 + sq + s + std::sqrt(s * s * s), alpha / p);
    double rhs;
    if (!log_hypothesis)
      rhs = B / (alpha + 1.0) * std::pow(2.0, -beta + ap) * std::pow(1.0 - s, beta - ap) / denom;
    else
      rhs = B / (alpha + 1.0) * std::pow(2.0, ap) * std::pow(1.0 - s, -ap) *
            (std::abs(std::log(1.0 - s)) + std::log(2.0)) / denom;
    rep.add(s, lhs, rhs);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Circle-mean growth -> area-mean growth (the partial converse)

/// beta < 0: tilde-mean bound with the explicit constant (alpha+1)(-beta p)^{-1/p};
/// beta = 0: the log form at the p-th power; beta > 0: membership in the space.
inline TheoremReport verify_hardy_to_area(const AnalyticFunction& f, double p, double alpha,
                                          double beta, double B,
                                          const std::vector<double>& radii = default_radii()) {
  TheoremReport rep;
  rep.theorem_id = "hardy_to_area";
  rep.hypothesis_constant = B;
  double ap = (1.0 + alpha) / p;
  for (double r : hypothesis_grid(true)) {
    double H = mean(MeanKind::CircleMp, f, p, alpha, r);
    detail::require_hypothesis(rep.theorem_id, H, B * std::pow(1.0 - r * r, beta - ap), r);
  }
  if (beta < 0.0) {
    double c = (alpha + 1.0) * std::pow(-beta * p, -1.0 / p);
    for (double r : radii)
      rep.add(r, mean(MeanKind::AreaATilde, f, p, alpha, r),
              B * c * std::pow(1.0 - r * r, beta));
  } else if (beta == 0.0) {
    for (double r : radii) {
      double at = mean(MeanKind::AreaATilde, f, p, alpha, r);
      rep.add(r, std::pow(at, p),
              std::pow(B, p) * (alpha + 1.0) * std::abs(std::log(1.0 - r * r)),
              "p-th power, log model");
    }
  } else {
    double norm = bergman_norm(f, p, alpha);  // norm_divergent on failure
    rep.add(1.0, norm, norm, "finite norm (beta > 0)");
    rep.note("membership branch: ||f|| = " + std::to_string(norm));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// A vs Ahat growth equivalence

/// Fits both growth exponents and requires agreement within 0.05.  For
/// alpha > 0 additionally walks the dilation chain of the proof: the tilde
/// mean at r^2 against 2^alpha times the hat-tilde mean at r, and the full
/// bound A(r) <= 2^{alpha+1-2beta} C (1-r^2)^beta.
inline TheoremReport verify_mean_equivalence(
    const AnalyticFunction& f, double p, double alpha,
    double beta = std::numeric_limits<double>::quiet_NaN(),
    const std::vector<double>& radii = default_radii()) {
  TheoremReport rep;
  rep.theorem_id = "mean_equivalence";
  // The equivalence is asymptotic; slopes are fitted on the ladder tail so
  // that pre-asymptotic transients (high-degree monomials are still rising
  // at r = 0.9) do not masquerade as slope disagreement.
  std::vector<double> tail;
  for (double r : radii)
    if (r >= 0.99) tail.push_back(r);
  const std::vector<double>& fit_radii = tail.size() >= 4 ? tail : radii;
  GrowthReport ga = fit_growth_exponent(f, MeanKind::AreaA, p, alpha, fit_radii);
  GrowthReport gh = fit_growth_exponent(f, MeanKind::AreaAHat, p, alpha, fit_radii);
  rep.add(0.0, std::abs(ga.fitted_slope - gh.fitted_slope), 0.05, "slope agreement");
  rep.note("slope(A) = " + std::to_string(ga.fitted_slope) +
           ", slope(Ahat) = " + std::to_string(gh.fitted_slope));
  if (alpha > 0.0) {
    double b = std::isnan(beta) ? std::min(0.0, gh.fitted_slope) : beta;
    double c_sup = 0.0;
    for (double rho : hypothesis_grid()) {
      double v = mean(MeanKind::AreaAHat, f, p, alpha, rho) * std::pow(1.0 - rho * rho, -b);
      c_sup = std::max(c_sup, v);
    }
    rep.hypothesis_constant = c_sup;
    for (double r : radii) {
      rep.add(r, mean(MeanKind::AreaATilde, f, p, alpha, r * r),
              std::pow(2.0, alpha) * mean(MeanKind::AreaAHatTilde, f, p, alpha, r),
              "dilation step");
      rep.add(r, mean(MeanKind::AreaA, f, p, alpha, r),
              std::pow(2.0, alpha + 1.0 - 2.0 * b) * c_sup * std::pow(1.0 - r * r, b),
              "growth chain");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Derivative / antiderivative transfer

enum class DerivativeDirection { Integrate, Differentiate };

/// Integrate direction: the Minkowski bound
///   Ahat(r, f - f(0)) <= r int_0^1 Ahat(rs, f') ds
/// (64-point Gauss-Legendre in s) plus the slope implication.  Differentiate
/// direction: the dilation chain
///   Ahattilde(r^2, f') <= M_{alpha,p}^{-1} r^{2/p-1} (1-r^2)^{-1} Ahattilde(r, f - f(0))
/// plus the one-order slope bound slope(f') >= slope(f) - 1 - 0.05 (the
/// derivative grows at most one order faster).
inline TheoremReport verify_derivative_transfer(const AnalyticFunction& f, double p, double alpha,
                                                const std::vector<double>& radii,
                                                DerivativeDirection direction) {
  TheoremReport rep;
  rep.theorem_id = direction == DerivativeDirection::Integrate ? "derivative_transfer_integrate"
                                                               : "derivative_transfer_differentiate";
  AnalyticFunction fp = derivative(f);
  AnalyticFunction g = minus_constant(f);
  // f - f(0) of a closed form only evaluates pointwise; the margins here are
  // percent-level, so relax the mean tolerance accordingly.
  MeanOptions opts;
  if (!g.is_polynomial() && g.has_exact_eval()) opts.rel_tol = 1e-8;
  if (direction == DerivativeDirection::Integrate) {
    const RadialRule& gl = legendre_rule(64);
    for (double r : radii) {
      double lhs = mean(MeanKind::AreaAHat, g, p, alpha, r, opts);
      double s_int = 0.0;
      for (int i = 0; i < gl.size(); ++i)
        s_int += gl.w[i] * mean(MeanKind::AreaAHat, fp, p, alpha, gl.u[i] * r, opts);
      rep.add(r, lhs, r * s_int);
    }
    GrowthReport gfp = fit_growth_exponent(fp, MeanKind::AreaAHat, p, alpha, radii, opts);
    rep.note("slope(Ahat(., f')) = " + std::to_string(gfp.fitted_slope));
    if (gfp.fitted_slope < -1.05) {
      GrowthReport gg = fit_growth_exponent(g, MeanKind::AreaAHat, p, alpha, radii, opts);
      rep.add(0.0, gfp.fitted_slope + 1.0 - 0.05, gg.fitted_slope, "antiderivative slope");
    } else if (gfp.fitted_slope > -0.95) {
      double norm = bergman_norm(f, p, alpha);
      rep.add(1.0, norm, norm, "finite norm (slope > -1)");
    } else {
      rep.note("slope within 0.05 of -1; order implication skipped");
    }
  } else {
    double minv = 1.0 / m_alpha_p(alpha, p);
    for (double r : radii) {
      double lhs = mean(MeanKind::AreaAHatTilde, fp, p, alpha, r * r, opts);
      double rhs = minv * std::pow(r, 2.0 / p - 1.0) / (1.0 - r * r) *
                   mean(MeanKind::AreaAHatTilde, g, p, alpha, r, opts);
      rep.add(r, lhs, rhs);
    }
    GrowthReport gf = fit_growth_exponent(g, MeanKind::AreaAHatTilde, p, alpha, radii, opts);
    GrowthReport gfp = fit_growth_exponent(fp, MeanKind::AreaAHatTilde, p, alpha, radii, opts);
    rep.add(0.0, gf.fitted_slope - 1.0 - 0.05, gfp.fitted_slope, "derivative slope order");
    rep.note("slope(f) = " + std::to_string(gf.fitted_slope) +
             ", slope(f') = " + std::to_string(gfp.fitted_slope));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Smoothness -> growth of derivatives

/// Hypothesis: the second-difference profile stays below B t^beta on the
/// grid.  Conclusion rows: A(r, f'') within 10 C3(1) of the hypothesis scale;
/// for 0 < beta < 1 and -1 < alpha <= 0 the explicit branch
///   Ahat(r, f') <= 382.5 B (1-beta)^{-1} (1-r)^{-1+beta}
/// at r >= 0.99 with a 1.10 allowance for the unquantified lower-order term
/// (strict outcomes go to the notes); beta = 1 uses the log form; 1 < beta < 2
/// requires f' in the space.  When alpha <= 0 and the Hardy-norm profile of
/// the second difference has a clean exponent in (0,1), the circle-mean
/// corollary bound with constant 383 (1-beta_H)^{-1} is checked the same way;
/// its beta_H = 1 display divides by zero as printed and is not verifiable.
inline TheoremReport verify_lip_to_growth(const AnalyticFunction& f, double p, double alpha,
                                          double beta, double B,
                                          const std::vector<double>& radii = default_radii(),
                                          const std::vector<double>& t_grid = default_t_grid()) {
  if (!(beta > 0.0 && beta <= 2.0))
    throw parameter_error("verify_lip_to_growth: beta must lie in (0,2]");
  TheoremReport rep;
  rep.theorem_id = "lip_to_growth";
  rep.hypothesis_constant = B;
  HolderEstimate prof = lambda_star_seminorm(f, p, alpha, beta, t_grid);
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    detail::require_hypothesis(rep.theorem_id, prof.per_t_values[i], B, t_grid[i]);

  AnalyticFunction f2 = derivative(derivative(f));
  double c_cap = 10.0 * c3_constant(1.0);
  double c_min = 0.0;
  for (double r : radii) {
    double a2 = mean(MeanKind::AreaA, f2, p, alpha, r);
    c_min = std::max(c_min, a2 * std::pow(1.0 - r, 2.0 - beta) / std::max(B, 1e-300));
    rep.add(r, a2, c_cap * B * std::pow(1.0 - r, beta - 2.0), "f'' growth");
  }
  rep.note("least C with A(r,f'') <= C B (1-r)^{beta-2} on the ladder: " + std::to_string(c_min));

  AnalyticFunction fp = derivative(f);
  auto tail = [&radii]() {
    std::vector<double> out;
    for (double r : radii)
      if (r >= 0.99) out.push_back(r);
    return out;
  }();

  if (beta < 1.0) {
    GrowthReport gfp = fit_growth_exponent(fp, MeanKind::AreaA, p, alpha, radii);
    rep.note("slope(A(., f')) = " + std::to_string(gfp.fitted_slope) + " (order claim beta-1 = " +
             std::to_string(beta - 1.0) + ")");
    if (alpha <= 0.0) {
      int strict_ok = 0;
      for (double r : tail) {
        double lhs = mean(MeanKind::AreaAHat, fp, p, alpha, r);
        double rhs = 382.5 * B / (1.0 - beta) * std::pow(1.0 - r, beta - 1.0);
        if (lhs <= rhs * (1.0 + 1e-9)) ++strict_ok;
        rep.add(r, lhs, 1.10 * rhs, "explicit 382.5 branch +o");
      }
      rep.note("strict 382.5 branch (no o-term allowance): " + std::to_string(strict_ok) + "/" +
               std::to_string(tail.size()) + " points");
      // Circle-mean corollary, with its own Hardy-profile hypothesis.
      std::vector<double> hvals;
      for (double t : t_grid) hvals.push_back(hardy_norm(second_difference(f, t), p));
      double beta_h = detail::t_exponent(t_grid, hvals);
      if (beta_h > 0.02 && beta_h < 0.98) {
        double bh = 0.0;
        for (std::size_t i = 0; i < t_grid.size(); ++i)
          bh = std::max(bh, hvals[i] / std::pow(t_grid[i], beta_h));
        int strict2 = 0;
        for (double r : tail) {
          double lhs = mean(MeanKind::CircleMp, fp, p, alpha, r);
          double rhs = 383.0 * bh / (1.0 - beta_h) *
                       std::pow(1.0 - r, -1.0 + beta_h - (1.0 + alpha) / p);
          if (lhs <= rhs * (1.0 + 1e-9)) ++strict2;
          rep.add(r, lhs, 1.10 * rhs, "circle corollary +o");
        }
        rep.note("circle corollary: beta_H = " + std::to_string(beta_h) + ", B_H = " +
                 std::to_string(bh) + ", strict " + std::to_string(strict2) + "/" +
                 std::to_string(tail.size()));
      } else {
        rep.note("circle corollary skipped: Hardy-profile exponent " + std::to_string(beta_h) +
                 " outside (0.02, 0.98)");
      }
    }
  } else if (beta == 1.0) {
    if (alpha <= 0.0) {
      int strict_ok = 0;
      for (double r : tail) {
        double lhs = mean(MeanKind::AreaAHat, fp, p, alpha, r);
        double rhs = 382.5 * B * std::abs(std::log(1.0 - r));
        if (lhs <= rhs * (1.0 + 1e-9)) ++strict_ok;
        rep.add(r, lhs, 1.10 * rhs, "explicit log branch +o");
      }
      rep.note("strict log branch: " + std::to_string(strict_ok) + "/" +
               std::to_string(tail.size()) + " points");
    }
  } else if (beta < 2.0) {
    double norm = bergman_norm(fp, p, alpha);
    rep.add(1.0, norm, norm, "f' in the space (1 < beta < 2)");
    rep.note("||f'|| = " + std::to_string(norm));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Growth of f'' -> smoothness

/// Hypothesis: Ahat(r, f'') <= B (1-r)^{-2+beta} on the dense grid.  The
/// explicit seminorm constant requires f'(0) = 0, so the check runs on
/// f - f'(0) z (same second derivative); conclusion rows compare the
/// second-difference norms against (48 pi^2 + 12 pi + 1/beta) B t^beta.
inline TheoremReport verify_growth_to_lip(const AnalyticFunction& f, double p, double alpha,
                                          double beta, double B,
                                          const std::vector<double>& t_grid = default_t_grid()) {
  if (!(beta > 0.0 && beta <= 2.0))
    throw parameter_error("verify_growth_to_lip: beta must lie in (0,2]");
  TheoremReport rep;
  rep.theorem_id = "growth_to_lip";
  rep.hypothesis_constant = B;
  AnalyticFunction f2 = derivative(derivative(f));
  for (double r : hypothesis_grid()) {
    double h = mean(MeanKind::AreaAHat, f2, p, alpha, r);
    detail::require_hypothesis(rep.theorem_id, h, B * std::pow(1.0 - r, beta - 2.0), r);
  }
  cplx fp0 = derivative(f).coeff(0);
  AnalyticFunction g = f;
  if (std::abs(fp0) > 0.0) {
    auto c = f.coefficients(std::max(f.degree(), 1));
    c[1] -= fp0;
    g = AnalyticFunction::polynomial(std::move(c), f.label() + "-f'(0)z");
    rep.note("f'(0) != 0: explicit constant checked on f - f'(0) z");
  }
  double factor = 48.0 * pi * pi + 12.0 * pi + 1.0 / beta;
  for (double t : t_grid) {
    double lhs = bergman_norm(second_difference(g, t), p, alpha);
    rep.add(t, lhs, factor * B * std::pow(t, beta));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bergman-norm Holder vs Hardy-norm Holder

/// Compares the fitted t-exponents of the two second-difference profiles;
/// they must differ by (1+alpha)/p within 0.05.  When both profiles already
/// sit at the Zygmund ceiling (exponent 2) the case is degenerate and
/// reported as bounded in both scales.
inline TheoremReport verify_hardy_bergman_holder(const AnalyticFunction& f, double p, double alpha,
                                                 const std::vector<double>& t_grid = default_t_grid()) {
  TheoremReport rep;
  rep.theorem_id = "hardy_bergman_holder";
  std::vector<double> vb, vh;
  for (double t : t_grid) {
    AnalyticFunction d = second_difference(f, t);
    vb.push_back(bergman_norm(d, p, alpha));
    vh.push_back(hardy_norm(d, p));
  }
  double eb = detail::t_exponent(t_grid, vb), eh = detail::t_exponent(t_grid, vh);
  rep.note("Bergman exponent " + std::to_string(eb) + ", Hardy exponent " + std::to_string(eh));
  if (eb > 1.95 && eh > 1.95) {
    rep.add(0.0, 0.0, 1.0, "degenerate: Zygmund-regular in both scales");
    return rep;
  }
  double shift = (1.0 + alpha) / p;
  if (!(eb > shift && eb < 2.0))
    throw hypothesis_violation("hardy_bergman_holder: Bergman exponent " + std::to_string(eb) +
                               " outside ((1+alpha)/p, 2)");
  rep.add(0.0, std::abs(eb - eh - shift), 0.05, "exponent shift = (1+alpha)/p");
  return rep;
}

}  // namespace berglab
