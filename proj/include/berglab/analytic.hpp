// berglab: analytic test functions on the unit disc.
//
// A function is held either as a finite Taylor coefficient vector
// (polynomial) or as a named closed form evaluable everywhere in the disc:
// z^n, (1-z)^{-gamma}, e^z, or a custom coefficient generator with an
// optional exact evaluator.  Rotation, dilation, differentiation and the
// second symmetric difference act exactly on whichever representation
// supports them; anything else falls back to a truncated series.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "berglab/errors.hpp"

namespace berglab {

using cplx = std::complex<double>;

enum class FunctionKind { Polynomial, Monomial, PolePower, Exponential, Custom };

namespace detail {

/// splitmix64; fixed stream for a fixed seed on every platform.
struct splitmix64 {
  std::uint64_t state;
  explicit splitmix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// uniform in [-1, 1]
  double symmetric() { return 2.0 * uniform() - 1.0; }
};

inline void strip_trailing_zeros(std::vector<cplx>& c) {
  while (c.size() > 1 && c.back() == cplx(0.0, 0.0)) c.pop_back();
  if (c.empty()) c.push_back(cplx(0.0, 0.0));
}

}  // namespace detail

class AnalyticFunction {
public:
  static constexpr int default_truncation = 256;

  static AnalyticFunction polynomial(std::vector<cplx> coeffs, std::string label = "poly") {
    detail::strip_trailing_zeros(coeffs);
    AnalyticFunction f;
    f.kind_ = FunctionKind::Polynomial;
    f.coeffs_ = std::move(coeffs);
    f.label_ = std::move(label);
    return f;
  }

  static AnalyticFunction constant(cplx c) { return polynomial({c}, "const"); }

  static AnalyticFunction monomial(int n, cplx scale = 1.0) {
    if (n < 0) throw parameter_error("monomial: degree must be >= 0");
    AnalyticFunction f;
    f.kind_ = FunctionKind::Monomial;
    f.n_ = n;
    f.scale_ = scale;
    f.label_ = "z^" + std::to_string(n);
    return f;
  }

  /// (1-z)^{-gamma}, gamma > 0.
  static AnalyticFunction pole_power(double gamma, cplx scale = 1.0) {
    if (!(gamma > 0.0)) throw parameter_error("pole_power: gamma must be > 0");
    AnalyticFunction f;
    f.kind_ = FunctionKind::PolePower;
    f.gamma_ = gamma;
    f.scale_ = scale;
    f.label_ = "(1-z)^-" + std::to_string(gamma);
    return f;
  }

  static AnalyticFunction exponential(cplx scale = 1.0) {
    AnalyticFunction f;
    f.kind_ = FunctionKind::Exponential;
    f.scale_ = scale;
    f.label_ = "exp";
    return f;
  }

  /// Custom closed form: coefficient generator plus truncation degree, and
  /// optionally an exact pointwise evaluator (used instead of the truncated
  /// series whenever present).
  static AnalyticFunction custom(std::function<cplx(int)> gen, int truncation,
                                 std::string label = "custom",
                                 std::function<cplx(cplx)> evaluator = nullptr) {
    if (truncation < 0) throw parameter_error("custom: truncation must be >= 0");
    AnalyticFunction f;
    f.kind_ = FunctionKind::Custom;
    f.gen_ = std::move(gen);
    f.trunc_ = truncation;
    f.eval_ = std::move(evaluator);
    f.label_ = std::move(label);
    return f;
  }

  FunctionKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  AnalyticFunction relabeled(std::string l) const {
    AnalyticFunction f = *this;
    f.label_ = std::move(l);
    return f;
  }

  /// True for representations with a finite exact coefficient vector.
  bool is_polynomial() const {
    return kind_ == FunctionKind::Polynomial || kind_ == FunctionKind::Monomial;
  }

  /// True when evaluation does not go through a truncated series.
  bool has_exact_eval() const {
    return kind_ != FunctionKind::Custom || static_cast<bool>(eval_);
  }

  /// Exact degree for polynomial forms; series truncation degree otherwise.
  int degree() const {
    switch (kind_) {
      case FunctionKind::Polynomial: return static_cast<int>(coeffs_.size()) - 1;
      case FunctionKind::Monomial: return n_;
      case FunctionKind::Custom: return trunc_;
      default: return trunc_;
    }
  }

  int truncation() const { return trunc_; }
  AnalyticFunction with_truncation(int t) const {
    if (t < 0) throw parameter_error("with_truncation: degree must be >= 0");
    AnalyticFunction f = *this;
    f.trunc_ = t;
    return f;
  }

  cplx coeff(int n) const {
    if (n < 0) return 0.0;
    switch (kind_) {
      case FunctionKind::Polynomial:
        return n < static_cast<int>(coeffs_.size()) ? coeffs_[n] : cplx(0.0);
      case FunctionKind::Monomial:
        return n == n_ ? scale_ : cplx(0.0);
      case FunctionKind::PolePower: {
        // a_k = a_{k-1} (gamma + k - 1)/k, a_0 = 1.
        double a = 1.0;
        for (int k = 1; k <= n; ++k) a *= (gamma_ + k - 1.0) / k;
        return scale_ * a;
      }
      case FunctionKind::Exponential:
        return scale_ * std::exp(-std::lgamma(n + 1.0));
      case FunctionKind::Custom:
        return gen_(n);
    }
    return 0.0;
  }

  /// Coefficients a_0..a_N; N defaults to degree() for polynomials and to the
  /// truncation degree otherwise.
  std::vector<cplx> coefficients(int up_to = -1) const {
    int N = up_to >= 0 ? up_to : degree();
    std::vector<cplx> out(static_cast<std::size_t>(N) + 1, cplx(0.0));
    switch (kind_) {
      case FunctionKind::Polynomial:
        for (int n = 0; n <= N && n < static_cast<int>(coeffs_.size()); ++n) out[n] = coeffs_[n];
        break;
      case FunctionKind::Monomial:
        if (n_ <= N) out[n_] = scale_;
        break;
      case FunctionKind::PolePower: {
        double a = 1.0;
        out[0] = scale_;
        for (int k = 1; k <= N; ++k) {
          a *= (gamma_ + k - 1.0) / k;
          out[k] = scale_ * a;
        }
        break;
      }
      case FunctionKind::Exponential: {
        double a = 1.0;
        out[0] = scale_;
        for (int k = 1; k <= N; ++k) {
          a /= k;
          out[k] = scale_ * a;
        }
        break;
      }
      case FunctionKind::Custom:
        for (int n = 0; n <= N; ++n) out[n] = gen_(n);
        break;
    }
    return out;
  }

  bool is_zero() const {
    if (kind_ == FunctionKind::Polynomial)
      return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0);
    if (kind_ == FunctionKind::Monomial || kind_ == FunctionKind::PolePower ||
        kind_ == FunctionKind::Exponential)
      return scale_ == cplx(0.0);
    return false;
  }

  cplx operator()(cplx z) const { return eval_at(z); }

  cplx eval_at(cplx z) const {
    check_domain(z);
    switch (kind_) {
      case FunctionKind::Polynomial: {
        cplx acc(0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
      }
      case FunctionKind::Monomial: {
        cplx acc(1.0);
        for (int k = 0; k < n_; ++k) acc *= z;
        return scale_ * acc;
      }
      case FunctionKind::PolePower:
        // Re(1-z) > 0 inside the disc, so the principal branch is the
        // analytic one.
        return scale_ * std::pow(cplx(1.0) - z, -gamma_);
      case FunctionKind::Exponential:
        return scale_ * std::exp(z);
      case FunctionKind::Custom: {
        if (eval_) return eval_(z);
        cplx acc(0.0);
        for (int n = trunc_; n >= 0; --n) acc = acc * z + gen_(n);
        return acc;
      }
    }
    return 0.0;
  }

  double pole_gamma() const {
    if (kind_ != FunctionKind::PolePower)
      throw unsupported_representation("pole_gamma: not a pole power");
    return gamma_;
  }
  int monomial_degree() const {
    if (kind_ != FunctionKind::Monomial)
      throw unsupported_representation("monomial_degree: not a monomial");
    return n_;
  }
  cplx scale() const { return scale_; }

private:
  void check_domain(cplx z) const {
    double az = std::abs(z);
    // Polynomial-type representations extend continuously to |z| = 1; the
    // genuinely singular closed forms are kept strictly inside.
    bool boundary_ok = is_polynomial() || kind_ == FunctionKind::Exponential ||
                       (kind_ == FunctionKind::Custom && !eval_);
    double limit = boundary_ok ? 1.0 + 1e-12 : 1.0;
    if (boundary_ok ? az > limit : az >= limit)
      throw domain_error("eval: |z| outside the domain of " + label_);
  }

  FunctionKind kind_ = FunctionKind::Polynomial;
  std::vector<cplx> coeffs_{cplx(0.0)};
  int n_ = 0;            // Monomial degree
  double gamma_ = 0.0;   // PolePower exponent
  cplx scale_{1.0};
  std::function<cplx(int)> gen_;
  std::function<cplx(cplx)> eval_;
  int trunc_ = default_truncation;
  std::string label_ = "0";
};

inline cplx eval(const AnalyticFunction& f, cplx z) { return f.eval_at(z); }

/// g(z) = f(e^{it} z).  Coefficient action a_n -> a_n e^{int}.
inline AnalyticFunction rotate(const AnalyticFunction& f, double t) {
  auto phase = [t](int n) { return std::polar(1.0, n * t); };
  switch (f.kind()) {
    case FunctionKind::Polynomial: {
      auto c = f.coefficients();
      for (int n = 0; n < static_cast<int>(c.size()); ++n) c[n] *= phase(n);
      return AnalyticFunction::polynomial(std::move(c), f.label() + "@rot");
    }
    case FunctionKind::Monomial:
      return AnalyticFunction::monomial(f.monomial_degree(),
                                        f.scale() * phase(f.monomial_degree()));
    default: {
      AnalyticFunction base = f;
      std::function<cplx(cplx)> ev;
      if (f.has_exact_eval()) {
        cplx w = std::polar(1.0, t);
        ev = [base, w](cplx z) { return base.eval_at(w * z); };
      }
      return AnalyticFunction::custom(
          [base, phase](int n) { return base.coeff(n) * phase(n); }, f.truncation(),
          f.label() + "@rot", std::move(ev));
    }
  }
}

/// Second symmetric difference f(e^{it} z) + f(e^{-it} z) - 2 f(z).
/// Coefficient action a_n -> 2 a_n (cos(nt) - 1), exact.
inline AnalyticFunction second_difference(const AnalyticFunction& f, double t) {
  auto factor = [t](int n) { return 2.0 * (std::cos(n * t) - 1.0); };
  if (f.is_polynomial()) {
    auto c = f.coefficients();
    for (int n = 0; n < static_cast<int>(c.size()); ++n) c[n] *= factor(n);
    return AnalyticFunction::polynomial(std::move(c), f.label() + "@d2");
  }
  AnalyticFunction base = f;
  std::function<cplx(cplx)> ev;
  if (f.has_exact_eval()) {
    cplx w = std::polar(1.0, t);
    ev = [base, w](cplx z) {
      return base.eval_at(w * z) + base.eval_at(std::conj(w) * z) - 2.0 * base.eval_at(z);
    };
  }
  return AnalyticFunction::custom([base, factor](int n) { return base.coeff(n) * factor(n); },
                                  f.truncation(), f.label() + "@d2", std::move(ev));
}

inline AnalyticFunction derivative(const AnalyticFunction& f) {
  switch (f.kind()) {
    case FunctionKind::Polynomial: {
      auto c = f.coefficients();
      std::vector<cplx> d;
      for (int n = 1; n < static_cast<int>(c.size()); ++n) d.push_back(double(n) * c[n]);
      if (d.empty()) d.push_back(cplx(0.0));
      return AnalyticFunction::polynomial(std::move(d), f.label() + "'");
    }
    case FunctionKind::Monomial: {
      int n = f.monomial_degree();
      if (n == 0) return AnalyticFunction::constant(0.0);
      return AnalyticFunction::monomial(n - 1, f.scale() * double(n));
    }
    case FunctionKind::PolePower:
      return AnalyticFunction::pole_power(f.pole_gamma() + 1.0, f.scale() * f.pole_gamma());
    case FunctionKind::Exponential:
      return AnalyticFunction::exponential(f.scale());
    case FunctionKind::Custom: {
      AnalyticFunction base = f;
      return AnalyticFunction::custom(
          [base](int n) { return double(n + 1) * base.coeff(n + 1); },
          std::max(0, f.truncation() - 1), f.label() + "'");
    }
  }
  return AnalyticFunction::constant(0.0);
}

/// Antiderivative with value c0 at the origin; polynomial forms only.
inline AnalyticFunction antiderivative(const AnalyticFunction& f, cplx c0 = 0.0) {
  if (!f.is_polynomial())
    throw unsupported_representation("antiderivative: defined for polynomials only");
  auto c = f.coefficients();
  std::vector<cplx> a(c.size() + 1, cplx(0.0));
  a[0] = c0;
  for (int n = 0; n < static_cast<int>(c.size()); ++n) a[n + 1] = c[n] / double(n + 1);
  return AnalyticFunction::polynomial(std::move(a), f.label() + "~int");
}

/// f_s(z) = f(sz) for s in [0, 1].  Coefficient action a_n -> a_n s^n.
inline AnalyticFunction dilate(const AnalyticFunction& f, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw parameter_error("dilate: s must lie in [0,1]");
  if (s == 1.0) return f;
  switch (f.kind()) {
    case FunctionKind::Polynomial: {
      auto c = f.coefficients();
      double sn = 1.0;
      for (int n = 0; n < static_cast<int>(c.size()); ++n) {
        c[n] *= sn;
        sn *= s;
      }
      return AnalyticFunction::polynomial(std::move(c), f.label() + "@dil");
    }
    case FunctionKind::Monomial:
      return AnalyticFunction::monomial(f.monomial_degree(),
                                        f.scale() * std::pow(s, f.monomial_degree()));
    default: {
      AnalyticFunction base = f;
      std::function<cplx(cplx)> ev;
      if (f.has_exact_eval()) ev = [base, s](cplx z) { return base.eval_at(s * z); };
      return AnalyticFunction::custom(
          [base, s](int n) { return base.coeff(n) * std::pow(s, n); }, f.truncation(),
          f.label() + "@dil", std::move(ev));
    }
  }
}

/// Truncated-series polynomial of degree `degree`.
inline AnalyticFunction truncate(const AnalyticFunction& f, int degree) {
  return AnalyticFunction::polynomial(f.coefficients(degree), f.label() + "~trunc");
}

/// f - f(0).
inline AnalyticFunction minus_constant(const AnalyticFunction& f) {
  if (f.is_polynomial()) {
    auto c = f.coefficients();
    c[0] = 0.0;
    return AnalyticFunction::polynomial(std::move(c), f.label() + "-f0");
  }
  AnalyticFunction base = f;
  std::function<cplx(cplx)> ev;
  if (f.has_exact_eval()) {
    cplx f0 = f.coeff(0);
    ev = [base, f0](cplx z) { return base.eval_at(z) - f0; };
  }
  return AnalyticFunction::custom([base](int n) { return n == 0 ? cplx(0.0) : base.coeff(n); },
                                  f.truncation(), f.label() + "-f0", std::move(ev));
}

/// Seeded polynomial with coefficients (u + iv) / max(1,n)^decay, u, v
/// uniform in [-1, 1]; deterministic for a fixed seed.
inline AnalyticFunction random_polynomial(int degree, double decay, std::uint64_t seed) {
  if (degree < 0) throw parameter_error("random_polynomial: degree must be >= 0");
  detail::splitmix64 rng(seed);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) {
    double re = rng.symmetric(), im = rng.symmetric();
    double mag = std::pow(std::max(1, n), -decay);
    c[n] = cplx(re * mag, im * mag);
  }
  return AnalyticFunction::polynomial(std::move(c),
                                      "randpoly(" + std::to_string(seed) + ")");
}

}  // namespace berglab
