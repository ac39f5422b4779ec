// berglab: error types shared across the library.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace berglab {

/// A parameter is outside its admissible range (alpha <= -1, p <= 0, ...).
class parameter_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An evaluation point is outside the domain of the function.
class domain_error : public std::domain_error {
  using std::domain_error::domain_error;
};

/// The requested operation is not defined for this representation
/// (e.g. antiderivative of a non-polynomial).
class unsupported_representation : public std::logic_error {
  using std::logic_error::logic_error;
};

/// An integrand evaluated to a non-finite value; carries the offending node.
class evaluation_error : public std::runtime_error {
public:
  evaluation_error(std::string msg, std::complex<double> node)
      : std::runtime_error(std::move(msg)), node_(node) {}
  std::complex<double> node() const noexcept { return node_; }

private:
  std::complex<double> node_;
};

/// Adaptive refinement stopped before reaching the requested tolerance.
/// Carries the best value seen and the last refinement gap.
class tolerance_not_met : public std::runtime_error {
public:
  tolerance_not_met(std::string msg, double best, double gap)
      : std::runtime_error(std::move(msg)), best_(best), gap_(gap) {}
  double best_value() const noexcept { return best_; }
  double gap() const noexcept { return gap_; }

private:
  double best_;
  double gap_;
};

/// A norm or integral came out divergent.
class norm_divergent : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A theorem verifier found that its hypothesis fails on the sample grid.
/// This is distinct from the theorem's conclusion failing.
class hypothesis_violation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace berglab
