#pragma once

#include "frdr/errors.hpp"

#include <cstddef>
#include <vector>

namespace frdr::fracops {

enum class DerivKind { Caputo, RiemannLiouville };

/// Order of a fractional time derivative, 0 < alpha <= 2.
struct FracOrder {
  double alpha = 0.5;
  DerivKind kind = DerivKind::Caputo;

  int n() const { return alpha <= 1.0 ? 1 : 2; }
  void validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
      throw ValidationError("FracOrder: alpha must lie in (0, 2]");
  }
};

/// Uniformly sampled trajectory f(t0 + j h), j = 0..N-1.
struct SampledTrajectory {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double t(std::size_t j) const { return t0 + h * double(j); }
  void validate() const {
    if (!(h > 0.0)) throw ValidationError("SampledTrajectory: step must be positive");
    if (values.size() < 3) throw ValidationError("SampledTrajectory: need at least 3 samples");
  }
};

/// Riemann-Liouville fractional integral I^mu f of order mu in (0, 2),
/// computed by product-trapezoidal convolution quadrature (the kernel is
/// integrated exactly against the piecewise-linear interpolant of f).
/// Requires f.t0 == 0.
SampledTrajectory rl_integral(const SampledTrajectory& f, double mu);

/// Same, but the first cell [0, h] is handled analytically under the model
/// f(v) ~ c v^e with the given exponent e in (-1, 0), c fitted from f(h).
/// Used for trajectories with an integrable singularity at t = 0; values[0]
/// is ignored.
SampledTrajectory rl_integral_singular(const SampledTrajectory& f, double mu, double sing_exponent);

/// Caputo derivative I^{n-alpha}[f^(n)] on the grid of f (L1-type product
/// integration of the piecewise-constant n-th derivative).
SampledTrajectory caputo_derivative(const SampledTrajectory& f, const FracOrder& order);

/// Riemann-Liouville derivative d^n/dt^n [I^{n-alpha} f]: product-trapezoidal
/// integral followed by 2nd-order finite differences (one-sided at the ends).
/// Pass sing_exponent in (-1,0) when f has a t^e singularity at 0.
SampledTrajectory rl_derivative(const SampledTrajectory& f, const FracOrder& order,
                                double sing_exponent = 0.0);

}  // namespace frdr::fracops
