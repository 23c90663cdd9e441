#include "frdr/fracops.hpp"

#include <cmath>
#include <cstddef>

namespace frdr::fracops {

namespace {

void check_mu(double mu) {
  if (!(mu > 0.0) || !(mu < 2.0)) throw ValidationError("rl_integral: order must lie in (0, 2)");
}

// Exact kernel moments over one cell [a, b] with evaluation time t >= b:
//   M0 = int_a^b (t - v)^{mu-1} dv
//   M1 = int_a^b (t - v)^{mu-1} (v - a) dv
void cell_moments(double t, double a, double b, double mu, double& m0, double& m1) {
  const double ta = t - a, tb = t - b;
  const double pa = std::pow(ta, mu), pb = std::pow(tb, mu);
  m0 = (pa - pb) / mu;
  // integration by parts with w = v - a
  m1 = -(b - a) * pb / mu + (std::pow(ta, mu + 1.0) - std::pow(tb, mu + 1.0)) / (mu * (mu + 1.0));
}

// int_0^h (t - v)^{mu-1} v^e dv for e in (-1, 0), t >= h.
// For t == h this is h^{mu+e} B(e+1, mu); otherwise a fast binomial series
// in (v/t) — the callers guarantee h/t <= 1/2 there.
double singular_cell_moment(double t, double h, double mu, double e) {
  if (t <= h * (1.0 + 1e-12)) {
    return std::pow(h, mu + e) *
           std::exp(std::lgamma(e + 1.0) + std::lgamma(mu) - std::lgamma(e + 1.0 + mu));
  }
  const double r = h / t;
  double binom = 1.0;  // C(mu-1, i) (-1)^i accumulated as a product
  double sum = 0.0;
  double rp = std::pow(h, e + 1.0);  // h^{e+1+i} collected with t^{-i} below
  for (int i = 0; i < 80; ++i) {
    const double inc = binom * rp / (e + 1.0 + i);
    sum += inc;
    if (std::abs(inc) < 1e-16 * std::abs(sum)) break;
    binom *= -(mu - 1.0 - i) / (i + 1.0);
    rp *= r;  // h^{e+1+i} / t^i  advances by (h/t)
  }
  return std::pow(t, mu - 1.0) * sum;
}

// Product-trapezoidal I^mu with an optional analytic first cell.
SampledTrajectory rl_integral_impl(const SampledTrajectory& f, double mu, bool singular_first,
                                   double sing_e) {
  f.validate();
  check_mu(mu);
  if (std::abs(f.t0) > 1e-14) throw ValidationError("rl_integral: trajectory must start at t = 0");

  const std::size_t n = f.size();
  const double h = f.h;
  const double inv_gamma = 1.0 / std::tgamma(mu);
  SampledTrajectory out{f.t0, h, std::vector<double>(n, 0.0)};

  std::vector<double> pw(n + 1), pw1(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    pw[q] = std::pow(double(q), mu);
    pw1[q] = std::pow(double(q), mu + 1.0);
  }
  const double scale = std::pow(h, mu) / std::tgamma(mu + 2.0);

  double fit_c = 0.0;
  if (singular_first) {
    if (!(sing_e > -1.0) || !(sing_e < 0.0))
      throw ValidationError("rl_integral_singular: exponent must lie in (-1, 0)");
    fit_c = f.values[1] / std::pow(h, sing_e);
  }

  for (std::size_t j = 1; j < n; ++j) {
    // hat-function weights: a_{j,0} f_0 + sum_k a_{j,k} f_k + f_j
    double acc = f.values[j] + (pw1[j - 1] - pw1[j] + (mu + 1.0) * pw[j]) * f.values[0];
    for (std::size_t k = 1; k + 1 <= j; ++k)
      acc += (pw1[j - k + 1] - 2.0 * pw1[j - k] + pw1[j - k - 1]) * f.values[k];
    double val = scale * acc;

    if (singular_first) {
      // swap the piecewise-linear model of cell [0, h] for the fitted c v^e
      const double t = h * double(j);
      double m0, m1;
      cell_moments(t, 0.0, h, mu, m0, m1);
      const double cell0_lin = f.values[0] * (m0 - m1 / h) + f.values[1] * (m1 / h);
      val += inv_gamma * (fit_c * singular_cell_moment(t, h, mu, sing_e) - cell0_lin);
    }
    out.values[j] = val;
  }
  return out;
}

// 2nd-order first derivative on the grid; one-sided at the ends.
std::vector<double> diff1(const std::vector<double>& g, double h) {
  const std::size_t n = g.size();
  std::vector<double> d(n);
  d[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (g[j + 1] - g[j - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h);
  return d;
}

// 2nd-order second derivative; one-sided at the ends.
std::vector<double> diff2(const std::vector<double>& g, double h) {
  const std::size_t n = g.size();
  if (n < 4) throw ValidationError("rl_derivative: need at least 4 samples for n = 2");
  std::vector<double> d(n);
  const double h2 = h * h;
  d[0] = (2.0 * g[0] - 5.0 * g[1] + 4.0 * g[2] - g[3]) / h2;
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (g[j - 1] - 2.0 * g[j] + g[j + 1]) / h2;
  d[n - 1] = (2.0 * g[n - 1] - 5.0 * g[n - 2] + 4.0 * g[n - 3] - g[n - 4]) / h2;
  return d;
}

}  // namespace

SampledTrajectory rl_integral(const SampledTrajectory& f, double mu) {
  return rl_integral_impl(f, mu, false, 0.0);
}

SampledTrajectory rl_integral_singular(const SampledTrajectory& f, double mu,
                                       double sing_exponent) {
  return rl_integral_impl(f, mu, true, sing_exponent);
}

SampledTrajectory caputo_derivative(const SampledTrajectory& f, const FracOrder& order) {
  f.validate();
  order.validate();
  if (order.kind != DerivKind::Caputo)
    throw ValidationError("caputo_derivative: order.kind must be Caputo");
  const int n = order.n();
  const std::size_t N = f.size();
  if (N < std::size_t(n) + 2)
    throw ValidationError("caputo_derivative: not enough samples for the stencil");
  const double h = f.h, alpha = order.alpha;

  if (double(n) - alpha < 1e-14) {  // integer order: plain finite differences
    SampledTrajectory out{f.t0, h, {}};
    out.values = (n == 1) ? diff1(f.values, h) : diff2(f.values, h);
    return out;
  }

  // Piecewise-constant density g_k ~ f^(n) on cell [t_k, t_{k+1}], integrated
  // exactly against the kernel (t - v)^{n-1-alpha}/Gamma(n-alpha).
  std::vector<double> g(N - 1);
  if (n == 1) {
    for (std::size_t k = 0; k + 1 < N; ++k) g[k] = (f.values[k + 1] - f.values[k]) / h;
  } else {
    const double h2 = h * h;
    for (std::size_t k = 0; k + 1 < N; ++k) {
      if (k == 0) {
        if (N >= 4)
          g[k] = (1.5 * f.values[0] - 3.5 * f.values[1] + 2.5 * f.values[2] - 0.5 * f.values[3]) / h2;
        else
          g[k] = (f.values[0] - 2.0 * f.values[1] + f.values[2]) / h2;
      } else if (k + 2 < N) {
        g[k] = (f.values[k - 1] - f.values[k] - f.values[k + 1] + f.values[k + 2]) / (2.0 * h2);
      } else {
        const std::size_t m = N - 1;
        g[k] = (-0.5 * f.values[m - 3] + 2.5 * f.values[m - 2] - 3.5 * f.values[m - 1] +
                1.5 * f.values[m]) / h2;
      }
    }
  }

  const double p = double(n) - alpha;  // kernel power
  const double scale = std::pow(h, p) / std::tgamma(p + 1.0);
  std::vector<double> cw(N);
  for (std::size_t q = 0; q < N; ++q) cw[q] = std::pow(double(q), p);

  SampledTrajectory out{f.t0, h, std::vector<double>(N, 0.0)};
  for (std::size_t j = 1; j < N; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < j; ++k) acc += g[k] * (cw[j - k] - cw[j - k - 1]);
    out.values[j] = scale * acc;
  }
  out.values[0] = 0.0;  // Caputo derivative vanishes at the lower terminal for alpha < n
  return out;
}

SampledTrajectory rl_derivative(const SampledTrajectory& f, const FracOrder& order,
                                double sing_exponent) {
  f.validate();
  order.validate();
  if (order.kind != DerivKind::RiemannLiouville)
    throw ValidationError("rl_derivative: order.kind must be RiemannLiouville");
  const int n = order.n();
  const double mu = double(n) - order.alpha;

  // alpha == n exactly: I^0 is the identity and the derivative is classical.
  SampledTrajectory I = f;
  if (mu > 1e-14)
    I = (sing_exponent < 0.0) ? rl_integral_singular(f, mu, sing_exponent) : rl_integral(f, mu);
  SampledTrajectory out{f.t0, f.h, {}};
  out.values = (n == 1) ? diff1(I.values, f.h) : diff2(I.values, f.h);
  return out;
}

}  // namespace frdr::fracops
