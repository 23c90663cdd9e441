#include "frdr/mlf.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace frdr::mlf {

namespace {

constexpr int kTermBudget = 10000;

void validate(const MlfParams& p, double z) {
  if (!(p.gamma1 > 0.0) || !(p.gamma2 > 0.0) || !std::isfinite(p.gamma3) || !std::isfinite(z))
    throw ValidationError("mittag_leffler_3p: need gamma1 > 0, gamma2 > 0, finite arguments");
  if (std::abs(z) > kMlfDomain) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "mittag_leffler_3p: |z| = %.3g outside accuracy domain |z| <= %.0f", std::abs(z),
                  kMlfDomain);
    throw AccuracyError(buf);
  }
}

// Cached reciprocal gamma values 1/Gamma(gamma1 p + gamma2), p = 0, 1, ...
// One evaluation of a kernel series hits the same (gamma1, gamma2) pair at
// many arguments, so the table pays for itself immediately.
struct GammaTable {
  double g1 = 0, g2 = 0;
  std::vector<long double> inv;

  void grow(std::size_t need, double gamma1, double gamma2) {
    std::size_t from = inv.size();
    inv.resize(need);
    for (std::size_t p = from; p < need; ++p) {
      // argument formed in long double: double rounding here would already
      // cost ~psi(x)*ulp(x) of accuracy in the term
      const long double x = (long double)gamma1 * (long double)p + (long double)gamma2;
      inv[p] = expl(-lgammal(x));
    }
  }
};

GammaTable& gamma_table(double g1, double g2) {
  thread_local std::vector<GammaTable> cache;
  for (auto& t : cache)
    if (t.g1 == g1 && t.g2 == g2) return t;
  if (cache.size() > 64) cache.clear();
  cache.push_back(GammaTable{g1, g2, {}});
  return cache.back();
}

struct FastSum {
  double value = 0;
  double sum_abs = 0;  // sum of |term|: measures cancellation
  bool converged = false;
};

FastSum sum_fast(const MlfParams& p, double z) {
  GammaTable& tab = gamma_table(p.gamma1, p.gamma2);
  long double zp = 1.0L;   // z^p
  long double poch = 1.0L; // (gamma3)_p / p!
  long double sum = 0.0L, comp = 0.0L, sum_abs = 0.0L;
  FastSum out;
  for (int pi = 0; pi < kTermBudget; ++pi) {
    if (std::size_t(pi) >= tab.inv.size()) tab.grow(tab.inv.size() + 128, p.gamma1, p.gamma2);
    const long double term = poch * zp * tab.inv[pi];
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    sum_abs += fabsl(term);
    if (fabsl(term) < 1e-16L * fabsl(sum) || fabsl(term) < 1e-18L) {
      out.converged = true;
      break;
    }
    zp *= (long double)z;
    poch *= (long double)(p.gamma3 + pi) / (long double)(pi + 1);
  }
  out.value = (double)sum;
  out.sum_abs = (double)sum_abs;
  return out;
}

double sum_highprec(const MlfParams& p, double z) {
  using R = boost::multiprecision::cpp_bin_float_100;
  const R g1 = p.gamma1, g2 = p.gamma2;
  R zp = 1, poch = 1;
  R sum = 0, sum_abs = 0;
  for (int pi = 0; pi < kTermBudget; ++pi) {
    const R term = poch * zp * exp(-boost::math::lgamma(g1 * pi + g2));
    sum += term;
    sum_abs += abs(term);
    if (abs(term) < R(1e-35) * abs(sum)) {
      if (sum_abs > abs(sum) * R(1e80))
        throw AccuracyError("mittag_leffler_3p: cancellation exceeds the high-precision budget");
      return sum.convert_to<double>();
    }
    zp *= R(z);
    poch *= R(p.gamma3 + pi) / R(pi + 1);
  }
  throw AccuracyError("mittag_leffler_3p: series did not converge within the term budget");
}

}  // namespace

double mittag_leffler_3p(const MlfParams& params, double z) {
  validate(params, z);
  if (z == 0.0) return 1.0 / std::tgamma(params.gamma2);

  const FastSum fast = sum_fast(params, z);
  if (fast.converged && std::isfinite(fast.value)) {
    // Accept when accumulated roundoff is safely below the accuracy contract
    // (abs <= 1e-12 or rel <= 1e-10); otherwise retry in high precision.
    const double noise = fast.sum_abs * 5e-17;
    if (noise <= std::max(0.5e-12, 0.3e-10 * std::abs(fast.value))) return fast.value;
  } else if (!fast.converged && z > 0.0) {
    throw AccuracyError("mittag_leffler_3p: series did not converge within the term budget");
  }
  if (!std::isfinite(fast.value) && z > 0.0)
    throw AccuracyError("mittag_leffler_3p: value overflows double range");

  if (fast.sum_abs > 0 &&
      std::log10(fast.sum_abs / std::max(std::abs(fast.value), 1e-300)) > 80.0)
    throw AccuracyError("mittag_leffler_3p: cancellation exceeds the high-precision budget");
  return sum_highprec(params, z);
}

}  // namespace frdr::mlf
