#pragma once

#include "frdr/errors.hpp"

namespace frdr::mlf {

/// Parameters of the three-parameter (Prabhakar) Mittag-Leffler function
///
///   E^{g3}_{g1,g2}(z) = sum_{p>=0} Gamma(g3+p) z^p / (p! Gamma(g3) Gamma(g1 p + g2)).
///
/// g1 and g2 must be positive; g3 may be any real (all uses here have
/// g3 = m+1 with integer m >= 0).
struct MlfParams {
  double gamma1;
  double gamma2;
  double gamma3;
};

/// Largest |z| the series evaluation accepts.  Beyond it the routine
/// refuses (AccuracyError) instead of returning a possibly wrong value.
/// Inside the domain, combinations whose series is still astronomically
/// far from its decay regime (small gamma1 with large |z| and gamma3)
/// are also refused rather than mis-summed.
inline constexpr double kMlfDomain = 150.0;

/// Series evaluation with absolute error <= 1e-12 or relative error
/// <= 1e-10, whichever is met first.  Deterministic; thread-safe.
///
/// Throws ValidationError for gamma1 <= 0, gamma2 <= 0 or non-finite
/// input, AccuracyError when |z| > kMlfDomain or the series fails to
/// converge within the term budget.
double mittag_leffler_3p(const MlfParams& params, double z);

}  // namespace frdr::mlf
