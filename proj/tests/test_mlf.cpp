#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frdr/mlf.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

using frdr::mlf::MlfParams;
using frdr::mlf::mittag_leffler_3p;

namespace {

struct OracleValue {
  double value;
  bool usable;  // converged within 400 terms and cancellation fits 100 digits
};

// Independent oracle: plain 400-term summation in 100-digit floats,
// every intermediate formed at full precision.
OracleValue series_oracle(double g1, double g2, double g3, double z) {
  using R = boost::multiprecision::cpp_bin_float_100;
  R zp = 1, poch = 1, sum = 0, sum_abs = 0, term = 0;
  for (int p = 0; p < 400; ++p) {
    term = poch * zp * exp(-boost::math::lgamma(R(g1) * p + R(g2)));
    sum += term;
    sum_abs += abs(term);
    zp *= R(z);
    poch *= R(g3 + p) / R(p + 1);
  }
  const bool converged = abs(term) < R(1e-30) * abs(sum);
  const bool precise = sum_abs < abs(sum) * R(1e60);
  return {sum.convert_to<double>(), converged && precise};
}

// relative error with a unit floor, so grid points where the reference
// crosses zero are judged on an absolute scale
double relerr(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("classical identities") {
  CHECK(relerr(mittag_leffler_3p({1, 1, 1}, 1.0), std::exp(1.0)) < 1e-12);
  CHECK(relerr(mittag_leffler_3p({2, 1, 1}, -1.0), std::cos(1.0)) < 1e-12);
  CHECK(relerr(mittag_leffler_3p({1, 1, 2}, 1.0), 2.0 * std::exp(1.0)) < 1e-12);
  // z = 0 keeps only the p = 0 term
  CHECK(relerr(mittag_leffler_3p({0.7, 1.3, 2.5}, 0.0), 1.0 / std::tgamma(1.3)) < 1e-14);
  CHECK(mittag_leffler_3p({0.5, 1, 1}, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("identity grids stay within 1e-10 relative") {
  for (int i = 0; i <= 40; ++i) {
    const double z = -10.0 + 0.5 * i;
    CHECK(relerr(mittag_leffler_3p({1, 1, 1}, z), std::exp(z)) < 1e-10);
    CHECK(relerr(mittag_leffler_3p({2, 1, 1}, -z * z), std::cos(z)) < 1e-10);
    CHECK(relerr(mittag_leffler_3p({1, 1, 2}, z), (1.0 + z) * std::exp(z)) < 1e-10);
  }
}

TEST_CASE("agrees with the extended-precision series oracle") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> zdist(-20.0, 20.0);
  std::uniform_real_distribution<double> bdist(0.05, 4.0);
  const double alphas[] = {0.3, 0.5, 0.9, 1.0, 1.3, 1.7, 2.0};
  std::uniform_int_distribution<int> adist(0, 6);
  std::uniform_int_distribution<int> gdist(1, 6);
  int valid = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const double a = alphas[adist(rng)];
    const double b = bdist(rng);
    const int g = gdist(rng);
    const double z = zdist(rng);
    const auto o = series_oracle(a, b, g, z);
    if (!o.usable) continue;  // series not summable in 400 terms / 100 digits
    ++valid;
    const double got = mittag_leffler_3p({a, b, double(g)}, z);
    INFO("a=", a, " b=", b, " g=", g, " z=", z);
    CHECK(relerr(got, o.value) < 1e-10);
  }
  CHECK(valid > 60);  // the filter must not hollow the test out
}

TEST_CASE("positivity bound for nonnegative arguments") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> adist(0.3, 2.0);
  std::uniform_real_distribution<double> bdist(0.1, 4.0);
  std::uniform_int_distribution<int> gdist(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = adist(rng);
    const double b = bdist(rng);
    // stay where the series decays within the term budget and the value
    // fits in double: roughly exp(z^{1/a}) growth
    const double z = u01(rng) * std::min(30.0, std::pow(150.0, a));
    const double v = mittag_leffler_3p({a, b, double(gdist(rng))}, z);
    CHECK(v >= 1.0 / std::tgamma(b) - 1e-12);
  }
}

TEST_CASE("domain and accuracy errors") {
  CHECK_THROWS_AS(mittag_leffler_3p({-0.5, 1, 1}, 1.0), frdr::ValidationError);
  CHECK_THROWS_AS(mittag_leffler_3p({0.5, 0, 1}, 1.0), frdr::ValidationError);
  CHECK_THROWS_AS(mittag_leffler_3p({0.5, 1, 1}, 151.0), frdr::AccuracyError);
  CHECK_THROWS_AS(mittag_leffler_3p({0.5, 1, 1}, -151.0), frdr::AccuracyError);
  // inside the domain but the series cannot decay within the budget
  CHECK_THROWS_AS(mittag_leffler_3p({0.3, 1, 1}, 40.0), frdr::AccuracyError);
}
