#pragma once

#include "frdr/errors.hpp"
#include "frdr/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace frdr::symalg {

// ---------------------------------------------------------------------------
// Polynomials in the time-dependent coordinates of the separable ansatz.
//
// Variables are d(k,i) for the current state and hd(k,i) for the delayed
// state, k in {1,2}, i in {1..3}.
// ---------------------------------------------------------------------------

using VarId = std::uint8_t;

inline constexpr int kMaxIndex = 3;

inline VarId delta_var(int component, int index, bool delayed = false) {
  if (component < 1 || component > 2 || index < 1 || index > kMaxIndex)
    throw ValidationError("delta_var: component in {1,2}, index in 1..3");
  return VarId((delayed ? 6 : 0) + (component - 1) * kMaxIndex + (index - 1));
}
inline int var_component(VarId v) { return (v % 6) / kMaxIndex + 1; }
inline int var_index(VarId v) { return (v % kMaxIndex) + 1; }
inline bool var_delayed(VarId v) { return v >= 6; }
std::string var_name(VarId v);

/// Sorted multiset of variable ids.
using Monomial = std::vector<VarId>;

class DeltaPoly {
 public:
  DeltaPoly() = default;
  static DeltaPoly constant(Scalar c);
  static DeltaPoly variable(VarId v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int degree() const;

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;

  DeltaPoly operator-() const;
  friend DeltaPoly operator+(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator-(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  DeltaPoly scaled(const Scalar& s) const;
  bool operator==(const DeltaPoly& o) const;

  /// Numeric evaluation; `values[VarId]` supplies each variable.
  double eval(const std::array<double, 12>& values) const;

  /// True when no monomial references a delayed variable.
  bool delay_free() const;

  std::string str() const;

  void add_term(Monomial m, Scalar c);  // canonicalizing insert

 private:
  std::map<Monomial, Scalar> terms_;
};

// ---------------------------------------------------------------------------
// The exp-poly-trig algebra: finite sums of  c(d) * x^m e^{rx} {1,cos wx,sin wx}
// closed under multiplication and d/dx, with canonical form unique enough
// that structural equality decides functional equality.
// ---------------------------------------------------------------------------

enum class Trig : std::uint8_t { None = 0, Cos = 1, Sin = 2 };

/// Rates and frequencies within this tolerance are considered equal and merged.
inline constexpr double kRateTol = 1e-12;

struct EptKey {
  int power = 0;   // exponent m of x^m
  Scalar rate;     // lambda in e^{lambda x}
  Trig trig = Trig::None;
  Scalar freq;     // omega > 0 when trig != None

  bool matches(const EptKey& o) const;
  std::string str() const;
};

struct EptTerm {
  EptKey key;
  DeltaPoly coef;
};

class EptFunction {
 public:
  EptFunction() = default;

  static EptFunction zero() { return {}; }
  static EptFunction constant(Scalar c);
  static EptFunction term(DeltaPoly coef, int power, Scalar rate, Trig trig = Trig::None,
                          Scalar freq = Scalar(0));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<EptTerm>& terms() const { return terms_; }

  DeltaPoly coefficient_at(const EptKey& key) const;

  EptFunction operator-() const;
  friend EptFunction operator+(const EptFunction& a, const EptFunction& b);
  friend EptFunction operator-(const EptFunction& a, const EptFunction& b);
  friend EptFunction operator*(const EptFunction& a, const EptFunction& b);
  EptFunction scaled(const Scalar& s) const;
  EptFunction scaled(const DeltaPoly& p) const;

  /// Exact derivative d/dx.
  EptFunction diff() const;

  bool operator==(const EptFunction& o) const;

  /// Numeric value at x; requires every coefficient to be constant.
  double eval_at(double x) const;

  /// Numeric value at x with coordinate values substituted.
  double eval_at(double x, const std::array<double, 12>& delta_values) const;

  std::string str() const;

  void add_term(const EptKey& key, const DeltaPoly& coef);  // canonicalizing insert

 private:
  std::vector<EptTerm> terms_;  // kept sorted by key
};

inline EptFunction ept_mul(const EptFunction& a, const EptFunction& b) { return a * b; }
inline EptFunction ept_diff(const EptFunction& f) { return f.diff(); }

struct ProjectionResult {
  std::vector<DeltaPoly> coords;
  EptFunction remainder;
};

/// Writes f as sum coords_i * basis_i + remainder, splitting by term keys.
/// Basis elements must be single-term functions with pairwise distinct keys.
ProjectionResult ept_project(const EptFunction& f, const std::vector<EptFunction>& basis);

// ---------------------------------------------------------------------------
// Linear constant-coefficient ODEs D^n + mu_{n-1} D^{n-1} + ... + mu_0 and
// their fundamental solution sets.
// ---------------------------------------------------------------------------

struct LinearOdeSpec {
  int order = 2;                      // 1..3
  std::array<Scalar, 3> mu{};        // mu[0..order-1]

  void validate() const {
    if (order < 1 || order > 3) throw ValidationError("LinearOdeSpec: order must be 1..3");
  }
};

/// Fundamental solutions, ordered deterministically: real roots ascending
/// (a repeated root r contributes e^{rx}, x e^{rx}, ...), complex pairs
/// a +- bi contribute e^{ax} sin(bx), e^{ax} cos(bx).
std::vector<EptFunction> basis_from_lode(const LinearOdeSpec& spec);

/// Applies D^n + mu_{n-1} D^{n-1} + ... + mu_0 through exact differentiation.
EptFunction apply_lode_operator(const LinearOdeSpec& spec, const EptFunction& f);

}  // namespace frdr::symalg
