#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace beurling {

// Only double precision ships; every module spells the scalar through this
// alias so a wider type can be dropped in later.
using Real = double;
using Complex = std::complex<Real>;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched operands, broken type invariants, violated preconditions.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the domain of a function (|z| > 1, boundary atoms).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The engine could not reach a verdict within its work bounds.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Numerical thresholds shared by the engine. Every value is an artifact
/// choice; the underlying mathematics is exact.
struct Tolerances {
  /// Relative threshold for treating a Taylor coefficient as zero.
  Real vanishing = 1e-9;
  /// Absolute distance at which two interior points are considered equal.
  Real match = 1e-9;
  /// Angular distance at which two boundary atoms are considered equal.
  Real angle = 1e-9;
  /// Relative slack when comparing atom masses.
  Real mass = 1e-9;
  /// Upper bound for jet order escalation.
  int jet_order_cap = 64;

  static Tolerances strict();
  static Tolerances loose();
  /// "default", "strict" or "loose"; throws StructuralError otherwise.
  static Tolerances profile(const std::string& name);
};

inline constexpr Real kPi = 3.14159265358979323846;
inline constexpr Real kTwoPi = 2 * kPi;

/// Unit complex number e^{i angle}.
inline Complex unit(Real angle) { return std::polar(Real{1}, angle); }

/// Angle reduced into [0, 2*pi).
Real wrap_angle(Real angle);

/// Distance between two angles measured along the circle, in [0, pi].
Real angular_distance(Real lhs, Real rhs);

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace beurling
