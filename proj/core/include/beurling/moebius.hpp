#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "beurling/jet.hpp"
#include "beurling/types.hpp"

namespace beurling {

/// Fractional linear map z -> (a z + b) / (c z + d) on the Riemann sphere.
struct FractionalLinear {
  Complex a{1}, b{0}, c{0}, d{1};

  Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
  Complex determinant() const { return a * d - b * c; }
  FractionalLinear inverse() const { return {d, -b, -c, a}; }

  /// Unique map sending z1, z2, z3 to 0, 1, infinity.
  static FractionalLinear to_zero_one_infinity(Complex z1, Complex z2, Complex z3);
  /// Unique map with from[i] -> to[i] for i = 0, 1, 2; inputs must be distinct.
  static FractionalLinear through_three_points(std::span<const Complex, 3> from,
                                               std::span<const Complex, 3> to);
};

FractionalLinear operator*(const FractionalLinear& outer, const FractionalLinear& inner);

/// Disk automorphism z -> gamma (a - z) / (1 - conj(a) z) with |gamma| = 1, |a| < 1.
///
/// The identity is gamma = -1, a = 0; rotations z -> lambda z are gamma = -lambda, a = 0.
class Moebius {
 public:
  /// Validates |gamma| = 1 within 1e-12 (then renormalises) and |a| < 1.
  Moebius(Complex gamma, Complex a);

  static Moebius identity() { return Moebius(Complex{-1}, Complex{}); }
  static Moebius rotation(Complex lambda);
  /// The involution B_a(z) = (a - z) / (1 - conj(a) z).
  static Moebius blaschke_factor(Complex a) { return Moebius(Complex{1}, a); }

  /// Normal-form recovery: returns nullopt unless `map` preserves the disk.
  static std::optional<Moebius> from_fractional_linear(const FractionalLinear& map,
                                                       Real tol = 1e-9);

  Complex gamma() const { return gamma_; }
  Complex zero() const { return a_; }

  /// Requires |z| <= 1 + 1e-12; throws DomainError otherwise.
  Complex operator()(Complex z) const;
  /// Evaluation without the domain check (Riemann-sphere action, z != 1/conj(a)).
  Complex eval_unchecked(Complex z) const;

  FractionalLinear as_fractional_linear() const;
  Moebius inverse() const;
  bool is_identity(Real tol = 1e-12) const;

 private:
  Complex gamma_;
  Complex a_;
};

/// Action of lhs after rhs.
Moebius compose(const Moebius& lhs, const Moebius& rhs);

/// Pointwise agreement of two automorphisms at `samples` points on |z| = 0.9
/// and on the circle; used by tests and by the uniqueness checks.
Real max_deviation(const Moebius& lhs, const Moebius& rhs, int samples = 50);

enum class AutomorphismKind { identity, elliptic, parabolic, hyperbolic };

const char* to_string(AutomorphismKind kind);

struct FixedPoint {
  Complex point;
  bool on_boundary = false;
};

struct AutomorphismClass {
  AutomorphismKind kind;
  /// Interior fixed point for elliptic maps, boundary fixed points otherwise,
  /// empty for the identity.
  std::vector<FixedPoint> fixed_points;
};

AutomorphismClass classify(const Moebius& m, Real boundary_tol = 1e-9);

/// phi_{a,b} = B_a o B_c o B_a with c = B_a(b); swaps a and b.
Moebius swap_map(Complex a, Complex b, Real match_tol = 1e-9);

/// The unique automorphism cycling points[0] -> points[1] -> ... -> points[0],
/// or nullopt when no disk self-map does so.
std::optional<Moebius> cycle_map(std::span<const Complex> points, Real match_tol = 1e-9);

/// Taylor jet of the automorphism at an interior point.
Jet moebius_jet(const Moebius& m, Complex at, int order);

}  // namespace beurling
