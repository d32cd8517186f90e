#include "beurling/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace beurling {

FractionalLinear operator*(const FractionalLinear& outer, const FractionalLinear& inner) {
  return {outer.a * inner.a + outer.b * inner.c, outer.a * inner.b + outer.b * inner.d,
          outer.c * inner.a + outer.d * inner.c, outer.c * inner.b + outer.d * inner.d};
}

FractionalLinear FractionalLinear::to_zero_one_infinity(Complex z1, Complex z2, Complex z3) {
  // (z - z1)(z2 - z3) / ((z - z3)(z2 - z1))
  return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

FractionalLinear FractionalLinear::through_three_points(std::span<const Complex, 3> from,
                                                        std::span<const Complex, 3> to) {
  const auto src = to_zero_one_infinity(from[0], from[1], from[2]);
  const auto dst = to_zero_one_infinity(to[0], to[1], to[2]);
  return dst.inverse() * src;
}

Moebius::Moebius(Complex gamma, Complex a) : gamma_(gamma), a_(a) {
  if (!is_finite(gamma) || !is_finite(a)) throw StructuralError("moebius: non-finite parameter");
  if (std::fabs(std::abs(gamma) - 1) > 1e-12) {
    std::ostringstream os;
    os << "moebius: |gamma| = " << std::abs(gamma) << " is not unimodular";
    throw StructuralError(os.str());
  }
  if (std::abs(a) >= 1) {
    std::ostringstream os;
    os << "moebius: zero " << a << " lies outside the open disk";
    throw StructuralError(os.str());
  }
  gamma_ /= std::abs(gamma_);
}

Moebius Moebius::rotation(Complex lambda) {
  return Moebius(-lambda / std::abs(lambda), Complex{});
}

std::optional<Moebius> Moebius::from_fractional_linear(const FractionalLinear& map, Real tol) {
  // gamma (z0 - z) / (1 - conj(z0) z) = (-gamma z + gamma z0) / (-conj(z0) z + 1), so after
  // dividing by d: a/d = -gamma, b/d = gamma z0, c/d = -conj(z0).
  if (std::abs(map.d) == 0 || std::abs(map.a) == 0) return std::nullopt;
  const Complex p = map.a / map.d;
  const Complex q = map.b / map.d;
  const Complex r = map.c / map.d;
  const Complex z0 = -q / p;
  if (!is_finite(z0) || std::abs(z0) >= 1) return std::nullopt;
  const Complex gamma = -p;
  if (std::fabs(std::abs(gamma) - 1) > tol) return std::nullopt;
  if (std::abs(r + std::conj(z0)) > tol) return std::nullopt;
  return Moebius(gamma / std::abs(gamma), z0);
}

Complex Moebius::eval_unchecked(Complex z) const {
  return gamma_ * (a_ - z) / (Real{1} - std::conj(a_) * z);
}

Complex Moebius::operator()(Complex z) const {
  if (std::abs(z) > 1 + 1e-12) {
    std::ostringstream os;
    os << "moebius: point " << z << " lies outside the closed disk";
    throw DomainError(os.str());
  }
  return eval_unchecked(z);
}

FractionalLinear Moebius::as_fractional_linear() const {
  return {-gamma_, gamma_ * a_, -std::conj(a_), Complex{1}};
}

Moebius Moebius::inverse() const {
  // w = gamma B_a(z)  <=>  z = B_a(conj(gamma) w) = conj(gamma) B_{gamma a}(w).
  return Moebius(std::conj(gamma_), gamma_ * a_);
}

bool Moebius::is_identity(Real tol) const {
  return std::abs(a_) <= tol && std::abs(gamma_ + Real{1}) <= tol;
}

Moebius compose(const Moebius& lhs, const Moebius& rhs) {
  const auto m = lhs.as_fractional_linear() * rhs.as_fractional_linear();
  // The product of disk automorphisms is one; only rounding can break the
  // recovery, so use a generous tolerance here.
  auto result = Moebius::from_fractional_linear(m, 1e-6);
  if (!result) throw StructuralError("moebius compose: normal-form recovery failed");
  return *result;
}

Real max_deviation(const Moebius& lhs, const Moebius& rhs, int samples) {
  Real worst = 0;
  for (int k = 0; k < samples; ++k) {
    const Real radius = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 0.9 : 0.35);
    const Complex z = std::polar(radius, kTwoPi * (k + 0.5) / samples);
    worst = std::max(worst, std::abs(lhs(z) - rhs(z)));
  }
  return worst;
}

const char* to_string(AutomorphismKind kind) {
  switch (kind) {
    case AutomorphismKind::identity: return "identity";
    case AutomorphismKind::elliptic: return "elliptic";
    case AutomorphismKind::parabolic: return "parabolic";
    case AutomorphismKind::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

AutomorphismClass classify(const Moebius& m, Real boundary_tol) {
  if (m.is_identity()) return {AutomorphismKind::identity, {}};
  const Complex gamma = m.gamma();
  const Complex a = m.zero();

  // Fixed points solve conj(a) z^2 - (1 + gamma) z + gamma a = 0.
  if (std::abs(a) <= 1e-15) {
    // Rotation: fixed points 0 and infinity.
    return {AutomorphismKind::elliptic, {{Complex{}, false}}};
  }
  const Complex qa = std::conj(a);
  const Complex qb = -(Real{1} + gamma);
  const Complex qc = gamma * a;
  const Complex disc = std::sqrt(qb * qb - Real{4} * qa * qc);
  // Stable root pair: pick the sign that avoids cancellation.
  const Complex s = (std::real(std::conj(qb) * disc) >= 0) ? disc : -disc;
  const Complex w = -(qb + s) / Real{2};
  Complex z1 = w / qa;
  Complex z2 = (w != Complex{}) ? qc / w : z1;
  if (std::abs(z1) > std::abs(z2)) std::swap(z1, z2);

  // The roots satisfy |z1 z2| = 1: either one inside and one outside the
  // disk, or both on the circle.
  if (std::fabs(std::abs(z1) - 1) > boundary_tol && std::abs(z1) < 1) {
    return {AutomorphismKind::elliptic, {{z1, false}}};
  }
  // tr^2 / det = 4 sin^2(arg(gamma)/2) / (1 - |a|^2) equals 4 exactly for parabolic maps.
  const Real half = std::arg(gamma) / 2;
  const Real tau = 4 * std::sin(half) * std::sin(half) / (1 - std::norm(a));
  if (std::fabs(tau - 4) <= 4 * boundary_tol || std::abs(z1 - z2) <= std::sqrt(boundary_tol)) {
    const Complex p = (z1 + z2) / Real{2};
    return {AutomorphismKind::parabolic, {{p / std::abs(p), true}}};
  }
  return {AutomorphismKind::hyperbolic,
          {{z1 / std::abs(z1), true}, {z2 / std::abs(z2), true}}};
}

Moebius swap_map(Complex a, Complex b, Real match_tol) {
  if (std::abs(a) >= 1 || std::abs(b) >= 1) throw StructuralError("swap_map: points must lie in D");
  if (std::abs(a - b) <= match_tol) {
    throw StructuralError("swap_map: degenerate input a = b (use the identity instead)");
  }
  const Moebius ba = Moebius::blaschke_factor(a);
  const Moebius bc = Moebius::blaschke_factor(ba(b));
  return compose(ba, compose(bc, ba));
}

std::optional<Moebius> cycle_map(std::span<const Complex> points, Real match_tol) {
  const std::size_t n = points.size();
  if (n < 2) throw StructuralError("cycle_map: need at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(points[i]) >= 1) throw StructuralError("cycle_map: points must lie in D");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(points[i] - points[j]) <= match_tol) {
        throw StructuralError("cycle_map: points must be distinct");
      }
    }
  }
  if (n == 2) return swap_map(points[0], points[1], match_tol);

  const std::array<Complex, 3> from{points[0], points[1], points[2]};
  const std::array<Complex, 3> to{points[1], points[2], points[3 % n]};
  const auto candidate = FractionalLinear::through_three_points(from, to);
  const auto m = Moebius::from_fractional_linear(candidate, match_tol);
  if (!m) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs((*m)(points[i]) - points[(i + 1) % n]) > match_tol) return std::nullopt;
  }
  if (classify(*m).kind != AutomorphismKind::elliptic) return std::nullopt;
  return m;
}

Jet moebius_jet(const Moebius& m, Complex at, int order) {
  if (std::abs(at) >= 1) throw DomainError("moebius_jet: base point must lie in D");
  const Complex a = m.zero();
  const Complex g = m.gamma();
  const std::array<Complex, 2> num{g * (a - at), -g};
  const std::array<Complex, 2> den{Real{1} - std::conj(a) * at, -std::conj(a)};
  return Jet::polynomial(at, order, num) / Jet::polynomial(at, order, den);
}

}  // namespace beurling
