#pragma once

// Test-only reference computations. Nothing here calls into the jet or
// composition machinery it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "beurling/beurling.hpp"

namespace beurling::testing {

using Fn = std::function<Complex(Complex)>;

/// Central difference of order l (1..3) along the real direction, with two
/// Richardson steps so the truncation error is O(h^6).
inline Complex central_difference(const Fn& f, Complex z, int l, Real h) {
  auto stencil = [&](Real s) -> Complex {
    switch (l) {
      case 1: return (f(z + s) - f(z - s)) / (2 * s);
      case 2: return (f(z + s) - Real{2} * f(z) + f(z - s)) / (s * s);
      default:
        return (f(z + 2 * s) - Real{2} * f(z + s) + Real{2} * f(z - s) - f(z - 2 * s)) /
               (2 * s * s * s);
    }
  };
  const Complex d1 = stencil(h);
  const Complex d2 = stencil(h / 2);
  const Complex d3 = stencil(h / 4);
  const Complex r1 = (Real{4} * d2 - d1) / Real{3};
  const Complex r2 = (Real{4} * d3 - d2) / Real{3};
  return (Real{16} * r2 - r1) / Real{15};
}

/// Polynomial in powers of z, re-expanded in powers of (z - base) via the
/// binomial theorem.
inline std::vector<Complex> shift_polynomial(const std::vector<Complex>& coeffs, Complex base) {
  const std::size_t n = coeffs.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real binom = 1;
    Complex power{1};
    for (std::size_t j = k; j < n; ++j) {
      // coefficient of (z-base)^k in z^j is C(j,k) base^{j-k}
      out[k] += coeffs[j] * binom * power;
      binom = binom * Real(j + 1) / Real(j + 1 - k);
      power *= base;
    }
  }
  return out;
}

inline std::vector<Complex> multiply_polynomials(const std::vector<Complex>& p,
                                                 const std::vector<Complex>& q) {
  std::vector<Complex> out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

inline Complex eval_polynomial(const std::vector<Complex>& p, Complex z) {
  Complex acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Closed-form B_a(z) = (a - z)/(1 - conj(a) z), independent of Moebius.
inline Complex blaschke_factor(Complex a, Complex z) {
  return (a - z) / (Real{1} - std::conj(a) * z);
}

/// prod B_{a_i}^{m_i} without the normalising constants alpha_i.
inline BlaschkeProduct unnormalized_product(const std::vector<BlaschkeZero>& zeros) {
  Complex gamma{1};
  for (const auto& z : zeros) {
    const Complex alpha = z.point == Complex{} ? Complex{-1} : std::abs(z.point) / z.point;
    gamma *= std::pow(std::conj(alpha), z.multiplicity);
  }
  return BlaschkeProduct(gamma / std::abs(gamma), zeros);
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  Real uniform(Real lo, Real hi) { return std::uniform_real_distribution<Real>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex point(Real max_radius = 0.9) {
    return std::polar(max_radius * std::sqrt(uniform(0, 1)), uniform(0, kTwoPi));
  }
  Complex unimodular() { return unit(uniform(0, kTwoPi)); }
  Complex gaussian() {
    std::normal_distribution<Real> n;
    return {n(rng_), n(rng_)};
  }
  Moebius moebius(Real max_radius = 0.9) { return Moebius(unimodular(), point(max_radius)); }

  std::vector<Complex> distinct_points(int n, Real max_radius = 0.85, Real separation = 0.1) {
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Complex p = point(max_radius);
      if (std::all_of(pts.begin(), pts.end(), [&](Complex q) { return std::abs(p - q) > separation; }))
        pts.push_back(p);
    }
    return pts;
  }

  BlaschkeProduct blaschke(int max_zeros = 3, int max_mult = 3) {
    std::vector<BlaschkeZero> zeros;
    for (Complex p : distinct_points(integer(1, max_zeros))) zeros.push_back({p, integer(1, max_mult)});
    return BlaschkeProduct(unimodular(), std::move(zeros));
  }

  AtomicMeasure measure(int max_atoms = 3, Real max_weight = 1.0) {
    std::vector<Atom> atoms;
    const int n = integer(1, max_atoms);
    while (static_cast<int>(atoms.size()) < n) {
      const Real angle = uniform(0, kTwoPi);
      if (std::all_of(atoms.begin(), atoms.end(),
                      [&](const Atom& a) { return angular_distance(a.angle, angle) > 0.05; }))
        atoms.push_back({angle, uniform(0.05, max_weight)});
    }
    return AtomicMeasure(std::move(atoms));
  }

  /// Random structured self-map; depth bounds the nesting of chains.
  SelfMap selfmap(int depth = 2, bool allow_singular = true) {
    const int pick = integer(0, depth > 0 ? 5 : 4);
    switch (pick) {
      case 0: return SelfMap::moebius(moebius());
      case 1: return SelfMap::inner(blaschke(2, 2));
      case 2: {
        if (!allow_singular) return SelfMap::inner(blaschke(3, 2));
        return SelfMap::inner(InnerFunction(blaschke(2, 2), measure(2, 0.5), unimodular()));
      }
      case 3: return SelfMap::scale(uniform(0.3, 1.0) * unimodular());
      case 4: return SelfMap::moebius(moebius(0.6));
      default: {
        std::vector<SelfMap> parts;
        const int n = integer(2, 3);
        for (int i = 0; i < n; ++i) parts.push_back(selfmap(depth - 1, allow_singular));
        return SelfMap::chain(std::move(parts));
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace beurling::testing
