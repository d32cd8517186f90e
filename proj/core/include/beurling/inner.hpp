#pragma once

#include <optional>
#include <vector>

#include "beurling/jet.hpp"
#include "beurling/moebius.hpp"
#include "beurling/types.hpp"

namespace beurling {

/// Normalising constant alpha_a = |a|/a (and -1 at the origin) that makes
/// alpha_a B_a(0) = |a| >= 0.
Complex blaschke_normalizer(Complex a);

struct BlaschkeZero {
  Complex point;
  int multiplicity = 1;
};

/// Finite Blaschke product gamma * prod (alpha_i B_{a_i})^{m_i}.
///
/// Zeros are pairwise distinct (beyond the match tolerance) and lie strictly
/// inside the disk. The empty product is the constant gamma.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  BlaschkeProduct(Complex gamma, std::vector<BlaschkeZero> zeros, Real match_tol = 1e-9);

  Complex gamma() const { return gamma_; }
  const std::vector<BlaschkeZero>& zeros() const { return zeros_; }
  bool empty() const { return zeros_.empty(); }
  int degree() const;
  int max_multiplicity() const;

  Complex operator()(Complex z) const;
  /// log |B(z)|; -infinity at a zero.
  Real log_modulus(Complex z) const;
  Jet jet(Complex at, int order) const;

  /// Index of the zero within `tol` of w.
  std::optional<std::size_t> find_zero(Complex w, Real tol = 1e-9) const;
  /// Multiplicity of w as a zero (0 when w is not a zero).
  int multiplicity_at(Complex w, Real tol = 1e-9) const;

  BlaschkeProduct with_gamma(Complex gamma) const;

 private:
  Complex gamma_{1};
  std::vector<BlaschkeZero> zeros_;
};

/// Product of two Blaschke products; coincident zeros merge multiplicities.
BlaschkeProduct operator*(const BlaschkeProduct& lhs, const BlaschkeProduct& rhs);

struct Atom {
  Real angle = 0;   ///< in [0, 2*pi)
  Real weight = 0;  ///< > 0
  Complex point() const { return unit(angle); }
};

/// Finite positive atomic measure on the unit circle.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms, Real angle_tol = 1e-12);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  Real total_mass() const;
  /// Mass of the atom within `tol` (angular) of `angle`, else 0.
  Real mass_at(Real angle, Real tol = 1e-9) const;

  /// S_mu(z) = exp(-sum w_k (t_k + z)/(t_k - z)); throws at an atom.
  Complex singular_eval(Complex z) const;
  /// log |S_mu(z)| = -sum w_k (1 - |z|^2)/|t_k - z|^2.
  Real log_modulus(Complex z) const;
  Jet singular_jet(Complex at, int order) const;

  AtomicMeasure scaled(Real factor) const;

 private:
  std::vector<Atom> atoms_;
};

/// Pushforward of mu under an automorphism: the measure nu with
/// (S_mu o phi) H^p = S_nu H^p. Atom t_k moves to phi^{-1}(t_k) with weight
/// w_k (1 - |phi(0)|^2)/|t_k - phi(0)|^2.
AtomicMeasure pushforward(const AtomicMeasure& mu, const Moebius& phi);

/// Inner function alpha * B * S_mu with an atomic singular part.
class InnerFunction {
 public:
  InnerFunction() = default;
  InnerFunction(BlaschkeProduct blaschke, AtomicMeasure measure, Complex alpha = 1);

  const BlaschkeProduct& blaschke() const { return blaschke_; }
  const AtomicMeasure& measure() const { return measure_; }
  Complex alpha() const { return alpha_; }
  /// True when both the Blaschke and singular parts are trivial.
  bool is_constant() const { return blaschke_.empty() && measure_.empty(); }

  Complex operator()(Complex z) const;
  Real log_modulus(Complex z) const;
  Jet jet(Complex at, int order) const;

 private:
  BlaschkeProduct blaschke_;
  AtomicMeasure measure_;
  Complex alpha_{1};
};

}  // namespace beurling
