#pragma once

#include <optional>
#include <span>
#include <vector>

#include "beurling/types.hpp"

namespace beurling {

/// Truncated Taylor expansion of a holomorphic function at a base point.
///
/// Coefficient l holds f^{(l)}(base) / l!, so a jet of order K carries K+1
/// coefficients. Binary arithmetic requires both operands to share base and
/// order; mismatches raise StructuralError.
class Jet {
 public:
  Jet(Complex base, std::vector<Complex> coeffs);

  static Jet constant(Complex base, int order, Complex value);
  /// Jet of z -> z expanded at base.
  static Jet identity(Complex base, int order);
  /// Jet of a polynomial given by coefficients in powers of (z - base).
  static Jet polynomial(Complex base, int order, std::span<const Complex> coeffs);

  Complex base() const { return base_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](int l) const { return coeffs_.at(static_cast<std::size_t>(l)); }
  Complex value() const { return coeffs_.front(); }

  /// l-th derivative at the base point, l! * c_l.
  Complex derivative(int l) const;

  /// Same jet with the base relabelled; used after composition moved it.
  Jet rebased(Complex base) const { return Jet(base, coeffs_); }
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(Complex s);
  Jet& operator+=(Complex s);

 private:
  Complex base_;
  std::vector<Complex> coeffs_;
};

Jet operator+(Jet lhs, const Jet& rhs);
Jet operator-(Jet lhs, const Jet& rhs);
Jet operator-(Jet x);
Jet operator*(const Jet& lhs, const Jet& rhs);
Jet operator*(Jet x, Complex s);
Jet operator*(Complex s, Jet x);
Jet operator+(Jet x, Complex s);
Jet operator-(Jet x, Complex s);

/// Series division; the divisor must not vanish at the base point.
Jet operator/(const Jet& num, const Jet& den);

Jet pow(const Jet& x, int exponent);
Jet exp(const Jet& x);

/// Jet of outer(inner(z)) at inner.base(). The outer jet must be expanded
/// at inner.value(); a mismatch beyond `match_tol` raises StructuralError.
Jet compose(const Jet& outer, const Jet& inner, Real match_tol = 1e-9);

/// Smallest l with |c_l| > tol * max(1, max_j |c_j|), or nullopt when every
/// coefficient is below the threshold (the order exceeds the jet).
std::optional<int> order_of_vanishing(const Jet& x, Real tol = 1e-9);

}  // namespace beurling
