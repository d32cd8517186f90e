#include "beurling/jet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace beurling {

namespace {

void require_compatible(const Jet& x, const Jet& y, const char* op) {
  if (x.order() != y.order() || x.base() != y.base()) {
    std::ostringstream os;
    os << "jet " << op << ": operands differ (base " << x.base() << " order " << x.order()
       << " vs base " << y.base() << " order " << y.order() << ")";
    throw StructuralError(os.str());
  }
}

}  // namespace

Jet::Jet(Complex base, std::vector<Complex> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw StructuralError("jet needs at least one coefficient");
}

Jet Jet::constant(Complex base, int order, Complex value) {
  if (order < 0) throw StructuralError("jet order must be non-negative");
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[0] = value;
  return Jet(base, std::move(c));
}

Jet Jet::identity(Complex base, int order) {
  Jet j = constant(base, order, base);
  if (order >= 1) j.coeffs_[1] = 1;
  return j;
}

Jet Jet::polynomial(Complex base, int order, std::span<const Complex> coeffs) {
  Jet j = constant(base, order, 0);
  for (std::size_t l = 0; l < coeffs.size() && l < j.coeffs_.size(); ++l) j.coeffs_[l] = coeffs[l];
  return j;
}

Complex Jet::derivative(int l) const {
  Real factorial = 1;
  for (int k = 2; k <= l; ++k) factorial *= k;
  return (*this)[l] * factorial;
}

Jet Jet::truncated(int order) const {
  if (order < 0 || order > this->order()) throw StructuralError("invalid truncation order");
  return Jet(base_, std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_compatible(*this, rhs, "add");
  for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l] += rhs.coeffs_[l];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_compatible(*this, rhs, "subtract");
  for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l] -= rhs.coeffs_[l];
  return *this;
}

Jet& Jet::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Jet& Jet::operator+=(Complex s) {
  coeffs_[0] += s;
  return *this;
}

Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
Jet operator-(Jet x) { return x *= Complex{-1}; }
Jet operator*(Jet x, Complex s) { return x *= s; }
Jet operator*(Complex s, Jet x) { return x *= s; }
Jet operator+(Jet x, Complex s) { return x += s; }
Jet operator-(Jet x, Complex s) { return x += -s; }

Jet operator*(const Jet& lhs, const Jet& rhs) {
  require_compatible(lhs, rhs, "multiply");
  const int k = lhs.order();
  std::vector<Complex> out(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    if (lhs[i] == Complex{}) continue;
    for (int j = 0; i + j <= k; ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return Jet(lhs.base(), std::move(out));
}

Jet operator/(const Jet& num, const Jet& den) {
  require_compatible(num, den, "divide");
  if (den[0] == Complex{}) throw DomainError("jet division by a series vanishing at its base");
  const int k = num.order();
  std::vector<Complex> q(static_cast<std::size_t>(k) + 1);
  for (int n = 0; n <= k; ++n) {
    Complex acc = num[n];
    for (int i = 1; i <= n; ++i) acc -= den[i] * q[n - i];
    q[n] = acc / den[0];
  }
  return Jet(num.base(), std::move(q));
}

Jet pow(const Jet& x, int exponent) {
  if (exponent < 0) throw StructuralError("negative jet power");
  Jet result = Jet::constant(x.base(), x.order(), 1);
  Jet square = x;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * square;
    if (e > 1) square = square * square;
  }
  return result;
}

Jet exp(const Jet& x) {
  // e' = x' e gives n e_n = sum_{k=1}^{n} k x_k e_{n-k}.
  const int k = x.order();
  std::vector<Complex> e(static_cast<std::size_t>(k) + 1);
  e[0] = std::exp(x[0]);
  for (int n = 1; n <= k; ++n) {
    Complex acc{};
    for (int j = 1; j <= n; ++j) acc += Real(j) * x[j] * e[n - j];
    e[n] = acc / Real(n);
  }
  return Jet(x.base(), std::move(e));
}

Jet compose(const Jet& outer, const Jet& inner, Real match_tol) {
  if (outer.order() != inner.order()) throw StructuralError("jet compose: orders differ");
  if (std::abs(outer.base() - inner.value()) > match_tol) {
    std::ostringstream os;
    os << "jet compose: outer expanded at " << outer.base() << " but inner takes value "
       << inner.value();
    throw StructuralError(os.str());
  }
  // Horner substitution of the increment (inner - inner(base)).
  Jet increment = inner;
  increment += -inner.value();
  const int k = outer.order();
  Jet result = Jet::constant(inner.base(), k, outer[k]);
  for (int l = k - 1; l >= 0; --l) result = result * increment + outer[l];
  return result;
}

std::optional<int> order_of_vanishing(const Jet& x, Real tol) {
  Real scale = 1;
  for (Complex c : x.coeffs()) scale = std::max(scale, std::abs(c));
  const Real threshold = tol * scale;
  for (int l = 0; l <= x.order(); ++l) {
    if (std::abs(x[l]) > threshold) return l;
  }
  return std::nullopt;
}

}  // namespace beurling
