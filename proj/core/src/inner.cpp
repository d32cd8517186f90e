#include "beurling/inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace beurling {

namespace {

void check_closed_disk(Complex z, const char* who) {
  if (!is_finite(z) || std::abs(z) > 1 + 1e-12) {
    std::ostringstream os;
    os << who << ": point " << z << " lies outside the closed disk";
    throw DomainError(os.str());
  }
}

Complex require_unimodular(Complex c, const char* who) {
  if (!is_finite(c) || std::fabs(std::abs(c) - 1) > 1e-12) {
    std::ostringstream os;
    os << who << ": constant " << c << " is not unimodular";
    throw StructuralError(os.str());
  }
  return c / std::abs(c);
}

}  // namespace

Complex blaschke_normalizer(Complex a) {
  const Real r = std::abs(a);
  return r == 0 ? Complex{-1} : r / a;
}

BlaschkeProduct::BlaschkeProduct(Complex gamma, std::vector<BlaschkeZero> zeros, Real match_tol)
    : gamma_(require_unimodular(gamma, "blaschke product")), zeros_(std::move(zeros)) {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    const auto& z = zeros_[i];
    if (!is_finite(z.point) || std::abs(z.point) >= 1) {
      std::ostringstream os;
      os << "blaschke product: zero " << z.point << " is not inside the open disk";
      throw StructuralError(os.str());
    }
    if (z.multiplicity < 1) throw StructuralError("blaschke product: multiplicity must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(zeros_[j].point - z.point) <= match_tol) {
        std::ostringstream os;
        os << "blaschke product: zeros " << zeros_[j].point << " and " << z.point
           << " are not distinct";
        throw StructuralError(os.str());
      }
    }
  }
}

int BlaschkeProduct::degree() const {
  return std::accumulate(zeros_.begin(), zeros_.end(), 0,
                         [](int acc, const BlaschkeZero& z) { return acc + z.multiplicity; });
}

int BlaschkeProduct::max_multiplicity() const {
  int m = 0;
  for (const auto& z : zeros_) m = std::max(m, z.multiplicity);
  return m;
}

Complex BlaschkeProduct::operator()(Complex z) const {
  check_closed_disk(z, "blaschke product");
  Complex value = gamma_;
  for (const auto& zero : zeros_) {
    const Complex a = zero.point;
    const Complex factor = blaschke_normalizer(a) * (a - z) / (Real{1} - std::conj(a) * z);
    value *= std::pow(factor, zero.multiplicity);
  }
  return value;
}

Real BlaschkeProduct::log_modulus(Complex z) const {
  check_closed_disk(z, "blaschke product");
  Real total = 0;
  for (const auto& zero : zeros_) {
    const Complex a = zero.point;
    const Real r = std::abs(a - z) / std::abs(Real{1} - std::conj(a) * z);
    if (r == 0) return -std::numeric_limits<Real>::infinity();
    total += zero.multiplicity * std::log(r);
  }
  return total;
}

Jet BlaschkeProduct::jet(Complex at, int order) const {
  Jet result = Jet::constant(at, order, gamma_);
  for (const auto& zero : zeros_) {
    const Moebius factor(blaschke_normalizer(zero.point), zero.point);
    result = result * pow(moebius_jet(factor, at, order), zero.multiplicity);
  }
  return result;
}

std::optional<std::size_t> BlaschkeProduct::find_zero(Complex w, Real tol) const {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (std::abs(zeros_[i].point - w) <= tol) return i;
  }
  return std::nullopt;
}

int BlaschkeProduct::multiplicity_at(Complex w, Real tol) const {
  const auto idx = find_zero(w, tol);
  return idx ? zeros_[*idx].multiplicity : 0;
}

BlaschkeProduct BlaschkeProduct::with_gamma(Complex gamma) const {
  BlaschkeProduct copy = *this;
  copy.gamma_ = require_unimodular(gamma, "blaschke product");
  return copy;
}

BlaschkeProduct operator*(const BlaschkeProduct& lhs, const BlaschkeProduct& rhs) {
  std::vector<BlaschkeZero> zeros = lhs.zeros();
  for (const auto& z : rhs.zeros()) {
    if (const auto idx = lhs.find_zero(z.point)) {
      zeros[*idx].multiplicity += z.multiplicity;
    } else {
      zeros.push_back(z);
    }
  }
  return BlaschkeProduct(lhs.gamma() * rhs.gamma(), std::move(zeros));
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, Real angle_tol) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto& atom = atoms_[i];
    if (!std::isfinite(atom.angle) || !std::isfinite(atom.weight)) {
      throw StructuralError("atomic measure: non-finite atom");
    }
    if (atom.weight <= 0) throw StructuralError("atomic measure: weights must be positive");
    atom.angle = wrap_angle(atom.angle);
    for (std::size_t j = 0; j < i; ++j) {
      if (angular_distance(atoms_[j].angle, atom.angle) <= angle_tol) {
        std::ostringstream os;
        os << "atomic measure: atoms at angles " << atoms_[j].angle << " and " << atom.angle
           << " are not distinct";
        throw StructuralError(os.str());
      }
    }
  }
}

Real AtomicMeasure::total_mass() const {
  Real m = 0;
  for (const auto& a : atoms_) m += a.weight;
  return m;
}

Real AtomicMeasure::mass_at(Real angle, Real tol) const {
  for (const auto& a : atoms_) {
    if (angular_distance(a.angle, angle) <= tol) return a.weight;
  }
  return 0;
}

Complex AtomicMeasure::singular_eval(Complex z) const {
  check_closed_disk(z, "singular inner function");
  Complex exponent{};
  for (const auto& atom : atoms_) {
    const Complex t = atom.point();
    if (std::abs(t - z) <= 1e-15) {
      throw DomainError("singular inner function: evaluation at an atom (essential singularity)");
    }
    exponent -= atom.weight * (t + z) / (t - z);
  }
  return std::exp(exponent);
}

Real AtomicMeasure::log_modulus(Complex z) const {
  check_closed_disk(z, "singular inner function");
  Real total = 0;
  const Real poisson_num = std::max(Real{0}, 1 - std::norm(z));
  for (const auto& atom : atoms_) {
    const Real d2 = std::norm(atom.point() - z);
    if (d2 == 0) throw DomainError("singular inner function: evaluation at an atom");
    total -= atom.weight * poisson_num / d2;
  }
  return total;
}

Jet AtomicMeasure::singular_jet(Complex at, int order) const {
  if (std::abs(at) >= 1) throw DomainError("singular inner function: jet base must lie in D");
  Jet exponent = Jet::constant(at, order, 0);
  for (const auto& atom : atoms_) {
    const Complex t = atom.point();
    const std::array<Complex, 2> num{t + at, 1};
    const std::array<Complex, 2> den{t - at, -1};
    exponent -= (Jet::polynomial(at, order, num) / Jet::polynomial(at, order, den)) *
                Complex{atom.weight};
  }
  return exp(exponent);
}

AtomicMeasure AtomicMeasure::scaled(Real factor) const {
  std::vector<Atom> atoms = atoms_;
  for (auto& a : atoms) a.weight *= factor;
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure pushforward(const AtomicMeasure& mu, const Moebius& phi) {
  const Complex p0 = phi(Complex{});
  const Moebius inv = phi.inverse();
  const Real numerator = 1 - std::norm(p0);
  std::vector<Atom> atoms;
  atoms.reserve(mu.atoms().size());
  for (const auto& atom : mu.atoms()) {
    const Complex t = atom.point();
    const Complex s = inv.eval_unchecked(t);
    atoms.push_back({wrap_angle(std::arg(s)), atom.weight * numerator / std::norm(t - p0)});
  }
  return AtomicMeasure(std::move(atoms));
}

InnerFunction::InnerFunction(BlaschkeProduct blaschke, AtomicMeasure measure, Complex alpha)
    : blaschke_(std::move(blaschke)),
      measure_(std::move(measure)),
      alpha_(require_unimodular(alpha, "inner function")) {}

Complex InnerFunction::operator()(Complex z) const {
  return alpha_ * blaschke_(z) * measure_.singular_eval(z);
}

Real InnerFunction::log_modulus(Complex z) const {
  const Real b = blaschke_.log_modulus(z);
  if (std::isinf(b)) return b;
  return b + measure_.log_modulus(z);
}

Jet InnerFunction::jet(Complex at, int order) const {
  if (std::abs(at) >= 1) throw DomainError("inner function: jet base must lie in D");
  Jet result = blaschke_.jet(at, order) * alpha_;
  if (!measure_.empty()) result = result * measure_.singular_jet(at, order);
  return result;
}

}  // namespace beurling
