#include "beurling/containment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace beurling {

namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

const char* kConstantNote =
    "constant self-map hitting a zero of theta1: theta1 o phi == 0, counted as contained by "
    "convention";

/// Multiplicity of B1 o phi at w, escalating the jet order until it is
/// either known or at least `required`.
CompositeMultiplicity escalated_multiplicity(const BlaschkeProduct& b1, const SelfMap& phi,
                                             Complex w, int required, const Tolerances& tol) {
  int start = 1;
  if (!phi.constant_value()) {
    if (const auto idx = b1.find_zero(phi(w), tol.match)) {
      start = ceil_div(required, b1.zeros()[*idx].multiplicity);
    }
  }
  int order = std::min(start + 2, tol.jet_order_cap);
  for (;;) {
    auto mult = mult_of_composite(b1, phi, w, order, tol);
    if (mult.kind != CompositeMultiplicity::Kind::at_least) return mult;
    if (order >= tol.jet_order_cap) {
      std::ostringstream os;
      os << "order of vanishing at " << w << " exceeds the jet order cap "
         << tol.jet_order_cap;
      throw InconclusiveError(os.str());
    }
    order = std::min(2 * order, tol.jet_order_cap);
  }
}

void add_atom_row(Verdict& v, Real angle, Real required, Real available, const Tolerances& tol) {
  AtomCheck row;
  row.angle = angle;
  row.required = required;
  row.available = available;
  row.ok = required - available <= tol.mass * std::max(Real{1}, required);
  v.atoms.push_back(row);
}

}  // namespace

Verdict decide_blaschke(const BlaschkeProduct& b1, const SelfMap& phi, const BlaschkeProduct& b2,
                        const Tolerances& tol) {
  Verdict v;
  v.route = "blaschke multiplicity criterion";
  bool constant_hit = false;
  for (const auto& zero : b2.zeros()) {
    ZeroCheck row;
    row.zero = zero.point;
    row.required = zero.multiplicity;
    row.image = phi(zero.point);
    row.observed = escalated_multiplicity(b1, phi, zero.point, zero.multiplicity, tol);
    row.ok = row.observed.satisfies(row.required);
    if (row.observed.kind == CompositeMultiplicity::Kind::infinite) constant_hit = true;
    v.zeros.push_back(row);
  }
  if (constant_hit) v.notes.emplace_back(kConstantNote);
  v.settle(tol.mass);
  return v;
}

Verdict decide_derivative(const BlaschkeProduct& b, const SelfMap& phi, const Tolerances& tol) {
  Verdict v;
  v.route = "derivative criterion";
  for (const auto& zero : b.zeros()) {
    ZeroCheck row;
    row.zero = zero.point;
    row.required = zero.multiplicity;
    row.image = phi(zero.point);
    row.observed.image_zero = b.find_zero(row.image, tol.match);
    if (!row.observed.image_zero) {
      // phi must map Z(B) into Z(B).
      row.observed.value = 0;
      row.ok = false;
      v.zeros.push_back(row);
      continue;
    }
    const int image_mult = b.zeros()[*row.observed.image_zero].multiplicity;
    if (zero.multiplicity <= image_mult) {
      // No derivative condition; B o phi vanishes to order >= image_mult.
      row.observed.kind = CompositeMultiplicity::Kind::at_least;
      row.observed.value = image_mult;
      row.ok = true;
      v.zeros.push_back(row);
      continue;
    }
    const int needed = ceil_div(zero.multiplicity, image_mult);
    const Jet j = phi.jet(zero.point, needed + 1, tol.match);
    Real scale = 1;
    for (Complex c : j.coeffs()) scale = std::max(scale, std::abs(c));
    int first_nonzero = needed;
    for (int l = 1; l < needed; ++l) {
      if (std::abs(j[l]) > tol.vanishing * scale) {
        first_nonzero = l;
        break;
      }
    }
    row.ok = first_nonzero >= needed;
    row.observed.kind =
        row.ok ? CompositeMultiplicity::Kind::at_least : CompositeMultiplicity::Kind::finite;
    row.observed.value = image_mult * first_nonzero;
    v.zeros.push_back(row);
  }
  v.settle(tol.mass);
  return v;
}

Verdict decide_singular(const AtomicMeasure& mu1, const Moebius& phi, const AtomicMeasure& mu2,
                        const Tolerances& tol) {
  Verdict v;
  v.route = "singular pushforward domination";
  const AtomicMeasure nu = pushforward(mu1, phi);
  for (const auto& atom : mu2.atoms()) {
    add_atom_row(v, atom.angle, atom.weight, nu.mass_at(atom.angle, tol.angle), tol);
  }
  v.settle(tol.mass);
  return v;
}

Verdict decide_singular_rotation(const AtomicMeasure& mu1, Complex lambda,
                                 const AtomicMeasure& mu2, const Tolerances& tol) {
  if (!is_finite(lambda) || std::fabs(std::abs(lambda) - 1) > 1e-12) {
    throw StructuralError("rotation factor must be unimodular");
  }
  Verdict v;
  v.route = "singular rotation criterion";
  const Real turn = std::arg(lambda);
  for (const auto& atom : mu2.atoms()) {
    add_atom_row(v, atom.angle, atom.weight, mu1.mass_at(atom.angle + turn, tol.angle), tol);
  }
  v.settle(tol.mass);
  return v;
}

Verdict decide_singular_conjugated(const AtomicMeasure& mu1, const Moebius& phi,
                                   const AtomicMeasure& mu2, const Tolerances& tol) {
  const auto cls = classify(phi);
  if (cls.kind != AutomorphismKind::elliptic) {
    throw StructuralError(std::string("conjugation route needs an elliptic automorphism, got ") +
                          to_string(cls.kind));
  }
  const Complex omega = cls.fixed_points.front().point;
  const Moebius b_omega = Moebius::blaschke_factor(omega);
  const AtomicMeasure nu1 = pushforward(mu1, b_omega);
  const AtomicMeasure nu2 = pushforward(mu2, b_omega);
  // psi = B_w o phi o B_w fixes 0, hence psi(z) = lambda z with lambda = -gamma.
  const Moebius psi = compose(b_omega, compose(phi, b_omega));
  const Complex lambda = -psi.gamma();
  Verdict v = decide_singular_rotation(nu1, lambda, nu2, tol);
  v.route = "singular conjugation to a rotation";
  std::ostringstream os;
  os << "fixed point " << omega << ", conjugated rotation angle " << std::arg(lambda);
  v.notes.push_back(os.str());
  return v;
}

Verdict decide_split(const InnerFunction& theta1, const Moebius& phi, const InnerFunction& theta2,
                     const Tolerances& tol) {
  const Verdict blaschke =
      decide_blaschke(theta1.blaschke(), SelfMap::moebius(phi), theta2.blaschke(), tol);
  const Verdict singular = decide_singular(theta1.measure(), phi, theta2.measure(), tol);
  return merge(blaschke, singular, "automorphism split (blaschke + singular)");
}

Verdict decide_L_membership(const InnerFunction& theta1, const SelfMap& phi,
                            const BlaschkeProduct& target, const Tolerances& tol) {
  Verdict v = decide_blaschke(theta1.blaschke(), phi, target, tol);
  v.route = "blaschke target";
  if (!theta1.measure().empty()) {
    v.route = "blaschke target (singular factor of theta1 irrelevant)";
    v.notes.emplace_back("singular factor of theta1 ignored: it never affects a Blaschke target");
  }
  return v;
}

std::vector<MonotonicityRow> auto_monotonicity(const BlaschkeProduct& b, const Moebius& phi,
                                               const Tolerances& tol) {
  std::vector<MonotonicityRow> rows;
  for (const auto& zero : b.zeros()) {
    MonotonicityRow row;
    row.zero = zero.point;
    row.multiplicity = zero.multiplicity;
    row.image = phi(zero.point);
    const auto idx = b.find_zero(row.image, tol.match);
    if (!idx) {
      std::ostringstream os;
      os << "auto_monotonicity: phi maps zero " << zero.point << " to " << row.image
         << ", which is not a zero";
      throw StructuralError(os.str());
    }
    row.image_multiplicity = b.zeros()[*idx].multiplicity;
    row.ok = row.multiplicity <= row.image_multiplicity;
    rows.push_back(row);
  }
  return rows;
}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::automatic: return "auto";
    case Mode::blaschke_only: return "blaschke-only";
    case Mode::singular_only: return "singular-only";
    case Mode::split: return "split";
  }
  return "auto";
}

Mode parse_mode(const std::string& text) {
  if (text == "auto") return Mode::automatic;
  if (text == "blaschke-only") return Mode::blaschke_only;
  if (text == "singular-only") return Mode::singular_only;
  if (text == "split") return Mode::split;
  throw StructuralError("unknown mode '" + text + "'");
}

Decision decide(const Problem& problem, const Tolerances& tol) {
  const auto& [theta1, phi, theta2, mode] = problem;
  const auto automorphism = phi.as_moebius();
  auto require_automorphism = [&] {
    if (!automorphism) {
      throw StructuralError(std::string("mode ") + to_string(mode) +
                            " requires phi to be a disk automorphism");
    }
    return *automorphism;
  };

  Decision d;
  switch (mode) {
    case Mode::blaschke_only:
      d.verdict = decide_blaschke(theta1.blaschke(), phi, theta2.blaschke(), tol);
      break;
    case Mode::singular_only:
      d.verdict = decide_singular(theta1.measure(), require_automorphism(), theta2.measure(), tol);
      break;
    case Mode::split:
      d.verdict = decide_split(theta1, require_automorphism(), theta2, tol);
      break;
    case Mode::automatic:
      if (theta2.measure().empty()) {
        d.verdict = decide_L_membership(theta1, phi, theta2.blaschke(), tol);
      } else if (automorphism) {
        d.verdict = decide_split(theta1, *automorphism, theta2, tol);
      } else {
        d.route = "oracle (uncharacterized: non-automorphism phi with singular theta2)";
        d.reason = "inconclusive: outside characterized cases";
        return d;
      }
      break;
  }
  d.route = d.verdict->route;
  return d;
}

}  // namespace beurling
