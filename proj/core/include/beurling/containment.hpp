#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beurling/inner.hpp"
#include "beurling/selfmap.hpp"
#include "beurling/verdict.hpp"

namespace beurling {

/// Exact decision procedures for C_phi(theta1 H^p) subset theta2 H^p.
///
/// None of the criteria depend on p, so p is not a parameter anywhere.

/// Multiplicity criterion: contained iff mult_{B2}(w) <= mult_{B1 o phi}(w)
/// for every zero w of B2. Jet orders escalate up to `tol.jet_order_cap`;
/// beyond that InconclusiveError is thrown.
Verdict decide_blaschke(const BlaschkeProduct& b1, const SelfMap& phi, const BlaschkeProduct& b2,
                        const Tolerances& tol = {});

/// Derivative criterion for C_phi(B H^p) subset B H^p: phi maps Z(B) into
/// Z(B), and phi^{(l)}(a_i) = 0 for 1 <= l < ceil(m_i / m_{phi(a_i)})
/// wherever the image zero has lower multiplicity. Always agrees with
/// decide_blaschke(b, phi, b).
Verdict decide_derivative(const BlaschkeProduct& b, const SelfMap& phi, const Tolerances& tol = {});

/// Atomic singular parts under an automorphism: pushes mu1 forward and
/// compares atom by atom against mu2.
Verdict decide_singular(const AtomicMeasure& mu1, const Moebius& phi, const AtomicMeasure& mu2,
                        const Tolerances& tol = {});

/// Rotation z -> lambda z: contained iff mu2({s}) <= mu1({lambda s}) for all atoms s.
Verdict decide_singular_rotation(const AtomicMeasure& mu1, Complex lambda,
                                 const AtomicMeasure& mu2, const Tolerances& tol = {});

/// Elliptic phi with interior fixed point w: conjugates by B_w into a
/// rotation and compares the pushed-forward measures. Throws
/// StructuralError for non-elliptic phi.
Verdict decide_singular_conjugated(const AtomicMeasure& mu1, const Moebius& phi,
                                   const AtomicMeasure& mu2, const Tolerances& tol = {});

/// Automorphism phi: Blaschke and singular parts are decided separately.
Verdict decide_split(const InnerFunction& theta1, const Moebius& phi, const InnerFunction& theta2,
                     const Tolerances& tol = {});

/// Pure Blaschke target: only the Blaschke part of theta1 matters.
Verdict decide_L_membership(const InnerFunction& theta1, const SelfMap& phi,
                            const BlaschkeProduct& target, const Tolerances& tol = {});

struct MonotonicityRow {
  Complex zero;
  int multiplicity = 0;
  Complex image;
  int image_multiplicity = 0;
  bool ok = false;
};

/// mult_B(a_j) <= mult_B(phi(a_j)) table, necessary whenever an automorphism
/// leaves B H^p invariant. Throws StructuralError when phi does not map the
/// zero set into itself.
std::vector<MonotonicityRow> auto_monotonicity(const BlaschkeProduct& b, const Moebius& phi,
                                               const Tolerances& tol = {});

enum class Mode { automatic, blaschke_only, singular_only, split };

const char* to_string(Mode mode);
/// "auto", "blaschke-only", "singular-only" or "split".
Mode parse_mode(const std::string& text);

struct Problem {
  InnerFunction theta1;
  SelfMap phi;
  InnerFunction theta2;
  Mode mode = Mode::automatic;
};

/// Result of routing a Problem through the engine. `verdict` is empty when
/// the problem lies outside the characterized cases; `reason` then says why.
struct Decision {
  std::optional<Verdict> verdict;
  std::string route;
  std::string reason;
};

Decision decide(const Problem& problem, const Tolerances& tol = {});

}  // namespace beurling
