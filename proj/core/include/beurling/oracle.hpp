#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "beurling/inner.hpp"
#include "beurling/selfmap.hpp"
#include "beurling/verdict.hpp"

namespace beurling {

/// Sampling plan for sup |theta1(phi(z))| / |theta2(z)| over the disk.
struct GridSpec {
  std::vector<Real> radii{0.9, 0.99, 0.999, 0.9999};
  int angular_count = 2048;
  /// Samples closer than this to a zero of theta2 are skipped.
  Real exclusion = 1e-3;
  /// Add 4x-density local sub-grids around the atoms and zeros of theta2.
  bool refine_targets = true;

  /// Throws StructuralError unless radii are strictly increasing in (0, 1),
  /// angular_count >= 1 and exclusion > 0.
  void validate() const;
  /// Superset grid: doubled angular count plus the midpoints towards 1 of
  /// every radius. The sup over it never decreases.
  GridSpec refined() const;
};

enum class OracleFlag { bounded_consistent, blowup_detected, inconclusive };

const char* to_string(OracleFlag flag);

struct OracleThresholds {
  Real bounded_slack = 1e-6;  ///< bounded_consistent when sup <= 1 + slack
  Real blowup = 10;           ///< blowup_detected when sup > blowup
};

struct OracleReport {
  Real sup_estimate = 0;
  /// log of sup_estimate; stays finite when the estimate itself overflows.
  Real log_sup = -1e300;
  Complex argmax{};
  std::int64_t samples_used = 0;
  OracleFlag flag = OracleFlag::inconclusive;
};

/// Estimate of sup |theta1 o phi / theta2| on the grid (moduli are combined
/// in log space so that vanishing singular factors do not underflow).
OracleReport sup_quotient(const InnerFunction& theta1, const SelfMap& phi,
                          const InnerFunction& theta2, const GridSpec& grid = {},
                          const OracleThresholds& thresholds = {});

/// Targets for a focused search: interior points (zeros of theta2) and
/// boundary angles (atoms of theta2).
struct RefinementTargets {
  std::vector<Complex> points;
  std::vector<Real> angles;
};

RefinementTargets witness_targets(const Verdict& verdict);

/// Dense local sampling very close to the targets: rings of radius 1e-2 down
/// to 1e-8 around points, radii 1 - 10^{-k} (k <= 10) towards boundary angles.
OracleReport sup_quotient_near(const InnerFunction& theta1, const SelfMap& phi,
                               const InnerFunction& theta2, const RefinementTargets& targets,
                               const OracleThresholds& thresholds = {});

struct RadialLimit {
  Complex estimate{};
  bool converged = false;
  int depth_used = 0;
};

/// Evaluates f at (1 - 2^{-j}) t for j = 4..depth; converged once two
/// consecutive steps move by less than 1e-6.
RadialLimit radial_limit_estimate(const std::function<Complex(Complex)>& f, Complex t, int depth);
RadialLimit radial_limit_estimate(const SelfMap& f, Complex t, int depth);
RadialLimit radial_limit_estimate(const InnerFunction& f, Complex t, int depth);

/// max over random interior samples of ||S_mu(phi(z))| - |S_nu(z)|| / |S_nu(z)|.
Real modulus_identity_check(const AtomicMeasure& mu, const Moebius& phi, const AtomicMeasure& nu,
                            int samples, std::uint64_t seed = 0x5eed);

enum class Agreement { consistent, contradiction, soft_inconclusive };

const char* to_string(Agreement agreement);

/// Pure agreement table between an engine verdict and an oracle report.
Agreement classify_agreement(const Verdict& verdict, const OracleReport& report);

struct CrossCheck {
  Agreement agreement = Agreement::soft_inconclusive;
  OracleReport report;
  bool refined = false;
};

/// Runs the grid oracle and, when a refuted verdict meets a bounded grid,
/// refines once near the witness zeros/atoms before answering.
CrossCheck cross_validate(const InnerFunction& theta1, const SelfMap& phi,
                          const InnerFunction& theta2, const Verdict& verdict,
                          const GridSpec& grid = {}, bool refine = true,
                          const OracleThresholds& thresholds = {});

}  // namespace beurling
