#include "beurling/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace beurling {

namespace {

constexpr int kLocalAngles = 64;  // 4 x 16 directions around each target
// Fixed half-width of the window around each atom, so that refining the
// angular count only ever adds samples.
constexpr Real kAtomWindow = kTwoPi / 256;

class SupAccumulator {
 public:
  SupAccumulator(const InnerFunction& theta1, const SelfMap& phi, const InnerFunction& theta2)
      : theta1_(theta1), phi_(phi), theta2_(theta2) {}

  void sample(Complex z) {
    if (!(std::abs(z) < 1)) return;
    try {
      const Real denominator = theta2_.log_modulus(z);
      if (std::isinf(denominator)) return;
      Complex w = phi_(z);
      if (std::abs(w) > 1) w /= std::abs(w);
      const Real numerator = theta1_.log_modulus(w);
      ++count_;
      const Real q = numerator - denominator;
      if (q > log_max_) {
        log_max_ = q;
        argmax_ = z;
      }
    } catch (const DomainError&) {
      // phi(z) landed on a boundary atom of theta1; the sample carries no value.
    }
  }

  OracleReport report(const OracleThresholds& thresholds) const {
    OracleReport r;
    r.samples_used = count_;
    r.argmax = argmax_;
    r.log_sup = log_max_;
    r.sup_estimate = count_ ? std::exp(std::min(log_max_, Real{700})) : 0;
    if (count_ == 0) {
      r.flag = OracleFlag::inconclusive;
    } else if (r.sup_estimate <= 1 + thresholds.bounded_slack) {
      r.flag = OracleFlag::bounded_consistent;
    } else if (r.sup_estimate > thresholds.blowup) {
      r.flag = OracleFlag::blowup_detected;
    } else {
      r.flag = OracleFlag::inconclusive;
    }
    return r;
  }

 private:
  const InnerFunction& theta1_;
  const SelfMap& phi_;
  const InnerFunction& theta2_;
  Real log_max_ = -std::numeric_limits<Real>::infinity();
  Complex argmax_{};
  std::int64_t count_ = 0;
};

bool excluded(Complex z, const BlaschkeProduct& b, Real radius) {
  return std::any_of(b.zeros().begin(), b.zeros().end(),
                     [&](const BlaschkeZero& w) { return std::abs(z - w.point) < radius; });
}

}  // namespace

void GridSpec::validate() const {
  if (radii.empty()) throw StructuralError("grid: at least one radius is required");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0 && radii[i] < 1)) throw StructuralError("grid: radii must lie in (0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw StructuralError("grid: radii must be strictly increasing");
    }
  }
  if (angular_count < 1) throw StructuralError("grid: angular count must be positive");
  if (!(exclusion > 0)) throw StructuralError("grid: exclusion radius must be positive");
}

GridSpec GridSpec::refined() const {
  GridSpec out = *this;
  std::set<Real> r(radii.begin(), radii.end());
  for (Real x : radii) r.insert((1 + x) / 2);
  out.radii.assign(r.begin(), r.end());
  out.angular_count = 2 * angular_count;
  return out;
}

const char* to_string(OracleFlag flag) {
  switch (flag) {
    case OracleFlag::bounded_consistent: return "bounded_consistent";
    case OracleFlag::blowup_detected: return "blowup_detected";
    case OracleFlag::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

OracleReport sup_quotient(const InnerFunction& theta1, const SelfMap& phi,
                          const InnerFunction& theta2, const GridSpec& grid,
                          const OracleThresholds& thresholds) {
  grid.validate();
  SupAccumulator acc(theta1, phi, theta2);
  const auto& zeros2 = theta2.blaschke();
  const Real step = kTwoPi / grid.angular_count;

  for (Real r : grid.radii) {
    for (int j = 0; j < grid.angular_count; ++j) {
      const Complex z = std::polar(r, step * j);
      if (!excluded(z, zeros2, grid.exclusion)) acc.sample(z);
    }
  }

  if (grid.refine_targets) {
    const Real fine = step / 4;
    const int half = static_cast<int>(std::floor(kAtomWindow / fine + 1e-9));
    for (const auto& atom : theta2.measure().atoms()) {
      for (Real r : grid.radii) {
        for (int k = -half; k <= half; ++k) {
          const Complex z = std::polar(r, atom.angle + fine * k);
          if (!excluded(z, zeros2, grid.exclusion)) acc.sample(z);
        }
      }
    }
    for (const auto& zero : zeros2.zeros()) {
      for (int level = 1; level <= 5; ++level) {
        const Real rho = grid.exclusion * std::ldexp(Real{1}, level);
        for (int k = 0; k < kLocalAngles; ++k) {
          const Complex z = zero.point + std::polar(rho, kTwoPi * k / kLocalAngles);
          if (!excluded(z, zeros2, grid.exclusion)) acc.sample(z);
        }
      }
    }
  }
  return acc.report(thresholds);
}

RefinementTargets witness_targets(const Verdict& verdict) {
  RefinementTargets t;
  for (const auto& z : verdict.zero_deficits()) t.points.push_back(z.zero);
  for (const auto& a : verdict.atom_deficits()) t.angles.push_back(a.angle);
  return t;
}

OracleReport sup_quotient_near(const InnerFunction& theta1, const SelfMap& phi,
                               const InnerFunction& theta2, const RefinementTargets& targets,
                               const OracleThresholds& thresholds) {
  SupAccumulator acc(theta1, phi, theta2);
  for (Complex w : targets.points) {
    for (int e = 2; e <= 8; ++e) {
      const Real rho = std::pow(Real{10}, -e);
      for (int k = 0; k < kLocalAngles; ++k) {
        acc.sample(w + std::polar(rho, kTwoPi * (k + Real{0.5}) / kLocalAngles));
      }
    }
  }
  for (Real angle : targets.angles) {
    for (int e = 1; e <= 10; ++e) {
      const Real r = 1 - std::pow(Real{10}, -e);
      for (int k = -4; k <= 4; ++k) {
        acc.sample(std::polar(r, angle + k * (1 - r) / 4));
      }
    }
  }
  return acc.report(thresholds);
}

RadialLimit radial_limit_estimate(const std::function<Complex(Complex)>& f, Complex t, int depth) {
  if (depth < 4) throw StructuralError("radial limit: depth must be >= 4");
  if (std::fabs(std::abs(t) - 1) > 1e-12) throw StructuralError("radial limit: t must be unimodular");
  RadialLimit out;
  Complex previous = f((1 - std::ldexp(Real{1}, -4)) * t);
  out.estimate = previous;
  out.depth_used = 4;
  int calm_steps = 0;
  for (int j = 5; j <= depth; ++j) {
    const Complex value = f((1 - std::ldexp(Real{1}, -j)) * t);
    calm_steps = std::abs(value - previous) < 1e-6 ? calm_steps + 1 : 0;
    previous = value;
    out.estimate = value;
    out.depth_used = j;
    if (calm_steps >= 2) {
      out.converged = true;
      break;
    }
  }
  return out;
}

RadialLimit radial_limit_estimate(const SelfMap& f, Complex t, int depth) {
  return radial_limit_estimate([&](Complex z) { return f(z); }, t, depth);
}

RadialLimit radial_limit_estimate(const InnerFunction& f, Complex t, int depth) {
  return radial_limit_estimate([&](Complex z) { return f(z); }, t, depth);
}

Real modulus_identity_check(const AtomicMeasure& mu, const Moebius& phi, const AtomicMeasure& nu,
                            int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> unit_interval(0, 1);
  Real worst = 0;
  for (int i = 0; i < samples; ++i) {
    // Area-uniform in the disk of radius 0.999.
    const Real r = 0.999 * std::sqrt(unit_interval(rng));
    const Complex z = std::polar(r, kTwoPi * unit_interval(rng));
    const Real lhs = mu.log_modulus(phi(z));
    const Real rhs = nu.log_modulus(z);
    worst = std::max(worst, std::fabs(std::expm1(lhs - rhs)));
  }
  return worst;
}

const char* to_string(Agreement agreement) {
  switch (agreement) {
    case Agreement::consistent: return "consistent";
    case Agreement::contradiction: return "contradiction";
    case Agreement::soft_inconclusive: return "soft-inconclusive";
  }
  return "soft-inconclusive";
}

Agreement classify_agreement(const Verdict& verdict, const OracleReport& report) {
  if (verdict.contained) {
    if (report.flag == OracleFlag::bounded_consistent) return Agreement::consistent;
    if (report.flag == OracleFlag::blowup_detected) return Agreement::contradiction;
    return Agreement::soft_inconclusive;
  }
  if (report.flag == OracleFlag::blowup_detected) return Agreement::consistent;
  return Agreement::soft_inconclusive;
}

CrossCheck cross_validate(const InnerFunction& theta1, const SelfMap& phi,
                          const InnerFunction& theta2, const Verdict& verdict,
                          const GridSpec& grid, bool refine, const OracleThresholds& thresholds) {
  CrossCheck out;
  out.report = sup_quotient(theta1, phi, theta2, grid, thresholds);
  out.agreement = classify_agreement(verdict, out.report);
  if (out.agreement == Agreement::soft_inconclusive && !verdict.contained && refine) {
    const OracleReport local =
        sup_quotient_near(theta1, phi, theta2, witness_targets(verdict), thresholds);
    out.refined = true;
    if (local.samples_used > 0 && local.log_sup > out.report.log_sup) {
      const auto total = out.report.samples_used + local.samples_used;
      out.report = local;
      out.report.samples_used = total;
    } else {
      out.report.samples_used += local.samples_used;
    }
    out.agreement = classify_agreement(verdict, out.report);
  }
  return out;
}

}  // namespace beurling
