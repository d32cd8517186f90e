#include "beurling/types.hpp"

#include <cmath>

namespace beurling {

Tolerances Tolerances::strict() {
  Tolerances t;
  t.vanishing = 1e-11;
  t.match = 1e-11;
  t.angle = 1e-11;
  t.mass = 1e-11;
  return t;
}

Tolerances Tolerances::loose() {
  Tolerances t;
  t.vanishing = 1e-7;
  t.match = 1e-7;
  t.angle = 1e-7;
  t.mass = 1e-7;
  return t;
}

Tolerances Tolerances::profile(const std::string& name) {
  if (name == "default") return Tolerances{};
  if (name == "strict") return strict();
  if (name == "loose") return loose();
  throw StructuralError("unknown tolerance profile '" + name + "'");
}

Real wrap_angle(Real angle) {
  Real r = std::fmod(angle, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0;
  return r;
}

Real angular_distance(Real lhs, Real rhs) {
  Real d = std::fabs(wrap_angle(lhs) - wrap_angle(rhs));
  return d > kPi ? kTwoPi - d : d;
}

}  // namespace beurling
