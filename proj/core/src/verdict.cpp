#include "beurling/verdict.hpp"

#include <algorithm>
#include <cmath>

namespace beurling {

std::optional<int> ZeroCheck::margin() const {
  if (observed.kind != CompositeMultiplicity::Kind::finite) return std::nullopt;
  return observed.value - required;
}

std::vector<ZeroCheck> Verdict::zero_deficits() const {
  std::vector<ZeroCheck> out;
  std::copy_if(zeros.begin(), zeros.end(), std::back_inserter(out),
               [](const ZeroCheck& z) { return !z.ok; });
  return out;
}

std::vector<AtomCheck> Verdict::atom_deficits() const {
  std::vector<AtomCheck> out;
  std::copy_if(atoms.begin(), atoms.end(), std::back_inserter(out),
               [](const AtomCheck& a) { return !a.ok; });
  return out;
}

void Verdict::settle(Real mass_tol) {
  contained = std::all_of(zeros.begin(), zeros.end(), [](const auto& z) { return z.ok; }) &&
              std::all_of(atoms.begin(), atoms.end(), [](const auto& a) { return a.ok; });
  boundary_case = false;
  for (const auto& z : zeros) {
    if (z.ok && z.margin() == 0) boundary_case = true;
  }
  for (const auto& a : atoms) {
    if (a.ok && std::fabs(a.margin()) <= mass_tol * std::max(Real{1}, a.required)) {
      boundary_case = true;
    }
  }
}

Verdict merge(const Verdict& lhs, const Verdict& rhs, std::string route) {
  Verdict out;
  out.route = std::move(route);
  out.zeros = lhs.zeros;
  out.zeros.insert(out.zeros.end(), rhs.zeros.begin(), rhs.zeros.end());
  out.atoms = lhs.atoms;
  out.atoms.insert(out.atoms.end(), rhs.atoms.begin(), rhs.atoms.end());
  out.notes = lhs.notes;
  out.notes.insert(out.notes.end(), rhs.notes.begin(), rhs.notes.end());
  out.contained = lhs.contained && rhs.contained;
  out.boundary_case = lhs.boundary_case || rhs.boundary_case;
  return out;
}

}  // namespace beurling
