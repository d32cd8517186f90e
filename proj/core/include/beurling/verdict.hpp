#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beurling/selfmap.hpp"
#include "beurling/types.hpp"

namespace beurling {

/// One row of the multiplicity comparison mult_{B2}(w) <= mult_{B1 o phi}(w).
struct ZeroCheck {
  Complex zero;
  int required = 0;
  CompositeMultiplicity observed;
  Complex image;  ///< phi(zero)
  bool ok = false;
  /// observed - required when finite; absent for infinite / exceeded orders.
  std::optional<int> margin() const;
};

/// One row of the atom comparison mu2({s}) <= nu({s}).
struct AtomCheck {
  Real angle = 0;
  Real required = 0;
  Real available = 0;
  bool ok = false;
  Real margin() const { return available - required; }
};

/// Containment decision with its witness table.
///
/// `contained` holds exactly when no row reports a deficit. `boundary_case`
/// marks zero-margin comparisons (the underlying inequalities are non-strict).
struct Verdict {
  bool contained = true;
  bool boundary_case = false;
  std::string route;
  std::vector<ZeroCheck> zeros;
  std::vector<AtomCheck> atoms;
  std::vector<std::string> notes;

  std::vector<ZeroCheck> zero_deficits() const;
  std::vector<AtomCheck> atom_deficits() const;
  /// Recomputes `contained` and `boundary_case` from the rows.
  void settle(Real mass_tol = 1e-9);
};

/// Conjunction of two verdicts; rows are concatenated in input order.
Verdict merge(const Verdict& lhs, const Verdict& rhs, std::string route);

}  // namespace beurling
