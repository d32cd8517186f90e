#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "beurling/containment.hpp"
#include "beurling/inner.hpp"
#include "beurling/selfmap.hpp"

namespace beurling {

enum class FamilyKind { one_zero, two_zero_equal, two_zero_unequal, fix_all_to_aj, max_mult_selfmap };

const char* to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

/// Element h = scale * blaschke of the closed unit ball of H^infinity.
/// scale = 0 is the zero function.
struct BallElement {
  Complex scale{1};
  BlaschkeProduct blaschke;
};

/// Parameters of one member of an explicit invariance family.
///
///  one_zero          zeros = {(a, m)};            B_a o psi o B_a with psi(0) = 0
///  two_zero_equal    zeros = {(a, n), (b, n)};    branch 0: B_a o (B_a B_b h)
///                                                 branch 1: B_b o (B_a B_b h)
///                                                 branch 2: identity, 3: swap of a and b
///  two_zero_unequal  zeros = {(a, m), (b, n)}, m > n;
///                                                 branch 0: B_a o (B_a B_b h)
///                                                 branch 1: B_b o (B_a^k B_b h), k = ceil(m/n)
///                                                 branch 2: identity
///  fix_all_to_aj     zeros, target j;             B_{a_j} o (h prod B_{a_i}^{k_i}), k_i = ceil(m_i/m_j)
///  max_mult_selfmap  zeros;                       B_{a_k} o B where m_k is the largest multiplicity
///
/// `exponent_shift` perturbs k in two_zero_unequal branch 1; it exists only to
/// build negative controls.
struct FamilySpec {
  FamilyKind kind = FamilyKind::one_zero;
  std::vector<BlaschkeZero> zeros;
  std::size_t target = 0;
  SelfMap psi;
  BallElement h;
  int branch = 0;
  int exponent_shift = 0;

  /// Throws StructuralError when the parameters violate the kind's constraints.
  void validate(Real match_tol = 1e-9) const;
};

/// Blaschke product (gamma = 1) with the spec's zeros and multiplicities.
BlaschkeProduct family_blaschke(const FamilySpec& spec);

SelfMap generate(const FamilySpec& spec);

/// decide_blaschke(B, generate(spec), B); B must carry the spec's zeros.
Verdict verify_family_roundtrip(const FamilySpec& spec, const BlaschkeProduct& b,
                                const Tolerances& tol = {});

/// Finite, documented pools standing in for "all psi" / "all h":
///  psi: rotations and monomials lambda z^d (d <= 3), Blaschke products with
///       a zero at the origin plus up to two random zeros, and shrunken
///       copies s * (that Blaschke product) with 0 < |s| < 1;
///  h:   constants c with |c| <= 1, unimodular constants, monomials
///       lambda z^d, Blaschke products with one or two random zeros,
///       optionally scaled.
class ParameterPool {
 public:
  explicit ParameterPool(std::uint64_t seed) : rng_(seed) {}

  Complex point_in_disk(Real max_radius = 0.85);
  Complex unimodular();
  SelfMap psi();
  BallElement h();
  /// h drawn from the constant part of the pool (no zeros anywhere).
  BallElement constant_h();
  /// A valid random spec of the given kind with at most `max_zeros` zeros.
  FamilySpec spec(FamilyKind kind, int max_zeros = 4, int max_multiplicity = 4);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct RigidityRow {
  std::vector<std::size_t> cycle;  ///< zero indices, cycled in order
  bool realizable = false;         ///< an automorphism performs this cycle
  bool contained = false;          ///< engine verdict for that automorphism
  std::vector<MonotonicityRow> monotonicity;
};

struct RigidityReport {
  std::vector<RigidityRow> rows;
  int random_trials = 0;
  int random_contained = 0;
  /// No nontrivial automorphism (enumerated or random) passed the engine.
  bool all_refuted = true;
};

/// True when the multiplicities (sorted ascending) satisfy
/// m_{n-2} < m_{n-1} < m_n (m_1 < m_2 for n = 2).
bool satisfies_rigidity_hypothesis(const BlaschkeProduct& b);

/// Exhaustive cycle scan over all subsets of the zeros (at most 8) plus
/// `trials` random automorphisms. Throws StructuralError when the
/// multiplicity hypothesis fails.
RigidityReport automorphism_rigidity_scan(const BlaschkeProduct& b, int trials,
                                          std::uint64_t seed = 7, const Tolerances& tol = {});

}  // namespace beurling
