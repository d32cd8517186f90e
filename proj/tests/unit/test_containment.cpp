#include <doctest.h>

#include <set>

#include "beurling/beurling.hpp"
#include "oracles.hpp"

using namespace beurling;
using beurling::testing::Random;
using beurling::testing::unnormalized_product;

namespace {

SelfMap blaschke_then(Complex a, const std::vector<BlaschkeZero>& inner) {
  return SelfMap::chain({SelfMap::moebius(Moebius::blaschke_factor(a)),
                         SelfMap::inner(unnormalized_product(inner))});
}

/// phi(Z(B)) subset Z(B), evaluated pointwise.
bool maps_zeros_into_zeros(const BlaschkeProduct& b, const SelfMap& phi) {
  return std::all_of(b.zeros().begin(), b.zeros().end(),
                     [&](const BlaschkeZero& z) { return b.find_zero(phi(z.point)).has_value(); });
}

}  // namespace

TEST_CASE("one-zero family member is contained") {
  const Complex a{0.3, 0};
  const BlaschkeProduct b(unit(0.4), {{a, 3}});
  const Moebius ba = Moebius::blaschke_factor(a);
  const SelfMap phi = SelfMap::chain({SelfMap::moebius(ba), SelfMap::inner(BlaschkeProduct(1, {{0, 2}})),
                                      SelfMap::moebius(ba)});
  const Verdict v = decide_blaschke(b, phi, b);
  CHECK(v.contained);
  REQUIRE(v.zeros.size() == 1);
  CHECK(v.zeros[0].observed.value == 6);
  CHECK(std::abs(v.zeros[0].image - a) < 1e-12);
}

TEST_CASE("unequal multiplicities need vanishing derivatives") {
  const Complex a1{0.4, 0.1}, a2{-0.3, 0.2};
  const BlaschkeProduct b(1, {{a1, 3}, {a2, 2}});
  // phi(a1) = a2 with phi'(a1) != 0, phi(a2) = a2.
  const SelfMap phi = blaschke_then(a2, {{a1, 1}, {a2, 1}});
  const Verdict v = decide_blaschke(b, phi, b);
  CHECK_FALSE(v.contained);
  const auto deficits = v.zero_deficits();
  REQUIRE(deficits.size() == 1);
  CHECK(std::abs(deficits[0].zero - a1) < 1e-12);
  CHECK(deficits[0].required == 3);
  CHECK(deficits[0].observed.value == 2);
  CHECK_FALSE(decide_derivative(b, phi).contained);

  // Raising the power of B_{a1} to ceil(3/2) = 2 restores containment.
  const SelfMap fixed = blaschke_then(a2, {{a1, 2}, {a2, 1}});
  CHECK(decide_blaschke(b, fixed, b).contained);
  CHECK(decide_derivative(b, fixed).contained);
}

TEST_CASE("necessity counterexample") {
  const Complex aj{0.1, 0.6}, ak{-0.5, -0.1};
  const BlaschkeProduct b(1, {{aj, 4}, {ak, 1}});
  const SelfMap phi = blaschke_then(ak, {{aj, 1}, {ak, 1}});
  const Verdict v = decide_blaschke(b, phi, b);
  CHECK_FALSE(v.contained);
  const auto deficits = v.zero_deficits();
  REQUIRE(deficits.size() == 1);
  CHECK(deficits[0].required == 4);
  CHECK(deficits[0].observed.value == 1);
}

TEST_CASE("derivative criterion examples") {
  Random rng(1);
  const Complex a{0.2, 0.3}, b{-0.4, -0.1};
  const BlaschkeProduct equal(1, {{a, 2}, {b, 2}});
  CHECK(decide_derivative(equal, SelfMap::moebius(swap_map(a, b))).contained);
  CHECK(decide_derivative(equal, SelfMap::constant(a)).contained);
  CHECK_FALSE(decide_derivative(equal, SelfMap::constant(0.7)).contained);

  const BlaschkeProduct fix(1, {{a, 2}, {b, 1}});
  CHECK(decide_derivative(fix, blaschke_then(b, {{a, 2}, {b, 1}})).contained);
  CHECK(decide_blaschke(fix, blaschke_then(b, {{a, 2}, {b, 1}}), fix).contained);

  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct r = rng.blaschke(4, 4);
    CHECK(decide_derivative(r, SelfMap::identity()).contained);
    CHECK(decide_blaschke(r, SelfMap::identity(), r).contained);
  }
}

TEST_CASE("constant maps hitting a zero are contained by convention") {
  const BlaschkeProduct b(1, {{0.5, 2}});
  const Verdict v = decide_blaschke(b, SelfMap::constant(0.5), b);
  CHECK(v.contained);
  CHECK_FALSE(v.notes.empty());
}

TEST_CASE("jet order cap yields an inconclusive error") {
  const BlaschkeProduct z(1, {{0, 1}});
  const BlaschkeProduct z70(1, {{0, 70}});
  const SelfMap deep = SelfMap::inner(BlaschkeProduct(1, {{0, 100}}));
  CHECK_THROWS_AS(decide_blaschke(z, deep, z70), InconclusiveError);
  Tolerances generous;
  generous.jet_order_cap = 128;
  CHECK(decide_blaschke(z, deep, z70, generous).contained);
}

TEST_CASE("singular decisions") {
  const AtomicMeasure at_one({{0, 1}});
  const AtomicMeasure at_minus_one({{kPi, 1}});
  const Verdict flip = decide_singular(at_one, Moebius::rotation(-1), at_minus_one);
  CHECK(flip.contained);
  CHECK(flip.boundary_case);
  REQUIRE(flip.atoms.size() == 1);
  CHECK(std::fabs(flip.atoms[0].margin()) < 1e-12);

  const Verdict heavy = decide_singular(at_one, Moebius::identity(), AtomicMeasure({{0, 2}}));
  CHECK_FALSE(heavy.contained);
  REQUIRE(heavy.atom_deficits().size() == 1);
  CHECK(heavy.atom_deficits()[0].margin() == doctest::Approx(-1));

  CHECK_FALSE(decide_singular(at_one, Moebius::identity(), AtomicMeasure({{1.0, 0.1}})).contained);
}

TEST_CASE("rotation route") {
  const Complex omega = unit(kTwoPi / 3);
  const AtomicMeasure roots({{0, 1}, {kTwoPi / 3, 1}, {2 * kTwoPi / 3, 1}});
  CHECK(decide_singular_rotation(roots, omega, roots).contained);

  const AtomicMeasure delta({{0, 1}});
  CHECK_FALSE(decide_singular_rotation(delta, Complex(0, 1), delta).contained);
  CHECK(decide_singular_rotation(delta, Complex(0, 1), AtomicMeasure()).contained);
}

TEST_CASE("conjugation route") {
  Random rng(3);
  const AtomicMeasure roots({{0.2, 1}, {2.5, 0.5}});
  const Complex lambda = unit(1.1);
  CHECK(decide_singular_conjugated(roots, Moebius::rotation(lambda), roots).contained ==
        decide_singular_rotation(roots, lambda, roots).contained);
  CHECK_THROWS_AS(decide_singular_conjugated(roots, Moebius(-1, -0.5), roots), StructuralError);

  for (int i = 0; i < 50; ++i) {
    const Complex w = rng.point(0.7);
    const Moebius bw = Moebius::blaschke_factor(w);
    const Moebius phi = compose(bw, compose(Moebius::rotation(rng.unimodular()), bw));
    const AtomicMeasure mu1 = rng.measure(4);
    const AtomicMeasure mu2 = pushforward(mu1, phi);
    const Verdict exact = decide_singular_conjugated(mu1, phi, mu2);
    CHECK(exact.contained);
    for (const auto& row : exact.atoms) CHECK(std::fabs(row.margin()) <= 1e-9 * std::max(1.0, row.required));
    CHECK_FALSE(decide_singular_conjugated(mu1, phi, mu2.scaled(1.01)).contained);
    CHECK_FALSE(decide_singular(mu1, phi, mu2.scaled(1.01)).contained);
  }
}

TEST_CASE("singular routes agree on random elliptic instances") {
  Random rng(5);
  for (int i = 0; i < 200; ++i) {
    const Complex w = i % 4 == 0 ? Complex{} : rng.point(0.7);
    const Moebius bw = Moebius::blaschke_factor(w);
    const int n = rng.integer(2, 6);
    const Complex lambda = unit(kTwoPi * rng.integer(1, n - 1) / n);
    const Moebius phi = w == Complex{} ? Moebius::rotation(lambda)
                                       : compose(bw, compose(Moebius::rotation(lambda), bw));
    const AtomicMeasure mu1 = rng.measure(4);
    AtomicMeasure mu2 = pushforward(mu1, phi);
    if (rng.integer(0, 1)) mu2 = mu2.scaled(rng.uniform(0.5, 1.5));
    if (rng.integer(0, 3) == 0) mu2 = rng.measure(3);
    const bool direct = decide_singular(mu1, phi, mu2).contained;
    CHECK(decide_singular_conjugated(mu1, phi, mu2).contained == direct);
    if (w == Complex{}) CHECK(decide_singular_rotation(mu1, lambda, mu2).contained == direct);
  }
}

TEST_CASE("split decisions") {
  const Complex a{0.3, -0.2};
  const InnerFunction theta(BlaschkeProduct(1, {{a, 1}}), AtomicMeasure({{0.5, 1}}));
  CHECK(decide_split(theta, Moebius::identity(), theta).contained);

  // B has zeros at +-0.4 swapped by z -> -z; the atom at angle 0.5 moves off itself.
  const InnerFunction sym(BlaschkeProduct(1, {{0.4, 1}, {-0.4, 1}}), AtomicMeasure({{0.5, 1}}));
  const Verdict v = decide_split(sym, Moebius::rotation(-1), sym);
  CHECK_FALSE(v.contained);
  CHECK(v.zero_deficits().empty());
  CHECK_FALSE(v.atom_deficits().empty());

  Random rng(7);
  for (int i = 0; i < 20; ++i) {
    const InnerFunction blaschke_only(rng.blaschke(2, 2), {});
    const InnerFunction with_atoms(blaschke_only.blaschke(), rng.measure(2));
    CHECK_FALSE(decide_split(blaschke_only, rng.moebius(), with_atoms).contained);
  }
}

TEST_CASE("L membership ignores the singular part of theta1") {
  const BlaschkeProduct b(1, {{0.2, 2}, {-0.5, 1}});
  const InnerFunction with_atom(b, AtomicMeasure({{0, 1}}));
  CHECK(decide_L_membership(with_atom, SelfMap::identity(), b).contained);

  const InnerFunction singular_only(BlaschkeProduct(), AtomicMeasure({{0, 1}}));
  CHECK_FALSE(decide_L_membership(singular_only, SelfMap::identity(), b).contained);

  const BlaschkeProduct c(1, {{0.4, 3}, {-0.3, 2}});
  const SelfMap bad = blaschke_then(-0.3, {{0.4, 1}, {-0.3, 1}});
  CHECK_FALSE(decide_blaschke(c, bad, c).contained);
  CHECK_FALSE(decide_L_membership(InnerFunction(c, AtomicMeasure({{1, 2}})), bad, c).contained);
}

TEST_CASE("extra inner factors keep L membership") {
  Random rng(9);
  for (int i = 0; i < 50; ++i) {
    const BlaschkeProduct b = rng.blaschke(3, 3);
    const InnerFunction theta1(b, rng.measure(2));
    const SelfMap phi = rng.integer(0, 1) ? SelfMap::identity() : SelfMap::moebius(rng.moebius());
    if (!decide_L_membership(theta1, phi, b).contained) continue;
    BlaschkeProduct extra;
    for (;;) {
      extra = rng.blaschke(2, 2);
      bool clash = false;
      for (const auto& z : extra.zeros()) clash = clash || b.find_zero(z.point, 1e-3).has_value();
      if (!clash) break;
    }
    const InnerFunction bigger(b * extra, rng.measure(3));
    CHECK(decide_L_membership(bigger, phi, b).contained);
  }
}

TEST_CASE("monotonicity table") {
  const Complex a{0.2, 0.1}, b{-0.3, 0.5};
  const BlaschkeProduct bb(1, {{a, 2}, {b, 1}});
  const auto rows = auto_monotonicity(bb, swap_map(a, b));
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].ok);
  CHECK(rows[1].ok);
  CHECK_FALSE(decide_blaschke(bb, SelfMap::moebius(swap_map(a, b)), bb).contained);

  const BlaschkeProduct equal(1, {{a, 2}, {b, 2}});
  for (const auto& r : auto_monotonicity(equal, swap_map(a, b))) CHECK(r.ok);
  for (const auto& r : auto_monotonicity(bb, Moebius::identity())) CHECK(r.ok);
  CHECK_THROWS_AS(auto_monotonicity(bb, Moebius::rotation(unit(1.0))), StructuralError);
}

TEST_CASE("contained automorphisms pass the monotonicity table") {
  Random rng(11);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    // Orbits of finite-order elliptic maps give zero sets with automorphic symmetry.
    const int n = rng.integer(2, 4);
    const Complex w = rng.point(0.5);
    const Moebius bw = Moebius::blaschke_factor(w);
    const Moebius phi = compose(bw, compose(Moebius::rotation(unit(kTwoPi / n)), bw));
    std::vector<BlaschkeZero> zeros;
    Complex p = rng.point(0.6);
    for (int k = 0; k < n; ++k, p = phi(p)) zeros.push_back({p, rng.integer(1, 3)});
    const BlaschkeProduct b(1, zeros);
    const Verdict v = decide_blaschke(b, SelfMap::moebius(phi), b);
    if (!v.contained) continue;
    ++checked;
    for (const auto& r : auto_monotonicity(b, phi)) CHECK(r.ok);
  }
  CHECK(checked > 0);
}

TEST_CASE("equal multiplicities reduce to set inclusion") {
  Random rng(13);
  for (int i = 0; i < 200; ++i) {
    const int m = rng.integer(1, 3);
    std::vector<BlaschkeZero> zeros;
    for (Complex p : rng.distinct_points(rng.integer(1, 4))) zeros.push_back({p, m});
    const BlaschkeProduct b(1, zeros);
    SelfMap phi;
    switch (rng.integer(0, 3)) {
      case 0: phi = SelfMap::constant(zeros[rng.integer(0, zeros.size() - 1)].point); break;
      case 1: phi = SelfMap::moebius(rng.moebius()); break;
      case 2:
        phi = zeros.size() >= 2 ? SelfMap::moebius(swap_map(zeros[0].point, zeros[1].point))
                                : SelfMap::identity();
        break;
      default: phi = blaschke_then(zeros[0].point, {{zeros[0].point, 1}}); break;
    }
    CHECK(decide_blaschke(b, phi, b).contained == maps_zeros_into_zeros(b, phi));
    CHECK(decide_derivative(b, phi).contained == maps_zeros_into_zeros(b, phi));
  }
}

TEST_CASE("blaschke and derivative criteria agree") {
  Random rng(15);
  ParameterPool pool(15);
  const FamilyKind kinds[] = {FamilyKind::one_zero, FamilyKind::two_zero_equal, FamilyKind::two_zero_unequal,
                              FamilyKind::fix_all_to_aj, FamilyKind::max_mult_selfmap};
  int contained = 0, refuted = 0;
  for (int i = 0; i < 300; ++i) {
    FamilySpec spec = pool.spec(kinds[i % 5]);
    const BlaschkeProduct b = family_blaschke(spec);
    SelfMap phi = generate(spec);
    if (i % 3 == 1) phi = SelfMap::chain({phi, SelfMap::moebius(swap_map(b.zeros()[0].point, rng.point(0.5)))});
    if (i % 3 == 2) phi = rng.selfmap(1, false);
    const bool lhs = decide_blaschke(b, phi, b).contained;
    CHECK(lhs == decide_derivative(b, phi).contained);
    (lhs ? contained : refuted)++;
  }
  CHECK(contained > 50);
  CHECK(refuted > 50);
}

TEST_CASE("automatic routing") {
  const BlaschkeProduct b(1, {{0.2, 1}});
  const InnerFunction pure(b, {});
  const InnerFunction mixed(b, AtomicMeasure({{0, 1}}));

  Problem p{pure, SelfMap::identity(), pure};
  Decision d = decide(p);
  REQUIRE(d.verdict.has_value());
  CHECK(d.verdict->contained);

  p = {mixed, SelfMap::moebius(Moebius::identity()), mixed};
  d = decide(p);
  REQUIRE(d.verdict.has_value());
  CHECK(d.verdict->contained);

  p = {mixed, SelfMap::inner(BlaschkeProduct(1, {{0.2, 2}})), mixed};
  d = decide(p);
  CHECK_FALSE(d.verdict.has_value());
  CHECK(d.reason.find("inconclusive") != std::string::npos);

  p.mode = Mode::split;
  CHECK_THROWS_AS(decide(p), StructuralError);
  p.mode = Mode::blaschke_only;
  CHECK(decide(p).verdict.has_value());

  CHECK(parse_mode("singular-only") == Mode::singular_only);
  CHECK_THROWS_AS(parse_mode("sometimes"), StructuralError);
}
