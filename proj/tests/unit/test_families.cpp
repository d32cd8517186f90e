#include <doctest.h>

#include "beurling/beurling.hpp"
#include "oracles.hpp"

using namespace beurling;
using beurling::testing::Random;

namespace {

constexpr FamilyKind kAllKinds[] = {FamilyKind::one_zero, FamilyKind::two_zero_equal,
                                    FamilyKind::two_zero_unequal, FamilyKind::fix_all_to_aj,
                                    FamilyKind::max_mult_selfmap};

bool near(Complex x, Complex y, Real tol) { return std::abs(x - y) <= tol; }

}  // namespace

TEST_CASE("one_zero example") {
  FamilySpec s;
  s.kind = FamilyKind::one_zero;
  s.zeros = {{0.3, 2}};
  s.psi = SelfMap::inner(BlaschkeProduct(1, {{0, 2}}));
  const SelfMap phi = generate(s);
  const Moebius ba = Moebius::blaschke_factor(0.3);
  Random rng(1);
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.point(0.9);
    CHECK(near(phi(z), ba(ba(z) * ba(z)), 1e-14));
  }
  CHECK(verify_family_roundtrip(s, family_blaschke(s)).contained);

  s.psi = SelfMap::moebius(Moebius::blaschke_factor(0.5));
  CHECK_THROWS_AS(generate(s), StructuralError);
}

TEST_CASE("two_zero_unequal branch 1 uses k = ceil(m/n)") {
  const Complex a{0.2, 0.1}, b{-0.4, 0.3};
  FamilySpec s;
  s.kind = FamilyKind::two_zero_unequal;
  s.zeros = {{a, 3}, {b, 2}};
  s.branch = 1;
  const SelfMap phi = generate(s);
  const SelfMap expected =
      SelfMap::chain({SelfMap::moebius(Moebius::blaschke_factor(b)),
                      SelfMap::inner(testing::unnormalized_product({{a, 2}, {b, 1}}))});
  Random rng(2);
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.point(0.9);
    CHECK(near(phi(z), expected(z), 1e-13));
  }
  CHECK(verify_family_roundtrip(s, family_blaschke(s)).contained);

  s.zeros = {{a, 2}, {b, 2}};
  CHECK_THROWS_AS(generate(s), StructuralError);
}

TEST_CASE("max_mult_selfmap example") {
  const Complex a{0.5, 0}, b{0, -0.3};
  FamilySpec s;
  s.kind = FamilyKind::max_mult_selfmap;
  s.zeros = {{a, 2}, {b, 1}};
  const BlaschkeProduct bb = family_blaschke(s);
  const SelfMap phi = generate(s);
  const Moebius ba = Moebius::blaschke_factor(a);
  Random rng(3);
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.point(0.9);
    CHECK(near(phi(z), ba(bb(z)), 1e-14));
  }
  CHECK(verify_family_roundtrip(s, bb).contained);
}

TEST_CASE("two_zero_equal branches including identity and swap") {
  ParameterPool pool(4);
  for (int branch = 0; branch < 4; ++branch) {
    for (int i = 0; i < 10; ++i) {
      FamilySpec s = pool.spec(FamilyKind::two_zero_equal);
      s.branch = branch;
      CHECK(verify_family_roundtrip(s, family_blaschke(s)).contained);
    }
  }
}

TEST_CASE("random members of every family are contained") {
  ParameterPool pool(5);
  for (FamilyKind kind : kAllKinds) {
    for (int i = 0; i < 60; ++i) {
      const FamilySpec s = pool.spec(kind);
      const Verdict v = verify_family_roundtrip(s, family_blaschke(s));
      CHECK_MESSAGE(v.contained, to_string(kind));
    }
  }
}

TEST_CASE("fixed points of generated members") {
  ParameterPool pool(6);
  for (int i = 0; i < 50; ++i) {
    const FamilySpec one = pool.spec(FamilyKind::one_zero);
    CHECK(near(generate(one)(one.zeros[0].point), one.zeros[0].point, 1e-11));

    const FamilySpec fix = pool.spec(FamilyKind::fix_all_to_aj);
    const SelfMap phi = generate(fix);
    for (const auto& z : fix.zeros) CHECK(near(phi(z.point), fix.zeros[fix.target].point, 1e-11));
  }
}

TEST_CASE("two_zero_unequal members have the required flat jet at a") {
  ParameterPool pool(7);
  for (int i = 0; i < 50; ++i) {
    FamilySpec s = pool.spec(FamilyKind::two_zero_unequal);
    s.branch = 1;
    s.h = pool.constant_h();
    const int m = s.zeros[0].multiplicity, n = s.zeros[1].multiplicity;
    const int k = (m + n - 1) / n;
    const Jet j = generate(s).jet(s.zeros[0].point, k + 2) - s.zeros[1].point;
    const auto order = order_of_vanishing(j);
    REQUIRE(order.has_value());
    CHECK(*order == k);
  }
}

TEST_CASE("negative controls are refuted") {
  ParameterPool pool(8);
  int controls = 0;
  for (int i = 0; i < 100; ++i) {
    FamilySpec s = pool.spec(FamilyKind::two_zero_unequal);
    s.branch = 1;
    s.h = pool.constant_h();
    s.exponent_shift = -1;
    CHECK_FALSE(verify_family_roundtrip(s, family_blaschke(s)).contained);

    // Exponent 1: phi(a) = b with phi'(a) != 0.
    const int k = (s.zeros[0].multiplicity + s.zeros[1].multiplicity - 1) / s.zeros[1].multiplicity;
    s.exponent_shift = 1 - k;
    CHECK_FALSE(verify_family_roundtrip(s, family_blaschke(s)).contained);
    controls += 2;
  }
  CHECK(controls == 200);
}

TEST_CASE("spec validation") {
  FamilySpec s;
  s.kind = FamilyKind::fix_all_to_aj;
  CHECK_THROWS_AS(s.validate(), StructuralError);
  s.zeros = {{0.1, 1}};
  s.target = 3;
  CHECK_THROWS_AS(s.validate(), StructuralError);
  s.target = 0;
  s.h.scale = 2;
  CHECK_THROWS_AS(s.validate(), StructuralError);
  CHECK_THROWS_AS(parse_family_kind("three_zero"), StructuralError);
  CHECK(parse_family_kind("fix_all_to_aj") == FamilyKind::fix_all_to_aj);

  FamilySpec t;
  t.kind = FamilyKind::one_zero;
  t.zeros = {{0.2, 1}};
  const BlaschkeProduct other(1, {{0.2, 2}});
  CHECK_THROWS_AS(verify_family_roundtrip(t, other), StructuralError);
}

TEST_CASE("rigidity scan for two zeros") {
  const Complex a{0.3, 0.2}, b{-0.1, -0.5};
  const BlaschkeProduct bb(1, {{a, 1}, {b, 2}});
  const RigidityReport r = automorphism_rigidity_scan(bb, 50);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].realizable);
  CHECK_FALSE(r.rows[0].contained);
  bool some_row_fails = false;
  for (const auto& row : r.rows[0].monotonicity) some_row_fails = some_row_fails || !row.ok;
  CHECK(some_row_fails);
  CHECK(r.all_refuted);
  CHECK(r.random_trials == 50);
}

TEST_CASE("rigidity scan for three zeros covers five cycle structures") {
  const BlaschkeProduct b(1, {{Complex(0.3, 0.2), 1}, {Complex(-0.1, -0.5), 2}, {Complex(0.5, -0.4), 3}});
  const RigidityReport r = automorphism_rigidity_scan(b, 20);
  CHECK(r.rows.size() == 5);
  for (const auto& row : r.rows) CHECK_FALSE(row.contained);
  CHECK(r.all_refuted);
}

TEST_CASE("rigidity hypothesis") {
  CHECK_THROWS_AS(automorphism_rigidity_scan(BlaschkeProduct(1, {{0.1, 2}, {-0.3, 2}}), 5), StructuralError);
  CHECK(satisfies_rigidity_hypothesis(BlaschkeProduct(1, {{0.1, 1}, {0.5, 1}, {-0.3, 2}, {0.6, 3}})));
  CHECK_FALSE(satisfies_rigidity_hypothesis(BlaschkeProduct(1, {{0.1, 1}, {-0.3, 3}, {0.6, 3}})));
}
