#include "beurling/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace beurling {

namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

/// prod B_{a_i}^{k_i} without the alpha normalisers.
BlaschkeProduct raw_product(std::vector<BlaschkeZero> zeros) {
  Complex gamma{1};
  for (const auto& z : zeros) gamma *= std::pow(std::conj(blaschke_normalizer(z.point)), z.multiplicity);
  return BlaschkeProduct(gamma / std::abs(gamma), std::move(zeros));
}

/// B_{a} o (h * product).
SelfMap outer_factor_after(Complex a, const BallElement& h, const BlaschkeProduct& product) {
  if (h.scale == Complex{}) return SelfMap::constant(a);  // B_a o 0 = a
  std::vector<SelfMap> parts;
  parts.push_back(SelfMap::moebius(Moebius::blaschke_factor(a)));
  if (h.scale != Complex{1}) parts.push_back(SelfMap::scale(h.scale));
  parts.push_back(SelfMap::inner(h.blaschke * product));
  return SelfMap::chain(std::move(parts));
}

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::one_zero: return "one_zero";
    case FamilyKind::two_zero_equal: return "two_zero_equal";
    case FamilyKind::two_zero_unequal: return "two_zero_unequal";
    case FamilyKind::fix_all_to_aj: return "fix_all_to_aj";
    case FamilyKind::max_mult_selfmap: return "max_mult_selfmap";
  }
  return "one_zero";
}

FamilyKind parse_family_kind(const std::string& text) {
  for (auto kind : {FamilyKind::one_zero, FamilyKind::two_zero_equal, FamilyKind::two_zero_unequal,
                    FamilyKind::fix_all_to_aj, FamilyKind::max_mult_selfmap}) {
    if (text == to_string(kind)) return kind;
  }
  throw StructuralError("unknown family kind '" + text + "'");
}

void FamilySpec::validate(Real match_tol) const {
  // Construction checks distinctness and disk membership.
  (void)BlaschkeProduct(Complex{1}, zeros, match_tol);
  if (!is_finite(h.scale) || std::abs(h.scale) > 1 + 1e-12) {
    throw StructuralError("family: multiplier must lie in the closed unit ball");
  }
  auto need_zeros = [&](std::size_t n) {
    if (zeros.size() != n) {
      throw StructuralError(std::string("family ") + to_string(kind) + " needs exactly " +
                            std::to_string(n) + " zero(s)");
    }
  };
  switch (kind) {
    case FamilyKind::one_zero:
      need_zeros(1);
      if (std::abs(psi(Complex{})) > match_tol) {
        throw StructuralError("family one_zero: psi must fix the origin");
      }
      break;
    case FamilyKind::two_zero_equal:
      need_zeros(2);
      if (zeros[0].multiplicity != zeros[1].multiplicity) {
        throw StructuralError("family two_zero_equal: multiplicities must agree");
      }
      if (branch < 0 || branch > 3) throw StructuralError("family two_zero_equal: branch in 0..3");
      break;
    case FamilyKind::two_zero_unequal:
      need_zeros(2);
      if (!(zeros[0].multiplicity > zeros[1].multiplicity)) {
        throw StructuralError("family two_zero_unequal: requires m > n >= 1");
      }
      if (branch < 0 || branch > 2) throw StructuralError("family two_zero_unequal: branch in 0..2");
      if (ceil_div(zeros[0].multiplicity, zeros[1].multiplicity) + exponent_shift < 1) {
        throw StructuralError("family two_zero_unequal: shifted exponent must stay >= 1");
      }
      break;
    case FamilyKind::fix_all_to_aj:
      if (zeros.empty()) throw StructuralError("family fix_all_to_aj: needs at least one zero");
      if (target >= zeros.size()) throw StructuralError("family fix_all_to_aj: target out of range");
      break;
    case FamilyKind::max_mult_selfmap:
      if (zeros.empty()) throw StructuralError("family max_mult_selfmap: needs at least one zero");
      break;
  }
}

BlaschkeProduct family_blaschke(const FamilySpec& spec) {
  return BlaschkeProduct(Complex{1}, spec.zeros);
}

SelfMap generate(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::one_zero: {
      const auto ba = SelfMap::moebius(Moebius::blaschke_factor(spec.zeros[0].point));
      return SelfMap::chain({ba, spec.psi, ba});
    }
    case FamilyKind::two_zero_equal: {
      const Complex a = spec.zeros[0].point;
      const Complex b = spec.zeros[1].point;
      const auto both = raw_product({{a, 1}, {b, 1}});
      switch (spec.branch) {
        case 0: return outer_factor_after(a, spec.h, both);
        case 1: return outer_factor_after(b, spec.h, both);
        case 2: return SelfMap::identity();
        default: return SelfMap::moebius(swap_map(a, b));
      }
    }
    case FamilyKind::two_zero_unequal: {
      const Complex a = spec.zeros[0].point;
      const Complex b = spec.zeros[1].point;
      const int k = ceil_div(spec.zeros[0].multiplicity, spec.zeros[1].multiplicity) +
                    spec.exponent_shift;
      switch (spec.branch) {
        case 0: return outer_factor_after(a, spec.h, raw_product({{a, 1}, {b, 1}}));
        case 1: return outer_factor_after(b, spec.h, raw_product({{a, k}, {b, 1}}));
        default: return SelfMap::identity();
      }
    }
    case FamilyKind::fix_all_to_aj: {
      const int mj = spec.zeros[spec.target].multiplicity;
      std::vector<BlaschkeZero> powers;
      for (const auto& z : spec.zeros) powers.push_back({z.point, ceil_div(z.multiplicity, mj)});
      return outer_factor_after(spec.zeros[spec.target].point, spec.h, raw_product(powers));
    }
    case FamilyKind::max_mult_selfmap: {
      const auto top = std::max_element(
          spec.zeros.begin(), spec.zeros.end(),
          [](const BlaschkeZero& l, const BlaschkeZero& r) { return l.multiplicity < r.multiplicity; });
      return SelfMap::chain({SelfMap::moebius(Moebius::blaschke_factor(top->point)),
                             SelfMap::inner(family_blaschke(spec))});
    }
  }
  throw StructuralError("family: unreachable kind");
}

Verdict verify_family_roundtrip(const FamilySpec& spec, const BlaschkeProduct& b,
                                const Tolerances& tol) {
  if (b.zeros().size() != spec.zeros.size()) {
    throw StructuralError("family roundtrip: Blaschke product does not match the spec's zeros");
  }
  for (const auto& z : spec.zeros) {
    if (b.multiplicity_at(z.point, tol.match) != z.multiplicity) {
      throw StructuralError("family roundtrip: Blaschke product does not match the spec's zeros");
    }
  }
  Verdict v = decide_blaschke(b, generate(spec), b, tol);
  v.route = std::string("family roundtrip (") + to_string(spec.kind) + ")";
  return v;
}

Complex ParameterPool::point_in_disk(Real max_radius) {
  std::uniform_real_distribution<Real> u(0, 1);
  return std::polar(max_radius * std::sqrt(u(rng_)), kTwoPi * u(rng_));
}

Complex ParameterPool::unimodular() {
  std::uniform_real_distribution<Real> u(0, kTwoPi);
  return unit(u(rng_));
}

SelfMap ParameterPool::psi() {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> degree(1, 3);
  std::uniform_int_distribution<int> extra(0, 2);
  switch (pick(rng_)) {
    case 0: return SelfMap::scale(unimodular());
    case 1: return SelfMap::inner(BlaschkeProduct(unimodular(), {{Complex{}, degree(rng_)}}));
    default: {
      std::vector<BlaschkeZero> zeros{{Complex{}, std::uniform_int_distribution<int>(1, 2)(rng_)}};
      const int n = extra(rng_);
      for (int i = 0; i < n; ++i) {
        const Complex p = point_in_disk();
        if (std::abs(p) > 0.05) zeros.push_back({p, 1});
      }
      auto map = SelfMap::inner(BlaschkeProduct(unimodular(), std::move(zeros)));
      if (std::uniform_int_distribution<int>(0, 1)(rng_) == 0) return map;
      const Real s = std::uniform_real_distribution<Real>(0.2, 0.95)(rng_);
      return SelfMap::chain({SelfMap::scale(s * unimodular()), std::move(map)});
    }
  }
}

BallElement ParameterPool::constant_h() {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng_)) {
    case 0: return {Complex{1}, {}};
    case 1: return {unimodular(), {}};
    default: return {point_in_disk(0.95), {}};
  }
}

BallElement ParameterPool::h() {
  std::uniform_int_distribution<int> pick(0, 4);
  switch (pick(rng_)) {
    case 0: return constant_h();
    case 1: return {point_in_disk(0.95), {}};
    case 2: {
      const int d = std::uniform_int_distribution<int>(1, 3)(rng_);
      return {unimodular(), BlaschkeProduct(Complex{1}, {{Complex{}, d}})};
    }
    default: {
      std::vector<BlaschkeZero> zeros{{point_in_disk(), 1}};
      const Complex second = point_in_disk();
      if (pick(rng_) % 2 == 0 && std::abs(second - zeros[0].point) > 0.05) {
        zeros.push_back({second, 1});
      }
      const Complex scale = pick(rng_) % 2 == 0 ? unimodular() : point_in_disk(0.95);
      return {scale, BlaschkeProduct(unimodular(), std::move(zeros))};
    }
  }
}

FamilySpec ParameterPool::spec(FamilyKind kind, int max_zeros, int max_multiplicity) {
  std::uniform_int_distribution<int> mult(1, std::max(1, max_multiplicity));
  auto distinct_points = [&](int n) {
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Complex p = point_in_disk();
      if (std::all_of(pts.begin(), pts.end(), [&](Complex q) { return std::abs(p - q) > 0.1; })) {
        pts.push_back(p);
      }
    }
    return pts;
  };

  FamilySpec s;
  s.kind = kind;
  switch (kind) {
    case FamilyKind::one_zero:
      s.zeros = {{distinct_points(1)[0], mult(rng_)}};
      s.psi = psi();
      break;
    case FamilyKind::two_zero_equal: {
      const auto pts = distinct_points(2);
      const int n = mult(rng_);
      s.zeros = {{pts[0], n}, {pts[1], n}};
      s.branch = std::uniform_int_distribution<int>(0, 3)(rng_);
      s.h = h();
      break;
    }
    case FamilyKind::two_zero_unequal: {
      const auto pts = distinct_points(2);
      const int n = std::uniform_int_distribution<int>(1, std::max(1, max_multiplicity - 1))(rng_);
      const int m = std::uniform_int_distribution<int>(n + 1, n + max_multiplicity)(rng_);
      s.zeros = {{pts[0], m}, {pts[1], n}};
      s.branch = std::uniform_int_distribution<int>(0, 2)(rng_);
      s.h = h();
      break;
    }
    case FamilyKind::fix_all_to_aj:
    case FamilyKind::max_mult_selfmap: {
      const int n = std::uniform_int_distribution<int>(1, std::max(1, max_zeros))(rng_);
      for (Complex p : distinct_points(n)) s.zeros.push_back({p, mult(rng_)});
      s.target = std::uniform_int_distribution<std::size_t>(0, s.zeros.size() - 1)(rng_);
      s.h = h();
      break;
    }
  }
  return s;
}

bool satisfies_rigidity_hypothesis(const BlaschkeProduct& b) {
  const std::size_t n = b.zeros().size();
  if (n < 2) return false;
  std::vector<int> m;
  for (const auto& z : b.zeros()) m.push_back(z.multiplicity);
  std::sort(m.begin(), m.end());
  if (n == 2) return m[0] < m[1];
  return m[n - 3] < m[n - 2] && m[n - 2] < m[n - 1];
}

RigidityReport automorphism_rigidity_scan(const BlaschkeProduct& b, int trials, std::uint64_t seed,
                                          const Tolerances& tol) {
  const std::size_t n = b.zeros().size();
  if (n > 8) throw StructuralError("rigidity scan: at most 8 zeros are supported");
  if (!satisfies_rigidity_hypothesis(b)) {
    throw StructuralError(
        "rigidity scan: multiplicities must satisfy m_{n-2} < m_{n-1} < m_n (m_1 < m_2 for n = 2)");
  }
  RigidityReport report;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    if (subset.size() < 2) continue;
    // Cyclic arrangements: keep the first index in place, permute the rest.
    std::vector<std::size_t> rest(subset.begin() + 1, subset.end());
    do {
      RigidityRow row;
      row.cycle.push_back(subset.front());
      row.cycle.insert(row.cycle.end(), rest.begin(), rest.end());
      std::vector<Complex> points;
      for (auto i : row.cycle) points.push_back(b.zeros()[i].point);
      const auto map = cycle_map(points, tol.match);
      row.realizable = map.has_value();
      if (map) {
        const Verdict v = decide_blaschke(b, SelfMap::moebius(*map), b, tol);
        row.contained = v.contained;
        try {
          row.monotonicity = auto_monotonicity(b, *map, tol);
        } catch (const StructuralError&) {
          // The cycle moves some other zero off the zero set.
        }
        if (row.contained) report.all_refuted = false;
      }
      report.rows.push_back(std::move(row));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  ParameterPool pool(seed);
  for (int t = 0; t < trials; ++t) {
    const Moebius m(pool.unimodular(), pool.point_in_disk(0.95));
    if (m.is_identity(1e-9)) continue;
    ++report.random_trials;
    if (decide_blaschke(b, SelfMap::moebius(m), b, tol).contained) {
      ++report.random_contained;
      report.all_refuted = false;
    }
  }
  return report;
}

}  // namespace beurling
