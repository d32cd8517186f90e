#include "beurling/selfmap.hpp"

#include <cmath>
#include <sstream>

namespace beurling {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
  return os.str();
}

}  // namespace

SelfMap SelfMap::constant(Complex value) {
  if (!is_finite(value) || std::abs(value) >= 1) {
    throw StructuralError("constant self-map must take a value inside D");
  }
  return SelfMap(ConstantMap{value});
}

SelfMap SelfMap::inner(InnerFunction f) {
  if (f.is_constant()) {
    throw StructuralError("a unimodular constant is not a self-map of D");
  }
  return SelfMap(InnerMap{std::move(f)});
}

SelfMap SelfMap::scale(Complex factor) {
  const Real r = std::abs(factor);
  if (!is_finite(factor) || r == 0 || r > 1 + 1e-12) {
    throw StructuralError("scale factor must satisfy 0 < |s| <= 1");
  }
  return SelfMap(ScaleMap{factor});
}

SelfMap SelfMap::chain(std::vector<SelfMap> maps) {
  if (maps.empty()) return identity();
  if (maps.size() == 1) return std::move(maps.front());
  return SelfMap(ChainMap{std::move(maps)});
}

Complex SelfMap::operator()(Complex z) const {
  return std::visit(overloaded{
                        [&](const IdentityMap&) { return z; },
                        [&](const ConstantMap& c) { return c.value; },
                        [&](const MoebiusMap& m) { return m.map(z); },
                        [&](const InnerMap& f) { return f.function(z); },
                        [&](const ScaleMap& s) { return s.factor * z; },
                        [&](const ChainMap& c) {
                          Complex w = z;
                          for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) w = (*it)(w);
                          return w;
                        },
                    },
                    node_);
}

Jet SelfMap::jet(Complex at, int order, Real match_tol) const {
  if (std::abs(at) >= 1) throw DomainError("self-map jet: base point must lie in D");
  return std::visit(
      overloaded{
          [&](const IdentityMap&) { return Jet::identity(at, order); },
          [&](const ConstantMap& c) { return Jet::constant(at, order, c.value); },
          [&](const MoebiusMap& m) { return moebius_jet(m.map, at, order); },
          [&](const InnerMap& f) { return f.function.jet(at, order); },
          [&](const ScaleMap& s) { return Jet::identity(at, order) * s.factor; },
          [&](const ChainMap& c) {
            Jet acc = c.maps.back().jet(at, order, match_tol);
            for (auto it = c.maps.rbegin() + 1; it != c.maps.rend(); ++it) {
              acc = compose(it->jet(acc.value(), order, match_tol), acc, match_tol);
            }
            return acc;
          },
      },
      node_);
}

std::optional<Complex> SelfMap::constant_value() const {
  if (const auto* c = std::get_if<ConstantMap>(&node_)) return c->value;
  if (const auto* chain = std::get_if<ChainMap>(&node_)) {
    for (const auto& m : chain->maps) {
      if (m.constant_value()) return (*this)(Complex{});
    }
  }
  return std::nullopt;
}

std::optional<Moebius> SelfMap::as_moebius() const {
  return std::visit(
      overloaded{
          [](const IdentityMap&) -> std::optional<Moebius> { return Moebius::identity(); },
          [](const ConstantMap&) -> std::optional<Moebius> { return std::nullopt; },
          [](const MoebiusMap& m) -> std::optional<Moebius> { return m.map; },
          [](const InnerMap& f) -> std::optional<Moebius> {
            const auto& b = f.function.blaschke();
            if (!f.function.measure().empty() || b.zeros().size() != 1 ||
                b.zeros().front().multiplicity != 1) {
              return std::nullopt;
            }
            const Complex a = b.zeros().front().point;
            return Moebius(f.function.alpha() * b.gamma() * blaschke_normalizer(a), a);
          },
          [](const ScaleMap& s) -> std::optional<Moebius> {
            if (std::fabs(std::abs(s.factor) - 1) > 1e-12) return std::nullopt;
            return Moebius::rotation(s.factor);
          },
          [](const ChainMap& c) -> std::optional<Moebius> {
            Moebius acc = Moebius::identity();
            for (const auto& m : c.maps) {
              const auto piece = m.as_moebius();
              if (!piece) return std::nullopt;
              acc = compose(acc, *piece);
            }
            return acc;
          },
      },
      node_);
}

std::string SelfMap::describe() const {
  return std::visit(
      overloaded{
          [](const IdentityMap&) -> std::string { return "I"; },
          [](const ConstantMap& c) -> std::string { return "const(" + format_complex(c.value) + ")"; },
          [](const MoebiusMap& m) -> std::string {
            return "moebius(gamma=" + format_complex(m.map.gamma()) +
                   ", a=" + format_complex(m.map.zero()) + ")";
          },
          [](const InnerMap& f) -> std::string {
            std::string s = "inner[";
            bool first = true;
            for (const auto& z : f.function.blaschke().zeros()) {
              if (!first) s += " ";
              first = false;
              s += "B(" + format_complex(z.point) + ")^" + std::to_string(z.multiplicity);
            }
            for (const auto& a : f.function.measure().atoms()) {
              if (!first) s += " ";
              first = false;
              std::ostringstream os;
              os.precision(6);
              os << "S(" << a.angle << ":" << a.weight << ")";
              s += os.str();
            }
            return s + "]";
          },
          [](const ScaleMap& s) -> std::string { return "scale(" + format_complex(s.factor) + ")"; },
          [](const ChainMap& c) -> std::string {
            std::string s;
            for (std::size_t i = 0; i < c.maps.size(); ++i) {
              if (i) s += " o ";
              s += c.maps[i].describe();
            }
            return s;
          },
      },
      node_);
}

std::string CompositeMultiplicity::to_string() const {
  switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::infinite: return "infinite";
    case Kind::at_least: return ">=" + std::to_string(value);
  }
  return "?";
}

CompositeMultiplicity mult_of_composite(const BlaschkeProduct& b, const SelfMap& phi, Complex w,
                                        int jet_order, const Tolerances& tol) {
  if (std::abs(w) >= 1) throw DomainError("mult_of_composite: point must lie in D");
  CompositeMultiplicity result;
  if (const auto c = phi.constant_value()) {
    result.image_zero = b.find_zero(*c, tol.match);
    if (result.image_zero) result.kind = CompositeMultiplicity::Kind::infinite;
    return result;
  }
  result.image_zero = b.find_zero(phi(w), tol.match);
  if (!result.image_zero) return result;

  // B_{a_k} has a simple zero at a_k, so ord_w(B_{a_k} o phi) = ord_w(phi - a_k).
  const auto& zero = b.zeros()[*result.image_zero];
  Jet local = phi.jet(w, jet_order, tol.match) - zero.point;
  if (const auto ord = order_of_vanishing(local, tol.vanishing)) {
    result.value = zero.multiplicity * *ord;
  } else {
    result.kind = CompositeMultiplicity::Kind::at_least;
    result.value = zero.multiplicity * (jet_order + 1);
  }
  return result;
}

}  // namespace beurling
