#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "beurling/inner.hpp"
#include "beurling/jet.hpp"
#include "beurling/moebius.hpp"

namespace beurling {

class SelfMap;

struct IdentityMap {};
struct ConstantMap {
  Complex value;
};
struct MoebiusMap {
  Moebius map;
};
struct InnerMap {
  InnerFunction function;
};
/// z -> factor * z with 0 < |factor| <= 1.
struct ScaleMap {
  Complex factor;
};
/// maps[0] o maps[1] o ... o maps[n-1]; the last entry is applied first.
struct ChainMap {
  std::vector<SelfMap> maps;
};

/// Structured holomorphic self-map of the unit disk.
class SelfMap {
 public:
  using Node = std::variant<IdentityMap, ConstantMap, MoebiusMap, InnerMap, ScaleMap, ChainMap>;

  SelfMap() : node_(IdentityMap{}) {}

  static SelfMap identity() { return SelfMap(IdentityMap{}); }
  static SelfMap constant(Complex value);
  static SelfMap moebius(Moebius m) { return SelfMap(MoebiusMap{m}); }
  static SelfMap inner(InnerFunction f);
  static SelfMap inner(BlaschkeProduct b) { return inner(InnerFunction(std::move(b), {})); }
  static SelfMap scale(Complex factor);
  /// Chain written in composition order: chain({f, g, h}) = f o g o h.
  static SelfMap chain(std::vector<SelfMap> maps);

  const Node& node() const { return node_; }

  Complex operator()(Complex z) const;
  Jet jet(Complex at, int order, Real match_tol = 1e-9) const;

  /// Value of the map when it is structurally constant.
  std::optional<Complex> constant_value() const;
  /// The automorphism this map equals, when it is built only from identities,
  /// Moebius maps and unimodular scalings.
  std::optional<Moebius> as_moebius() const;

  std::string describe() const;

 private:
  explicit SelfMap(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Order of vanishing of B o phi at a point, or one of the two special outcomes.
struct CompositeMultiplicity {
  enum class Kind { finite, infinite, at_least };
  Kind kind = Kind::finite;
  /// Exact order for `finite`; a proven lower bound for `at_least` (the jet
  /// ran out of coefficients, or only a bound was needed).
  int value = 0;
  /// Index of the zero of B hit by phi(w), if any.
  std::optional<std::size_t> image_zero;

  bool satisfies(int required) const {
    return kind == Kind::infinite || value >= required;
  }
  std::string to_string() const;
};

/// mult_{B o phi}(w) via m_k * ord_w(phi - a_k) where phi(w) = a_k.
CompositeMultiplicity mult_of_composite(const BlaschkeProduct& b, const SelfMap& phi, Complex w,
                                        int jet_order, const Tolerances& tol = {});

}  // namespace beurling
