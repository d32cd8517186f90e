#include "beurling/cli/document.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace beurling::cli {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path.empty() ? "/" : path, what);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(child(path, item.key()), "unknown field");
  }
}

const json& field(const json& j, const std::string& path, const char* key) {
  require_object(j, path);
  const auto it = j.find(key);
  if (it == j.end()) fail(child(path, key), "missing required field");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

Real number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const Real x = j.get<Real>();
  if (!std::isfinite(x)) fail(path, "expected a finite number");
  return x;
}

long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

/// Runs `f`, re-raising library errors at `path`.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Real angle_of(Complex unimodular) { return std::arg(unimodular); }

struct NodeWriter {
  json operator()(const IdentityMap&) const { return {{"type", "identity"}}; }
  json operator()(const ConstantMap& c) const { return {{"type", "constant"}, {"value", to_json(c.value)}}; }
  json operator()(const MoebiusMap& m) const {
    json out = to_json(m.map);
    out["type"] = "moebius";
    return out;
  }
  json operator()(const InnerMap& f) const { return {{"type", "inner"}, {"function", to_json(f.function)}}; }
  json operator()(const ScaleMap& s) const { return {{"type", "scale"}, {"factor", to_json(s.factor)}}; }
  json operator()(const ChainMap& c) const {
    json maps = json::array();
    for (const auto& m : c.maps) maps.push_back(to_json(m));
    return {{"type", "chain"}, {"maps", maps}};
  }
};

json multiplicity_to_json(const CompositeMultiplicity& m) {
  const char* kind = "finite";
  if (m.kind == CompositeMultiplicity::Kind::infinite) kind = "infinite";
  if (m.kind == CompositeMultiplicity::Kind::at_least) kind = "at_least";
  json out{{"kind", kind}};
  if (m.kind != CompositeMultiplicity::Kind::infinite) out["value"] = m.value;
  return out;
}

json zero_row(const ZeroCheck& z) {
  json row{{"zero", to_json(z.zero)},
           {"required", z.required},
           {"observed", multiplicity_to_json(z.observed)},
           {"image", to_json(z.image)},
           {"ok", z.ok}};
  if (const auto m = z.margin()) row["margin"] = *m;
  return row;
}

json atom_row(const AtomCheck& a) {
  return {{"angle", a.angle}, {"required", a.required}, {"available", a.available},
          {"ok", a.ok},       {"margin", a.margin()}};
}

}  // namespace

InputError::InputError(std::string where, const std::string& what)
    : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    // Strip the library's "[json.exception.parse_error.101] " prefix.
    if (const auto pos = message.find("] "); pos != std::string::npos) message = message.substr(pos + 2);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column), message);
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

Complex point_from(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"re", "im"});
  return {number(field(j, path, "re"), child(path, "re")), number(field(j, path, "im"), child(path, "im"))};
}

json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::vector<BlaschkeZero> zeros_from(const json& j, const std::string& path) {
  array(j, path);
  std::vector<BlaschkeZero> zeros;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(path, i);
    require_object(j[i], at);
    reject_unknown(j[i], at, {"re", "im", "mult"});
    const Complex p{number(field(j[i], at, "re"), child(at, "re")),
                    number(field(j[i], at, "im"), child(at, "im"))};
    if (!(std::abs(p) < 1)) fail(at, "zero must satisfy |a| < 1");
    long long mult = 1;
    if (const json* m = optional_field(j[i], "mult")) mult = integer(*m, child(at, "mult"));
    if (mult < 1 || mult > 1000) fail(child(at, "mult"), "multiplicity must be in 1..1000");
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      if (std::abs(zeros[k].point - p) <= 1e-9) {
        fail(at, "duplicate zero (same point as " + child(path, k) + ")");
      }
    }
    zeros.push_back({p, static_cast<int>(mult)});
  }
  return zeros;
}

json zeros_to_json(const BlaschkeProduct& b) {
  json out = json::array();
  for (const auto& z : b.zeros()) {
    out.push_back({{"re", z.point.real()}, {"im", z.point.imag()}, {"mult", z.multiplicity}});
  }
  return out;
}

AtomicMeasure measure_from(const json& j, const std::string& path) {
  array(j, path);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(path, i);
    require_object(j[i], at);
    reject_unknown(j[i], at, {"angle", "weight"});
    const Real weight = number(field(j[i], at, "weight"), child(at, "weight"));
    if (!(weight > 0)) fail(child(at, "weight"), "atom weight must be positive");
    atoms.push_back({number(field(j[i], at, "angle"), child(at, "angle")), weight});
  }
  return located(path, [&] { return AtomicMeasure(std::move(atoms)); });
}

json to_json(const AtomicMeasure& mu) {
  json out = json::array();
  for (const auto& a : mu.atoms()) out.push_back({{"angle", a.angle}, {"weight", a.weight}});
  return out;
}

InnerFunction inner_from(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"gamma_angle", "zeros", "atoms"});
  Real angle = 0;
  if (const json* g = optional_field(j, "gamma_angle")) angle = number(*g, child(path, "gamma_angle"));
  std::vector<BlaschkeZero> zeros;
  if (const json* z = optional_field(j, "zeros")) zeros = zeros_from(*z, child(path, "zeros"));
  AtomicMeasure mu;
  if (const json* a = optional_field(j, "atoms")) mu = measure_from(*a, child(path, "atoms"));
  return located(path, [&] { return InnerFunction(BlaschkeProduct(Complex{1}, zeros), mu, unit(angle)); });
}

json to_json(const InnerFunction& f) {
  return {{"gamma_angle", angle_of(f.alpha() * f.blaschke().gamma())},
          {"zeros", zeros_to_json(f.blaschke())},
          {"atoms", to_json(f.measure())}};
}

Moebius moebius_from(const json& j, const std::string& path) {
  require_object(j, path);
  Real angle = 0;
  if (const json* g = optional_field(j, "gamma_angle")) angle = number(*g, child(path, "gamma_angle"));
  const Complex a = point_from(field(j, path, "a"), child(path, "a"));
  if (!(std::abs(a) < 1)) fail(child(path, "a"), "automorphism zero must satisfy |a| < 1");
  return located(path, [&] { return Moebius(unit(angle), a); });
}

json to_json(const Moebius& m) { return {{"gamma_angle", angle_of(m.gamma())}, {"a", to_json(m.zero())}}; }

SelfMap selfmap_from(const json& j, const std::string& path) {
  require_object(j, path);
  const json& tag = field(j, path, "type");
  if (!tag.is_string()) fail(child(path, "type"), "expected a string");
  const std::string type = tag.get<std::string>();
  if (type == "identity") {
    reject_unknown(j, path, {"type"});
    return SelfMap::identity();
  }
  if (type == "constant") {
    reject_unknown(j, path, {"type", "value"});
    const Complex c = point_from(field(j, path, "value"), child(path, "value"));
    return located(child(path, "value"), [&] { return SelfMap::constant(c); });
  }
  if (type == "moebius") {
    reject_unknown(j, path, {"type", "gamma_angle", "a"});
    return SelfMap::moebius(moebius_from(j, path));
  }
  if (type == "inner") {
    reject_unknown(j, path, {"type", "function"});
    const InnerFunction f = inner_from(field(j, path, "function"), child(path, "function"));
    return located(child(path, "function"), [&] { return SelfMap::inner(f); });
  }
  if (type == "scale") {
    reject_unknown(j, path, {"type", "factor"});
    const Complex s = point_from(field(j, path, "factor"), child(path, "factor"));
    return located(child(path, "factor"), [&] { return SelfMap::scale(s); });
  }
  if (type == "chain") {
    reject_unknown(j, path, {"type", "maps"});
    const std::string at = child(path, "maps");
    const json& maps = array(field(j, path, "maps"), at);
    std::vector<SelfMap> parts;
    for (std::size_t i = 0; i < maps.size(); ++i) parts.push_back(selfmap_from(maps[i], child(at, i)));
    return SelfMap::chain(std::move(parts));
  }
  fail(child(path, "type"), "unknown self-map type '" + type + "'");
}

json to_json(const SelfMap& phi) { return std::visit(NodeWriter{}, phi.node()); }

GridSpec grid_from(const json& j, const std::string& path, GridSpec base) {
  require_object(j, path);
  reject_unknown(j, path, {"radii", "angular_count", "exclusion", "refine_targets"});
  if (const json* r = optional_field(j, "radii")) {
    const std::string at = child(path, "radii");
    array(*r, at);
    base.radii.clear();
    for (std::size_t i = 0; i < r->size(); ++i) base.radii.push_back(number((*r)[i], child(at, i)));
  }
  if (const json* n = optional_field(j, "angular_count")) {
    const long long count = integer(*n, child(path, "angular_count"));
    if (count < 1 || count > (1 << 24)) fail(child(path, "angular_count"), "must be in 1..16777216");
    base.angular_count = static_cast<int>(count);
  }
  if (const json* e = optional_field(j, "exclusion")) base.exclusion = number(*e, child(path, "exclusion"));
  if (const json* t = optional_field(j, "refine_targets")) {
    if (!t->is_boolean()) fail(child(path, "refine_targets"), "expected a boolean");
    base.refine_targets = t->get<bool>();
  }
  located(path, [&] {
    base.validate();
    return 0;
  });
  return base;
}

json to_json(const GridSpec& g) {
  return {{"radii", g.radii},
          {"angular_count", g.angular_count},
          {"exclusion", g.exclusion},
          {"refine_targets", g.refine_targets}};
}

ProblemFile problem_from(const json& j) {
  require_object(j, "");
  reject_unknown(j, "", {"theta1", "theta2", "phi", "mode", "grid"});
  ProblemFile out;
  out.problem.theta1 = inner_from(field(j, "", "theta1"), "/theta1");
  out.problem.theta2 = inner_from(field(j, "", "theta2"), "/theta2");
  out.problem.phi = selfmap_from(field(j, "", "phi"), "/phi");
  if (const json* m = optional_field(j, "mode")) {
    if (!m->is_string()) fail("/mode", "expected a string");
    out.problem.mode = located("/mode", [&] { return parse_mode(m->get<std::string>()); });
  }
  if (const json* g = optional_field(j, "grid")) out.grid = grid_from(*g, "/grid");
  return out;
}

json to_json(const ProblemFile& file) {
  return {{"theta1", to_json(file.problem.theta1)},
          {"theta2", to_json(file.problem.theta2)},
          {"phi", to_json(file.problem.phi)},
          {"mode", to_string(file.problem.mode)},
          {"grid", to_json(file.grid)}};
}

FamilyRequest family_from(const json& j) {
  require_object(j, "");
  const json& kind = field(j, "", "kind");
  if (!kind.is_string()) fail("/kind", "expected a string");
  FamilyRequest out;
  if (kind.get<std::string>() == "rigidity_scan") {
    reject_unknown(j, "", {"kind", "zeros", "trials", "seed"});
    out.rigidity_scan = true;
    const auto zeros = zeros_from(field(j, "", "zeros"), "/zeros");
    out.blaschke = located("/zeros", [&] { return BlaschkeProduct(Complex{1}, zeros); });
    if (const json* t = optional_field(j, "trials")) {
      const long long trials = integer(*t, "/trials");
      if (trials < 0 || trials > 1000000) fail("/trials", "must be in 0..1000000");
      out.trials = static_cast<int>(trials);
    }
    if (const json* s = optional_field(j, "seed")) {
      const long long seed = integer(*s, "/seed");
      if (seed < 0) fail("/seed", "must be non-negative");
      out.seed = static_cast<std::uint64_t>(seed);
    }
    return out;
  }
  reject_unknown(j, "", {"kind", "zeros", "target", "psi", "h", "branch", "exponent_shift"});
  FamilySpec& s = out.spec;
  s.kind = located("/kind", [&] { return parse_family_kind(kind.get<std::string>()); });
  s.zeros = zeros_from(field(j, "", "zeros"), "/zeros");
  if (const json* t = optional_field(j, "target")) {
    const long long target = integer(*t, "/target");
    if (target < 0) fail("/target", "must be non-negative");
    s.target = static_cast<std::size_t>(target);
  }
  if (const json* p = optional_field(j, "psi")) s.psi = selfmap_from(*p, "/psi");
  if (const json* h = optional_field(j, "h")) {
    require_object(*h, "/h");
    reject_unknown(*h, "/h", {"scale", "gamma_angle", "zeros"});
    if (const json* sc = optional_field(*h, "scale")) s.h.scale = point_from(*sc, "/h/scale");
    Real angle = 0;
    if (const json* g = optional_field(*h, "gamma_angle")) angle = number(*g, "/h/gamma_angle");
    std::vector<BlaschkeZero> zeros;
    if (const json* z = optional_field(*h, "zeros")) zeros = zeros_from(*z, "/h/zeros");
    s.h.blaschke = located("/h", [&] { return BlaschkeProduct(unit(angle), zeros); });
  }
  if (const json* b = optional_field(j, "branch")) s.branch = static_cast<int>(integer(*b, "/branch"));
  if (const json* e = optional_field(j, "exponent_shift")) {
    s.exponent_shift = static_cast<int>(integer(*e, "/exponent_shift"));
  }
  located("", [&] {
    s.validate();
    return 0;
  });
  return out;
}

json to_json(const FamilySpec& spec) {
  json zeros = json::array();
  for (const auto& z : spec.zeros) {
    zeros.push_back({{"re", z.point.real()}, {"im", z.point.imag()}, {"mult", z.multiplicity}});
  }
  return {{"kind", to_string(spec.kind)},
          {"zeros", zeros},
          {"target", spec.target},
          {"psi", to_json(spec.psi)},
          {"h",
           {{"scale", to_json(spec.h.scale)},
            {"gamma_angle", angle_of(spec.h.blaschke.gamma())},
            {"zeros", zeros_to_json(spec.h.blaschke)}}},
          {"branch", spec.branch},
          {"exponent_shift", spec.exponent_shift}};
}

json to_json(const Verdict& v) {
  json zeros = json::array(), atoms = json::array(), zero_deficits = json::array(),
       atom_deficits = json::array();
  for (const auto& z : v.zeros) zeros.push_back(zero_row(z));
  for (const auto& a : v.atoms) atoms.push_back(atom_row(a));
  for (const auto& z : v.zero_deficits()) zero_deficits.push_back(zero_row(z));
  for (const auto& a : v.atom_deficits()) atom_deficits.push_back(atom_row(a));
  return {{"contained", v.contained},
          {"boundary_case", v.boundary_case},
          {"route", v.route},
          {"witness", {{"zero_deficits", zero_deficits}, {"atom_deficits", atom_deficits}}},
          {"margins", {{"zeros", zeros}, {"atoms", atoms}}},
          {"notes", v.notes}};
}

json to_json(const OracleReport& r) {
  return {{"flag", to_string(r.flag)},
          {"sup_estimate", r.sup_estimate},
          {"log_sup", r.log_sup},
          {"argmax", to_json(r.argmax)},
          {"samples_used", r.samples_used}};
}

json to_json(const AutomorphismClass& c) {
  json points = json::array();
  for (const auto& p : c.fixed_points) {
    points.push_back({{"point", to_json(p.point)}, {"location", p.on_boundary ? "boundary" : "interior"}});
  }
  return {{"kind", to_string(c.kind)}, {"fixed_points", points}};
}

json to_json(const RigidityReport& r, const BlaschkeProduct& b) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json mono = json::array();
    for (const auto& m : row.monotonicity) {
      mono.push_back({{"zero", to_json(m.zero)},
                      {"multiplicity", m.multiplicity},
                      {"image", to_json(m.image)},
                      {"image_multiplicity", m.image_multiplicity},
                      {"ok", m.ok}});
    }
    rows.push_back({{"cycle", row.cycle},
                    {"realizable", row.realizable},
                    {"contained", row.contained},
                    {"monotonicity", mono}});
  }
  return {{"zeros", zeros_to_json(b)},
          {"rows", rows},
          {"random_trials", r.random_trials},
          {"random_contained", r.random_contained},
          {"all_refuted", r.all_refuted}};
}

}  // namespace beurling::cli
