#include "beurling/cli/app.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "beurling/cli/document.hpp"

namespace beurling::cli {

namespace {

const char* kUncharacterizedRoute =
    "oracle (uncharacterized: non-automorphism phi with singular theta2)";

struct Options {
  std::string file;
  std::vector<Real> grid_radii;
  std::optional<int> grid_angles;
  std::optional<int> jet_order_cap;
  std::string tolerance_profile = "default";
  std::string output = "document";
  bool refine = true;
};

std::string fmt(Complex z) {
  std::ostringstream os;
  os << std::setprecision(10) << "(" << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::fabs(z.imag()) << "i)";
  return os.str();
}

std::string fmt(Real x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

Tolerances tolerances(const Options& o) {
  Tolerances t = Tolerances::profile(o.tolerance_profile);
  if (o.jet_order_cap) t.jet_order_cap = *o.jet_order_cap;
  return t;
}

GridSpec apply_grid_flags(GridSpec g, const Options& o) {
  if (!o.grid_radii.empty()) g.radii = o.grid_radii;
  if (o.grid_angles) g.angular_count = *o.grid_angles;
  try {
    g.validate();
  } catch (const StructuralError& e) {
    throw InputError("--grid-radii/--grid-angles", e.what());
  }
  return g;
}

Moebius automorphism_from(const json& j, const std::string& path) {
  const SelfMap phi = selfmap_from(j, path);
  const auto m = phi.as_moebius();
  if (!m) throw InputError(path, "map is not a disk automorphism");
  return *m;
}

const json& required(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("/", "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("/") + key, "missing required field");
  return *it;
}

void emit(const json& doc, const std::string& report, const Options& o, std::ostream& out) {
  if (o.output == "report") {
    out << report;
  } else {
    out << doc.dump(2) << "\n";
  }
}

std::string verdict_lines(const Verdict& v) {
  std::ostringstream os;
  for (const auto& z : v.zeros) {
    os << "  zero " << fmt(z.zero) << " -> " << fmt(z.image) << ": required " << z.required
       << ", observed " << z.observed.to_string() << (z.ok ? "  ok" : "  DEFICIT") << "\n";
  }
  for (const auto& a : v.atoms) {
    os << "  atom at angle " << fmt(a.angle) << ": required " << fmt(a.required) << ", available "
       << fmt(a.available) << (a.ok ? "  ok" : "  DEFICIT") << "\n";
  }
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string oracle_line(const OracleReport& r) {
  std::ostringstream os;
  os << to_string(r.flag) << ", sup ~ " << fmt(r.sup_estimate) << " at " << fmt(r.argmax) << " ("
     << r.samples_used << " samples)";
  return os.str();
}

/// Oracle-only answer for problems outside the characterized cases: the grid
/// plus, when refining, dense sampling near the zeros and atoms of theta2.
OracleReport oracle_only(const Problem& p, const GridSpec& grid, bool refine) {
  OracleReport report = sup_quotient(p.theta1, p.phi, p.theta2, grid);
  if (!refine || report.flag == OracleFlag::blowup_detected) return report;
  RefinementTargets targets;
  for (const auto& z : p.theta2.blaschke().zeros()) targets.points.push_back(z.point);
  for (const auto& a : p.theta2.measure().atoms()) targets.angles.push_back(a.angle);
  const OracleReport local = sup_quotient_near(p.theta1, p.phi, p.theta2, targets);
  const auto total = report.samples_used + local.samples_used;
  if (local.samples_used > 0 && local.log_sup > report.log_sup) report = local;
  report.samples_used = total;
  return report;
}

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  ProblemFile file = problem_from(read_file(o.file));
  file.grid = apply_grid_flags(file.grid, o);
  const Tolerances tol = tolerances(o);
  const Problem& p = file.problem;

  json doc{{"command", "decide"}, {"mode", to_string(p.mode)}};
  std::ostringstream report;
  int code = kInconclusive;

  Decision d;
  try {
    d = decide(p, tol);
  } catch (const InconclusiveError& e) {
    doc["status"] = "inconclusive";
    doc["contained"] = nullptr;
    doc["theorem_route"] = "engine";
    doc["reason"] = e.what();
    doc["exit_code"] = kInconclusive;
    report << "decide: INCONCLUSIVE\n  reason: " << e.what() << "\n";
    emit(doc, report.str(), o, out);
    return kInconclusive;
  }

  if (d.verdict) {
    const Verdict& v = *d.verdict;
    const CrossCheck cc = cross_validate(p.theta1, p.phi, p.theta2, v, file.grid, o.refine);
    code = v.contained ? kPositive : kNegative;
    const json vj = to_json(v);
    doc["status"] = v.contained ? "contained" : "not_contained";
    doc["contained"] = v.contained;
    doc["theorem_route"] = d.route;
    doc["boundary_case"] = v.boundary_case;
    doc["witness"] = vj["witness"];
    doc["margins"] = vj["margins"];
    doc["notes"] = vj["notes"];
    doc["oracle_cross_check"] = {{"agreement", to_string(cc.agreement)},
                                 {"refined", cc.refined},
                                 {"report", to_json(cc.report)}};
    report << "decide: " << (v.contained ? "CONTAINED" : "NOT CONTAINED")
           << (v.contained && v.boundary_case ? " (boundary case)" : "") << "\n"
           << "  route: " << d.route << "\n"
           << verdict_lines(v) << "  oracle: " << oracle_line(cc.report) << " ["
           << to_string(cc.agreement) << (cc.refined ? ", refined" : "") << "]\n";
    if (cc.agreement == Agreement::contradiction) {
      err << "warning: oracle contradicts the engine verdict; the engine verdict stands\n";
    }
  } else {
    const OracleReport r = oracle_only(p, file.grid, o.refine);
    switch (r.flag) {
      case OracleFlag::bounded_consistent: code = kPositive; break;
      case OracleFlag::blowup_detected: code = kNegative; break;
      case OracleFlag::inconclusive: code = kInconclusive; break;
    }
    const char* status = code == kPositive ? "contained" : code == kNegative ? "not_contained" : "inconclusive";
    doc["status"] = status;
    doc["contained"] = code == kInconclusive ? json(nullptr) : json(code == kPositive);
    doc["theorem_route"] = kUncharacterizedRoute;
    doc["reason"] = d.reason;
    doc["witness"] = nullptr;
    doc["oracle_cross_check"] = {{"agreement", "oracle-only"}, {"refined", o.refine}, {"report", to_json(r)}};
    report << "decide: " << status << " (numerical evidence only)\n"
           << "  route: " << kUncharacterizedRoute << "\n"
           << "  engine: " << d.reason << "\n"
           << "  oracle: " << oracle_line(r) << "\n";
  }
  doc["exit_code"] = code;
  emit(doc, report.str(), o, out);
  return code;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  ProblemFile file = problem_from(read_file(o.file));
  file.grid = apply_grid_flags(file.grid, o);
  const Problem& p = file.problem;
  const OracleReport r = o.refine ? oracle_only(p, file.grid, true)
                                  : sup_quotient(p.theta1, p.phi, p.theta2, file.grid);
  const int code = r.flag == OracleFlag::bounded_consistent ? kPositive
                   : r.flag == OracleFlag::blowup_detected  ? kNegative
                                                            : kInconclusive;
  json doc{{"command", "oracle"}, {"grid", to_json(file.grid)}, {"report", to_json(r)}, {"exit_code", code}};
  emit(doc, "oracle: " + oracle_line(r) + "\n", o, out);
  return code;
}

int cmd_family(const Options& o, std::ostream& out) {
  const FamilyRequest req = family_from(read_file(o.file));
  const Tolerances tol = tolerances(o);
  std::ostringstream report;
  if (req.rigidity_scan) {
    RigidityReport r;
    try {
      r = automorphism_rigidity_scan(req.blaschke, req.trials, req.seed, tol);
    } catch (const StructuralError& e) {
      throw InputError("/zeros", e.what());
    }
    const int code = r.all_refuted ? kPositive : kNegative;
    json doc = to_json(r, req.blaschke);
    doc["command"] = "family";
    doc["kind"] = "rigidity_scan";
    doc["exit_code"] = code;
    report << "rigidity scan: " << (r.all_refuted ? "no nontrivial automorphism survives" : "SURVIVOR FOUND")
           << "\n";
    for (const auto& row : r.rows) {
      report << "  cycle";
      for (auto i : row.cycle) report << " " << i;
      report << ": " << (row.realizable ? (row.contained ? "realizable, CONTAINED" : "realizable, refuted")
                                        : "no automorphism")
             << "\n";
    }
    report << "  random automorphisms: " << r.random_contained << " of " << r.random_trials
           << " contained\n";
    emit(doc, report.str(), o, out);
    return code;
  }

  const SelfMap phi = generate(req.spec);
  const Verdict v = verify_family_roundtrip(req.spec, family_blaschke(req.spec), tol);
  const int code = v.contained ? kPositive : kNegative;
  json doc{{"command", "family"},
           {"spec", to_json(req.spec)},
           {"map", to_json(phi)},
           {"contained", v.contained},
           {"verdict", to_json(v)},
           {"exit_code", code}};
  report << "family " << to_string(req.spec.kind) << ": " << phi.describe() << "\n"
         << "  roundtrip: " << (v.contained ? "CONTAINED" : "NOT CONTAINED") << "\n"
         << verdict_lines(v);
  emit(doc, report.str(), o, out);
  return code;
}

int cmd_pushforward(const Options& o, std::ostream& out) {
  const json j = read_file(o.file);
  const AtomicMeasure mu = measure_from(required(j, "measure"), "/measure");
  const Moebius phi = automorphism_from(required(j, "phi"), "/phi");
  int samples = 200;
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<long long>() < 1 ||
        j["samples"].get<long long>() > 10000000) {
      throw InputError("/samples", "expected an integer in 1..10000000");
    }
    samples = j["samples"].get<int>();
  }
  const AtomicMeasure nu = pushforward(mu, phi);
  const Real deviation = modulus_identity_check(mu, phi, nu, samples);
  json doc{{"command", "pushforward"},
           {"measure", to_json(nu)},
           {"total_mass", nu.total_mass()},
           {"modulus_identity_check", {{"samples", samples}, {"max_relative_deviation", deviation}}},
           {"exit_code", kPositive}};
  std::ostringstream report;
  report << "pushforward: " << nu.atoms().size() << " atom(s), total mass " << fmt(nu.total_mass()) << "\n";
  for (const auto& a : nu.atoms()) report << "  angle " << fmt(a.angle) << "  weight " << fmt(a.weight) << "\n";
  report << "  modulus identity deviation " << fmt(deviation) << " over " << samples << " samples\n";
  emit(doc, report.str(), o, out);
  return kPositive;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const json j = read_file(o.file);
  const Moebius m = automorphism_from(required(j, "map"), "/map");
  const AutomorphismClass c = classify(m);
  json doc = to_json(c);
  doc["command"] = "classify";
  doc["map"] = to_json(m);
  doc["exit_code"] = kPositive;
  std::ostringstream report;
  report << "classify: " << to_string(c.kind) << "\n";
  for (const auto& p : c.fixed_points) {
    report << "  fixed point " << fmt(p.point) << (p.on_boundary ? " on T" : " in D") << "\n";
  }
  emit(doc, report.str(), o, out);
  return kPositive;
}

int cmd_cycle_map(const Options& o, std::ostream& out) {
  const json j = read_file(o.file);
  const json& pts = required(j, "points");
  if (!pts.is_array()) throw InputError("/points", "expected an array");
  std::vector<Complex> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string at = "/points/" + std::to_string(i);
    const Complex p = point_from(pts[i], at);
    if (!(std::abs(p) < 1)) throw InputError(at, "point must lie in D");
    points.push_back(p);
  }
  std::optional<Moebius> m;
  try {
    m = cycle_map(points, tolerances(o).match);
  } catch (const StructuralError& e) {
    throw InputError("/points", e.what());
  }
  const int code = m ? kPositive : kNegative;
  json doc{{"command", "cycle-map"}, {"exists", m.has_value()}, {"exit_code", code}};
  std::ostringstream report;
  if (m) {
    const AutomorphismClass c = classify(*m);
    doc["map"] = to_json(*m);
    doc["classification"] = to_json(c);
    report << "cycle-map: gamma " << fmt(m->gamma()) << ", a " << fmt(m->zero()) << " (" << to_string(c.kind)
           << ")\n";
  } else {
    doc["map"] = nullptr;
    report << "cycle-map: none exists\n";
  }
  emit(doc, report.str(), o, out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide composition-operator containment between Beurling subspaces", "beurling"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--grid-radii", o.grid_radii, "oracle radii, comma separated, increasing in (0, 1)")
      ->delimiter(',');
  app.add_option("--grid-angles", o.grid_angles, "oracle samples per radius")->check(CLI::Range(1, 1 << 24));
  app.add_option("--jet-order-cap", o.jet_order_cap, "upper bound for jet order escalation")
      ->check(CLI::Range(1, 4096));
  app.add_option("--tolerance-profile", o.tolerance_profile, "default, strict or loose")
      ->check(CLI::IsMember({"default", "strict", "loose"}));
  app.add_option("--output", o.output, "document (JSON) or report (text)")
      ->check(CLI::IsMember({"document", "report"}));
  app.add_flag("--refine,!--no-refine", o.refine, "refine the oracle near witnesses (default on)");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"decide", "decide a problem file and cross-check with the oracle"},
      {"family", "generate a family member (or run a rigidity scan) and verify it"},
      {"pushforward", "push an atomic measure forward under an automorphism"},
      {"classify", "classify a disk automorphism"},
      {"cycle-map", "find the automorphism cycling a list of points"},
      {"oracle", "raw sup estimate of |theta1 o phi| / |theta2|"},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help)->add_option("file", o.file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "decide") return cmd_decide(o, out, err);
    if (name == "family") return cmd_family(o, out);
    if (name == "pushforward") return cmd_pushforward(o, out);
    if (name == "classify") return cmd_classify(o, out);
    if (name == "cycle-map") return cmd_cycle_map(o, out);
    return cmd_oracle(o, out);
  } catch (const InputError& e) {
    err << "input error at " << e.what() << "\n";
    return kInputError;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const StructuralError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return kInconclusive;
  }
}

}  // namespace beurling::cli
