#pragma once

// JSON document model for problem, family, pushforward and Moebius files.
// The grammar is written down in docs/schema.md.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "beurling/beurling.hpp"

namespace beurling::cli {

using nlohmann::json;

/// Invalid input with a location: "line:column" for syntax errors, a JSON
/// pointer such as "/theta1/zeros/2/re" for schema violations.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

json parse_text(const std::string& text, const std::string& source = "<input>");
json read_file(const std::string& path);

Complex point_from(const json& j, const std::string& path);
json to_json(Complex z);

std::vector<BlaschkeZero> zeros_from(const json& j, const std::string& path);
json zeros_to_json(const BlaschkeProduct& b);

AtomicMeasure measure_from(const json& atoms, const std::string& path);
json to_json(const AtomicMeasure& mu);

/// {gamma_angle, zeros, atoms}; gamma_angle sets the unimodular constant of
/// the whole inner function and the Blaschke part carries gamma = 1.
InnerFunction inner_from(const json& j, const std::string& path);
json to_json(const InnerFunction& f);

/// {gamma_angle, a: {re, im}}.
Moebius moebius_from(const json& j, const std::string& path);
json to_json(const Moebius& m);

/// Tagged tree: {"type": "identity" | "constant" | "moebius" | "inner" | "scale" | "chain", ...}.
SelfMap selfmap_from(const json& j, const std::string& path);
json to_json(const SelfMap& phi);

GridSpec grid_from(const json& j, const std::string& path, GridSpec base = {});
json to_json(const GridSpec& g);

struct ProblemFile {
  Problem problem;
  GridSpec grid;
};

ProblemFile problem_from(const json& j);
json to_json(const ProblemFile& file);

/// Family request: a FamilySpec, or the rigidity scan.
struct FamilyRequest {
  bool rigidity_scan = false;
  FamilySpec spec;
  BlaschkeProduct blaschke;  ///< rigidity scan target
  int trials = 100;
  std::uint64_t seed = 7;
};

FamilyRequest family_from(const json& j);
json to_json(const FamilySpec& spec);

json to_json(const Verdict& v);
json to_json(const OracleReport& r);
json to_json(const AutomorphismClass& c);
json to_json(const RigidityReport& r, const BlaschkeProduct& b);

}  // namespace beurling::cli
