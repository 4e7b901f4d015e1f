#pragma once

#include <string>

#include <json.hpp>

#include "endolie/census.hpp"
#include "endolie/module.hpp"

namespace endolie {

using json = nlohmann::ordered_json;

/// Algebra file: { "p", "basis", "brackets": [[i, j, [coeffs]]],
/// "p_power": [[coeffs]], "weights": [[ints]] | null, "nilpotent" }.
json algebra_to_json(const LiePresentation& pres);
LiePresentation algebra_from_json(const json& j);

/// Module file: { "algebra": "preset:NAME:P" or a file path, "dim",
/// "action": [row-major matrix per generator], "weights" | null }.
json module_to_json(const ModuleRep& m);
/// base_dir resolves relative algebra file references.
ModuleRep module_from_json(const json& j, const std::string& base_dir);

json census_to_json(const CensusReport& rep);

ModuleRep load_module(const std::string& path);
void save_module(const ModuleRep& m, const std::string& path);
LiePresentation load_algebra(const std::string& path);
void save_json(const json& j, const std::string& path);

/// DOT text of a weight diagram; edges labeled a1/a2 by simple root.
std::string diagram_to_dot(const WeightDiagram& d);
/// Parses DOT emitted by diagram_to_dot back into node/arrow sets.
WeightDiagram diagram_from_dot(const std::string& text);

/// Cached algebra for a "preset:NAME:P" tag or an algebra file path.
AlgebraPtr resolve_algebra(const std::string& ref, const std::string& base_dir);

}  // namespace endolie
