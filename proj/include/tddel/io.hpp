#pragma once

#include "tddel/complex.hpp"
#include "tddel/geom.hpp"
#include "tddel/rdel.hpp"
#include "tddel/represent.hpp"
#include "tddel/tdsystem.hpp"
#include "tddel/witness.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace tddel::io {

using json = nlohmann::json;

// Complexes: {"vertices": [...], "facets": [[...], ...]}.  The empty face is
// implicit; an empty facet list denotes the complex with no nonempty face.
json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

// Representations: {"d": 4, "elements": [...], "orders": [[...], ...]},
// each order ascending.
json to_json(const Representation& r);
Representation representation_from_json(const json& j);

// Point configurations: {"d": 3, "points": {"a": ["7/10","1/10","1/5"]}}.
// Rationals are strings "p/q" with integer shorthand "p" accepted.
json to_json(const PointConfiguration& p);
PointConfiguration points_from_json(const json& j);

// Planar point sets: {"points": {"p1": ["0","0"], ...}}.
json to_json(const PlanarPointSet& p);
PlanarPointSet planar_from_json(const json& j);

// Systems: rows/cols with 1-based order and coordinate indices, sparse
// entries as [row, col, sign] triples, plus the rendered inequalities.
json to_json(const TDSystem& s);
// CSV triplets: edge_u,edge_v,order,vertex,coord,value
std::string system_to_csv(const TDSystem& s);

// Multi-flows: [{"order": 1, "from": "e", "to": "g", "value": "1"}, ...].
json to_json(const MultiFlow& m);
MultiFlow multiflow_from_json(const json& j);

// Verdicts: {"solution": {...}} or {"certificate": {"multiflow": [...]}}.
json to_json(const FeasibilityVerdict& v);

json to_json(const StandardnessReport& r);

json to_json(const CounterexampleReport& r);

// Serialization used by the CLI: 2-space indent, sorted keys, newline.
std::string dump(const json& j);

// Parses text, translating parse errors to InputError.
json parse(const std::string& text);

} // namespace tddel::io
