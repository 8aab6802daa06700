#pragma once

#include <string>

#include <json.hpp>

#include "cutspec/algebra.hpp"
#include "cutspec/spectrum.hpp"

namespace cutspec {

using Json = nlohmann::ordered_json;

// Cut and value schema:
//   {"cut":"bottom"} | {"cut":"top"} | {"cut":"prefix","p":[ints]} | {"cut":"infty"}
Json cut_to_json(const Cut& c);
Json cutinf_to_json(const CutOrInfty& v);
Cut cut_from_json(const Json& j, int rank);
CutOrInfty cutinf_from_json(const Json& j, int rank);

// Ideal cuts accept the cut schema (as the boundary) or the symbolic
// shorthands "Ov", "Iv", "F", "zero", "P1".."Pr".
Json ideal_cut_to_json(const IdealCut& ic, int rank);
IdealCut ideal_cut_from_json(const Json& j, int rank);

Json group_to_json(const GroupElem& g);
GroupElem group_from_json(const Json& j, int rank);

// Model elements serialize as a list of [numerator, denominator, [exponents]].
Json model_elem_to_json(const ModelElem& e);
ModelElem model_elem_from_json(const Json& j, int rank);

// Algebra elements: {"matrix": [[elem,...],...]} or {"coeffs": [elem,...]}.
Json algebra_elem_to_json(const AlgebraElem& x);
AlgebraElem algebra_elem_from_json(const Json& j, int rank);

Json algebra_to_json(const AlgebraVariant& alg);
AlgebraVariant algebra_from_json(const Json& j, int rank);

// Whole instance files. Fixture references ("algebra": "<name>") are resolved
// by the caller through the fixture registry before this layer.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json ideal_to_json(const Ideal& ideal, int rank);
Json contraction_map_to_json(const ContractionMap& m);

/// FNV-1a over the canonical dump, as a hex string.
std::string digest(const Json& j);

} // namespace cutspec
