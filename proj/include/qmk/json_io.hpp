#pragma once

#include "qmk/atomic_measure.hpp"
#include "qmk/branching.hpp"
#include "qmk/grid.hpp"
#include "qmk/profile.hpp"
#include "qmk/signature_law.hpp"

#include <json.hpp>

namespace qmk {

// JSON schemas: rationals are always "p/q" strings, never floats.
// AtomicMeasure          {"atoms": [[loc, weight], ...]}
// GridDensity            {"a":., "b":., "grid":[...], "values":[...], "class":"M"|"Mt"}
// GridDiagram            {"a":., "b":., "x0":., "grid":[...], "values":[...], "class":"D"|"Dt"}
// SignatureLaw           {"n":., "support": [[[parts], prob], ...]}
// BranchingLaw           {"parent": [parts], "support": [[[parts], prob], ...]}
// AsymptoticProfile      {"c": [c_1, c_2, ...]} (strings exact, numbers float)

nlohmann::json to_json(const AtomicMeasure& m);
nlohmann::json to_json(const SignedAtomicMeasure& m);
nlohmann::json to_json(const GridDensity& g);
nlohmann::json to_json(const GridDiagram& g);
nlohmann::json to_json(const SignatureLaw& law);
nlohmann::json to_json(const BranchingLaw& law);

AtomicMeasure atomic_measure_from_json(const nlohmann::json& j);
SignedAtomicMeasure signed_measure_from_json(const nlohmann::json& j);
GridDensity grid_density_from_json(const nlohmann::json& j);
GridDiagram grid_diagram_from_json(const nlohmann::json& j);
SignatureLaw signature_law_from_json(const nlohmann::json& j);
RationalProfile rational_profile_from_json(const nlohmann::json& j);
NumericProfile numeric_profile_from_json(const nlohmann::json& j);

}  // namespace qmk
