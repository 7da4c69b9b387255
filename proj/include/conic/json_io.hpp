#pragma once

#include "conic/almost_simplicial.hpp"
#include "conic/complexes.hpp"
#include "conic/cone.hpp"
#include "conic/search.hpp"

#include <json.hpp>

namespace conic {

using json = nlohmann::json;

json to_json(const IntVec& v);
IntVec intvec_from_json(const json& j);

// {"name": optional string, "rays": [[int,...],...]}; dimension from row length.
ConeSpec cone_from_json(const json& j);
json to_json(const ConeSpec& spec);

json class_group_fragment(const ClassGroupData& cg);     // {"free_rank","torsion","betas"}
json zonotope_fragment(const ZonotopeModel& z);          // {"lattice_points"}
json to_json(const PathSpec& p);                         // {"subset","start","end","length"}
json to_json(const ComplexProfile& prof);                // {"point","degrees","length"}
ComplexProfile profile_from_json(const json& j);
json to_json(const SearchResult& r);                     // {"incredulous_sets","subsets_examined"}
json to_json(const Classification& c);                   // {"verdict","witness","reason"}

}  // namespace conic
