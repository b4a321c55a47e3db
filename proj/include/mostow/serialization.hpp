#pragma once

#include <json.hpp>

#include "mostow/blmap.hpp"
#include "mostow/boundary_homeo.hpp"
#include "mostow/dyadic.hpp"

namespace mostow {

using Json = nlohmann::json;

// Map descriptions as structured config entries: matrix entries, Moebius
// coefficients, composition order. Dyadic sets use the literal format
// {d, L, cells: [[i], ...] or [[i,j], ...]}.

Json to_json(const MobiusMap& m);
Json to_json(const BLMap& H);
Json to_json(const BoundaryHomeo& h);
Json to_json(const DyadicSet& s);

MobiusMap mobius_from_json(const Json& j);
BLMap blmap_from_json(const Json& j);
BoundaryHomeo homeo_from_json(const Json& j);
DyadicSet dyadic_set_from_json(const Json& j);

}  // namespace mostow
