#pragma once

#include <string>

#include "json.hpp"
#include "pair.hpp"
#include "view.hpp"

namespace anng {

// Pair wire format:
// {params:{delta,n1,n2,q}, arcs:[{id,kind,ends:{g1:[...],g2:[...]}}],
//  signs:{g1:[...],g2:[...]}, boundary_orders:{g1:[[...],[...]],g2:[[...],[...]]},
//  regions:{g1:[[key...]...],g2:[...]}}         (regions only when nested)
// Vertices and labels are 1-based on the wire, slots 0-based.
nlohmann::json pair_to_json(const IncidencePair& p);
IncidencePair pair_from_json(const nlohmann::json& j);

// Graph view wire format:
// {side, delta, n_self, n_other, vertices:[{index,sign,slots:[{label,arc}]}],
//  boundary:[[arc...],[arc...]], regions:[... optional]}
nlohmann::json view_to_json(const AnnulusGraphView& v);
AnnulusGraphView view_from_json(const nlohmann::json& j);

std::string dump_pretty(const nlohmann::json& j);

}  // namespace anng
