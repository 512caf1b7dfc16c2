#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "view.hpp"

namespace anng {

// Reduced annular graphs in the classifier's sense: arbitrary fat-graph
// maps with no monogon or bigon disk faces. Vertices may have any valency.
struct ReducedAnnularGraph {
    AnnularMap map;
    FaceData faces;
    RegionTable regions;
};

// Builds and checks reducedness; nullopt when the input is not a reduced
// embedding (monogon/bigon face, nonplanar rotation data, bad table).
std::optional<ReducedAnnularGraph> make_reduced_graph(AnnularMap map,
                                                      const RegionTable* table = nullptr);

struct Classification {
    bool interior_low_valency = false;  // interior vertex of valency <= 5
    bool boundary_low_valency = false;  // boundary vertex of valency <= 4, one boundary edge
    bool triangular = false;
    bool special = false;
    int witness_vertex = -1;  // for the two low-valency cases

    bool any() const {
        return interior_low_valency || boundary_low_valency || triangular || special;
    }
};

Classification classify(const ReducedAnnularGraph& rg);

// Classifies the reduced graph of a labeled view; throws when the view's
// reduced structure cannot be built.
Classification classify_view(const AnnulusGraphView& v);

// Exhaustive corpus: every reduced annular graph with at most `max_vertices`
// vertices and at most `max_edges` edges (raw dart assemblies; isomorphic
// repeats possible). Calls `fn` for each.
void exhaustive_reduced_corpus(int max_vertices, int max_edges,
                               const std::function<void(const ReducedAnnularGraph&)>& fn);

// Exhaustive corpus restricted to graphs where no vertex satisfies the two
// low-valency clauses; the complement is flagged by those clauses directly.
void exhaustive_unflagged_corpus(int max_vertices, int max_edges,
                                 const std::function<void(const ReducedAnnularGraph&)>& fn);

// Seeded rejection sampler over rotation systems.
std::optional<ReducedAnnularGraph> random_reduced_graph(uint64_t seed, int max_vertices);

}  // namespace anng
