#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "map.hpp"

namespace anng {

// Violation of a structural invariant, with a human-readable witness.
struct Violation {
    std::string invariant;
    std::string witness;
};

// Names one face walk of the complex without referring to derived walk ids:
// either a side of an arc (arc, end) or the circle of an endpoint-free ring.
struct WalkKey {
    int arc = -1;
    int end = 0;
    int ring = -1;

    static WalkKey arc_side(int a, int e) { return {a, e, -1}; }
    static WalkKey ring_circle(int r) { return {-1, 0, r}; }
    bool operator==(const WalkKey&) const = default;
};

// Nesting of a disconnected complex: groups of walks sharing a region.
// Walks not mentioned form singleton regions.
using RegionSpec = std::vector<std::vector<WalkKey>>;

// One labeled intersection graph drawn in its annulus. Every fat vertex
// carries delta*n_other slots, indexed along the preferred orientation of
// the vertex, so the slot labels 1..n_other repeat delta times. Positive
// vertices read their slots counterclockwise in the drawing, negative ones
// clockwise.
struct AnnulusGraphView {
    struct VertexEnd {
        int vertex = -1;  // 0-based
        int slot = -1;
    };
    struct ArcEnds {
        bool boundary = false;
        VertexEnd v0;
        VertexEnd v1;    // interior only
        int ring = -1;   // boundary only: 0 or 1
    };

    int side = 1;
    int delta = 0;
    int n_self = 0;
    int n_other = 0;
    std::vector<int> sign;  // +1 / -1 per vertex
    std::vector<ArcEnds> arcs;
    std::array<std::vector<int>, 2> boundary_order;  // arc ids along each circle
    std::optional<RegionSpec> regions;               // required when the complex is disconnected

    int slots_per_vertex() const { return delta * n_other; }
    int label_of_slot(int slot) const { return slot % n_other + 1; }
    bool is_loop(int arc) const {
        return !arcs[arc].boundary && arcs[arc].v0.vertex == arcs[arc].v1.vertex;
    }
    // Interior arc joining parallel vertices (loops included).
    bool is_positive(int arc) const {
        const auto& a = arcs[arc];
        return !a.boundary && sign[a.v0.vertex] == sign[a.v1.vertex];
    }
};

// View bundled with its derived geometry.
struct ViewGeometry {
    AnnularMap map;
    FaceData faces;
    RegionTable regions;
    std::vector<std::vector<int>> slot_dart;  // vertex -> slot -> dart

    int ring_node(int r) const { return r == 0 ? map.ring0 : map.ring1; }
};

// Builds the dart map of a view. Structural failures (slot clashes, bad
// boundary lists, non-planar rotation data, invalid region table) are
// reported as violations; geometry is only usable when none are fatal.
struct BuiltView {
    ViewGeometry geo;
    std::vector<Violation> violations;
    bool usable = false;
};

BuiltView build_view(const AnnulusGraphView& v);

// Full structural validation: build + no-trivial-loop and friends.
std::vector<Violation> validate_view(const AnnulusGraphView& v);

// Complementary region report.
struct FaceInfo {
    int region = -1;
    int chi = 0;
    bool disk = false;
    std::vector<int> arc_sides;  // arcs along the region boundary, with multiplicity
};

std::vector<FaceInfo> trace_faces(const AnnulusGraphView& v);
std::vector<FaceInfo> trace_faces(const ViewGeometry& g);

// Reduced graph of a view: parallel families merged.
struct ReducedEdge {
    std::vector<int> arcs;  // band order (ends of the band first/last)
    bool cyclic = false;
    bool boundary = false;
    bool positive = false;  // interior families only
    int v0 = -1, v1 = -1;   // v1 = -1 - ring for boundary families
};

struct ReducedGraph {
    int n_vertices = 0;
    std::vector<ReducedEdge> edges;
    std::vector<int> family_of_arc;

    int valency(int vertex) const;
    int boundary_edge_count(int vertex) const;
};

ReducedGraph reduce(const AnnulusGraphView& v, const ViewGeometry& g);

// Reduced graph as its own map, for face-level questions (triangularity).
struct ReducedMapView {
    AnnularMap map;
    FaceData faces;
    RegionTable regions;
    std::vector<int> family_of_reduced_arc;
};

ReducedMapView reduced_map(const AnnulusGraphView& v, const ViewGeometry& g,
                           const ReducedGraph& rg);

// True iff the closed walk of interior arcs is not contained in a disk.
// Throws std::invalid_argument when the arcs do not form a closed walk.
bool is_essential(const AnnulusGraphView& v, const ViewGeometry& g,
                  const std::vector<int>& cycle_arcs);

// Permutation associated to a family of parallel negative interior edges.
// Maps the label at the lower-indexed endpoint vertex forward.
struct EdgePermutation {
    int lo_vertex = -1, hi_vertex = -1;
    std::vector<int> image;                // 1-based labels; 0 = undefined
    bool total = false;                    // family of full size n_other
    std::vector<std::vector<int>> orbits;  // total case only
};

EdgePermutation family_permutation(const AnnulusGraphView& v, const ViewGeometry& g,
                                   const ReducedGraph& rg, int family);

// Every vertex has at least two nonparallel boundary edges.
bool is_special(const AnnulusGraphView& v, const ViewGeometry& g, const ReducedGraph& rg);

std::string view_to_dot(const AnnulusGraphView& v);

// Resolves a walk key against built geometry; -1 if unresolvable.
int resolve_walk(const ViewGeometry& g, const WalkKey& key);

// Region spec of built geometry, listing only non-singleton regions.
RegionSpec region_spec_of(const ViewGeometry& g);

// Every nesting of the complex in the annulus (one entry, the identity,
// when it is connected). Empty when the rotation data is structurally bad.
std::vector<RegionSpec> enumerate_view_region_specs(const AnnulusGraphView& v);

}  // namespace anng
