#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anng {

using Dart = int32_t;

// One node of an annular fat-graph map: either a fat vertex or one of the
// two boundary circles of the annulus ("ring"). The rotation lists darts in
// counterclockwise drawing order around the node.
struct MapNode {
    bool ring = false;
    std::vector<Dart> rot;
};

// Oriented combinatorial map of a graph embedded in an annulus.
// Arc i owns darts 2i and 2i+1; theta(d) = d^1 is the end swap.
// Rings are ordinary nodes; a boundary circle with no edge endpoints is an
// isolated node and its position is recorded by a RegionTable.
struct AnnularMap {
    std::vector<MapNode> nodes;
    int ring0 = -1;
    int ring1 = -1;
    std::vector<int> node_of;  // dart -> node
    std::vector<int> pos_of;   // dart -> index into nodes[node].rot

    int dart_count() const { return static_cast<int>(node_of.size()); }
    int arc_count() const { return dart_count() / 2; }
    int fat_count() const { return static_cast<int>(nodes.size()) - 2; }

    static Dart theta(Dart d) { return d ^ 1; }
    static int arc_of(Dart d) { return d >> 1; }

    Dart rot_next(Dart d) const {
        const auto& r = nodes[node_of[d]].rot;
        return r[(pos_of[d] + 1) % r.size()];
    }
    Dart rot_prev(Dart d) const {
        const auto& r = nodes[node_of[d]].rot;
        return r[(pos_of[d] + r.size() - 1) % r.size()];
    }

    // Rebuilds node_of/pos_of from the rotations. Returns false if some dart
    // is missing or repeated.
    bool index_darts(int darts);
};

// Face walks of the map: orbits of d -> rot_next(theta(d)). Every dart lies
// on exactly one walk. Boundary circles without endpoints get a synthetic
// empty walk so that each closed curve of the complex is represented.
struct FaceData {
    std::vector<std::vector<Dart>> walks;
    std::vector<int> walk_ring;      // synthetic walks: node id of the empty ring, else -1
    std::vector<int> walk_of_dart;
    std::vector<int> piece_of_walk;  // connected component ("piece") of each walk
    std::vector<int> piece_of_node;
    int piece_count = 0;

    int walk_count() const { return static_cast<int>(walks.size()); }
};

FaceData trace_walks(const AnnularMap& m);

// Euler check per piece: every connected piece must embed in the sphere.
bool pieces_planar(const AnnularMap& m, const FaceData& f);

// Assignment of walks to complementary regions of the complex in the
// annulus. For a connected complex this is the identity; with several pieces
// it records how pieces nest inside each other's faces.
struct RegionTable {
    std::vector<int> region_of_walk;
    int region_count = 0;

    int chi(const FaceData& f, int region) const;
    bool is_disk(const FaceData& f, int region) const { return chi(f, region) == 1; }
};

// Identity table for a one-piece complex; undefined for several pieces.
RegionTable single_piece_regions(const FaceData& f);

bool region_table_valid(const FaceData& f, const RegionTable& t);

// All nesting arrangements of the pieces in the annulus.
std::vector<RegionTable> enumerate_region_tables(const FaceData& f);

// Region seen across a corner of a node: the region of the walk that turns
// at position `pos` of `node` (between rot[pos] and rot[pos+1]).
int region_at_corner(const AnnularMap& m, const FaceData& f, const RegionTable& t,
                     int node, int pos);

// Region of the annulus boundary circle `ring_node`.
int region_of_ring(const AnnularMap& m, const FaceData& f, const RegionTable& t,
                   int ring_node);

// True iff the subcomplex made of `arcs` (with their endpoint vertices)
// separates the two boundary circles, i.e. is not contained in a disk.
bool subgraph_essential(const AnnularMap& m, const FaceData& f, const RegionTable& t,
                        const std::vector<int>& arcs);

// Parallelism. Two arcs are adjacent-parallel when they cobound a disk
// region with exactly two arc sides. Families are the transitive closure,
// ordered along the band; `cyclic` marks a family closing up into an
// annular band (no ending edges).
struct ParallelFamilies {
    std::vector<std::vector<int>> family_arcs;  // band order
    std::vector<bool> cyclic;
    std::vector<int> family_of_arc;
};

ParallelFamilies parallel_families(const AnnularMap& m, const FaceData& f,
                                   const RegionTable& t);

// Disk regions with exactly one arc side and no saving ring: forbidden.
bool has_trivial_loop(const AnnularMap& m, const FaceData& f, const RegionTable& t);

std::string map_debug(const AnnularMap& m, const FaceData& f);

}  // namespace anng
