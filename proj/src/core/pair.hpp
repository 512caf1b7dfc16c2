#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "view.hpp"

namespace anng {

// Filling parameters. q is the jumping number: 1 for delta <= 4, and 1 or 2
// for delta = 5.
struct FillingParams {
    int delta = 0;
    int n1 = 0;
    int n2 = 0;
    int q = 1;

    bool valid() const;
    int points() const { return delta * n1 * n2; }
};

std::vector<int> allowed_q(int delta);

// One intersection point of the two vertex circle systems, addressed on
// both sides: slot s at vertex u_i and slot t at vertex v_j. Vertices and
// labels are 0-based internally.
struct PairPoint {
    int i = -1, s = -1;
    int j = -1, t = -1;
};

struct PairArc {
    bool boundary = false;
    PairPoint p0;
    PairPoint p1;              // interior arcs only
    int ring1 = -1, ring2 = -1;  // boundary arcs only
};

// The shared arc structure of the two graphs.
struct IncidencePair {
    FillingParams par;
    std::vector<int> sign1, sign2;  // +1/-1
    std::vector<PairArc> arcs;
    std::array<std::vector<int>, 2> boundary_order1;
    std::array<std::vector<int>, 2> boundary_order2;
    std::optional<RegionSpec> regions1, regions2;

    AnnulusGraphView project(int side) const;
};

// Point address arithmetic under the jump rule: on side 2 the label-i
// endpoints around v_j appear at occurrences m with side-1 occurrence
// k = c + q*m (mod delta).
inline int point_label2(const FillingParams& p, int s) { return s % p.n2; }
inline int point_occ1(const FillingParams& p, int s) { return s / p.n2; }
inline int point_label1(const FillingParams& p, int t) { return t % p.n1; }
inline int point_occ2(const FillingParams& p, int t) { return t / p.n1; }

// Completes (i,s) to a full point using offset c = c[i][j].
PairPoint make_point(const FillingParams& p, int i, int s, int c);

// Structural validation per the type invariants; empty result means valid.
std::vector<Violation> validate(const IncidencePair& pair);

// Distance from slot P to slot Q along the preferred orientation of the
// vertex; throws on P == Q.
int rho(const IncidencePair& pair, int side, int vertex, int slot_p, int slot_q);

// Slot-origin gauge: shifts every vertex slot index so that the jump
// offsets satisfy c[i][0] = c[0][j] = 0. Pairs compare equal after this.
IncidencePair normalize_gauge(const IncidencePair& pair);

// Offset matrix of a structurally consistent pair (row-major n1 x n2);
// nullopt if some (i,j) block violates the jump rule.
std::optional<std::vector<int>> jump_offsets(const IncidencePair& pair);

// Sorts arcs by their least side-1 address and orients each arc so p0 < p1.
IncidencePair normalize_arc_order(const IncidencePair& pair);

// Both-side geometry of a pair.
struct PairGeometry {
    AnnulusGraphView view1, view2;
    ViewGeometry geo1, geo2;
    ReducedGraph red1, red2;
    bool usable = false;
};

PairGeometry build_pair_geometry(const IncidencePair& pair);

// e1, e2 interior non-loop arcs with the same endpoints in some view:
// rho_u(e1,e2) == rho_v(e2,e1) there.
bool equidistant_in(const IncidencePair& pair, int side, int arc1, int arc2);

// Arc pairs qualifying for the equidistance lemma: same endpoint vertices
// (non-loop) in both views.
std::vector<std::pair<int, int>> equidistance_candidates(const IncidencePair& pair);

}  // namespace anng
