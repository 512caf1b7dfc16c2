// Scratch: pin down rotations for the two-vertex-per-boundary triangulated
// annulus used as the classifier oracle.
#include <cstdio>

#include "core/classify.hpp"
#include "core/map.hpp"

using namespace anng;

int main() {
    // vertices a=0,b=1,c=2,d=3; rings 4,5.
    // arcs: bd_a=0, bd_b=1, bd_c=2, bd_d=3, e1(a-b right)=4, e2(a-b left)=5,
    //       e3(c-d right)=6, e4(c-d left)=7, v1(a-c)=8, v2(a-d)=9,
    //       v3(b-c)=10, v4(b-d)=11
    AnnularMap m;
    m.nodes.assign(6, {});
    m.ring0 = 4;
    m.ring1 = 5;
    m.nodes[4].ring = m.nodes[5].ring = true;
    // rotations derived from the eight triangle faces
    m.nodes[0].rot = {0, 8, 18, 16, 10};
    m.nodes[1].rot = {2, 11, 20, 22, 9};
    m.nodes[2].rot = {4, 14, 21, 17, 12};
    m.nodes[3].rot = {6, 13, 19, 23, 15};
    m.nodes[4].rot = {1, 3};
    m.nodes[5].rot = {5, 7};
    if (!m.index_darts(24)) {
        printf("bad darts\n");
        return 1;
    }
    FaceData f = trace_walks(m);
    printf("pieces=%d planar=%d walks=%d\n", f.piece_count, pieces_planar(m, f),
           f.walk_count());
    printf("%s", map_debug(m, f).c_str());
    auto rg = make_reduced_graph(m);
    if (!rg) {
        printf("not reduced/planar\n");
        return 1;
    }
    auto cls = classify(*rg);
    printf("int_low=%d bd_low=%d tri=%d special=%d\n", cls.interior_low_valency,
           cls.boundary_low_valency, cls.triangular, cls.special);
    return 0;
}
