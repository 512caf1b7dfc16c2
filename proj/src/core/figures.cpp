#include "figures.hpp"

#include <set>
#include <stdexcept>

#include "canon.hpp"
#include "filters.hpp"

namespace anng {

namespace {

// delta = 4 special pair: u1 carries two nested loops and two boundary
// pairs; the dual graph is the two-vertex ladder.
IncidencePair build_71() {
    IncidencePair p;
    p.par = {4, 1, 2, 1};
    p.sign1 = {1};
    p.sign2 = {1, -1};
    auto pt = [&](int s) { return make_point(p.par, 0, s, 0); };
    auto bd = [&](int s, int r1, int r2) {
        PairArc a;
        a.boundary = true;
        a.p0 = pt(s);
        a.ring1 = r1;
        a.ring2 = r2;
        p.arcs.push_back(a);
    };
    auto in = [&](int s0, int s1) {
        PairArc a;
        a.p0 = pt(s0);
        a.p1 = pt(s1);
        p.arcs.push_back(a);
    };
    bd(0, 0, 0);  // e1
    bd(1, 0, 1);  // e2
    in(2, 7);     // e3 loop
    in(3, 6);     // e4 loop nested inside e3
    bd(4, 1, 1);  // e5
    bd(5, 1, 0);  // e6
    p.boundary_order1[0] = {0, 1};
    p.boundary_order1[1] = {4, 5};
    p.boundary_order2[0] = {0, 5};
    p.boundary_order2[1] = {4, 1};
    return p;
}

// delta = 5 pair with every reduced edge doubled and jumping number 2.
// Slot tables around u1 and u2 (preferred order):
//   u1: a b c d e f k l d c      u2: g h i j k l e f j i
IncidencePair build_81() {
    IncidencePair p;
    p.par = {5, 2, 2, 2};
    p.sign1 = {1, -1};
    p.sign2 = {1, -1};
    auto pt = [&](int i, int s) { return make_point(p.par, i, s, 0); };
    auto bd = [&](int i, int s, int r1, int r2) {
        PairArc a;
        a.boundary = true;
        a.p0 = pt(i, s);
        a.ring1 = r1;
        a.ring2 = r2;
        p.arcs.push_back(a);
        return static_cast<int>(p.arcs.size()) - 1;
    };
    auto in = [&](int i0, int s0, int i1, int s1) {
        PairArc a;
        a.p0 = pt(i0, s0);
        a.p1 = pt(i1, s1);
        p.arcs.push_back(a);
        return static_cast<int>(p.arcs.size()) - 1;
    };
    int a = bd(0, 0, 0, 0);
    int b = bd(0, 1, 0, 1);
    in(0, 2, 0, 9);  // c: loop at u1
    in(0, 3, 0, 8);  // d: loop at u1
    in(0, 4, 1, 6);  // e
    in(0, 5, 1, 7);  // f
    in(0, 6, 1, 4);  // k
    in(0, 7, 1, 5);  // l
    int g = bd(1, 0, 1, 0);
    int h = bd(1, 1, 1, 1);
    in(1, 2, 1, 9);  // i: loop at u2
    in(1, 3, 1, 8);  // j: loop at u2
    p.boundary_order1[0] = {a, b};
    p.boundary_order1[1] = {g, h};
    p.boundary_order2[0] = {a, g};
    p.boundary_order2[1] = {b, h};
    return p;
}

struct Closed4Result {
    std::vector<std::string> codes;
    std::vector<IncidencePair> reps;
};

// Completions of the closed delta = 4 shape: nested loops at both vertices,
// the four middle slots of u1 matched label-wise to those of u2, free jump
// offsets, every ring nesting.
Closed4Result closed_delta4_search() {
    Closed4Result out;
    std::set<std::string> seen;
    FillingParams par{4, 2, 2, 1};
    for (int c21 = 0; c21 < 4; ++c21)
        for (int c22 = 0; c22 < 4; ++c22)
            for (int swap02 : {0, 1})
                for (int swap13 : {0, 1}) {
                    auto pt = [&](int i, int s) {
                        int c = i == 0 ? 0 : (s % 2 == 0 ? c21 : c22);
                        return make_point(par, i, s, c);
                    };
                    IncidencePair p;
                    p.par = par;
                    p.sign1 = {1, -1};
                    p.sign2 = {1, -1};
                    auto in = [&](int i0, int s0, int i1, int s1) {
                        PairArc a;
                        a.p0 = pt(i0, s0);
                        a.p1 = pt(i1, s1);
                        p.arcs.push_back(a);
                    };
                    in(0, 0, 0, 7);  // loops at u1
                    in(0, 1, 0, 6);
                    in(1, 0, 1, 7);  // loops at u2
                    in(1, 1, 1, 6);
                    in(0, 2, 1, swap02 ? 4 : 2);
                    in(0, 4, 1, swap02 ? 2 : 4);
                    in(0, 3, 1, swap13 ? 5 : 3);
                    in(0, 5, 1, swap13 ? 3 : 5);
                    for (const RegionSpec& s1 : enumerate_view_region_specs(p.project(1))) {
                        p.regions1 = s1;
                        for (const RegionSpec& s2 :
                             enumerate_view_region_specs(p.project(2))) {
                            p.regions2 = s2;
                            if (!validate(p).empty()) continue;
                            FilterContext ctx = make_filter_context(p);
                            if (!ctx.usable) continue;
                            bool clean = true;
                            for (const auto& verdict : run_filters(ctx))
                                clean &= verdict.pass;
                            if (!clean) continue;
                            std::string code = canonicalize(p);
                            if (seen.insert(code).second) {
                                out.codes.push_back(code);
                                out.reps.push_back(p);
                            }
                        }
                    }
                }
    return out;
}

IncidencePair build_82() {
    // Unique survivor of closed_delta4_search, pinned as data for fast
    // lookup; the derivation test recomputes it.
    static const IncidencePair cached = [] {
        Closed4Result r = closed_delta4_search();
        if (r.reps.size() != 1)
            throw std::logic_error("closed delta-4 derivation is not unique");
        return normal_form(r.reps[0]);
    }();
    return cached;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"7.1", "8.1", "8.2"};
    return ids;
}

IncidencePair figure_pair(const std::string& id) {
    if (id == "7.1") return build_71();
    if (id == "8.1") return build_81();
    if (id == "8.2") return build_82();
    throw std::invalid_argument("unknown figure id: " + id);
}

std::vector<std::string> derive_closed_delta4_codes() {
    return closed_delta4_search().codes;
}

}  // namespace anng
