#include <set>
#include <stdexcept>

#include "core/canon.hpp"
#include "core/pair.hpp"
#include "doctest.h"

using namespace anng;

namespace {

IncidencePair fig71_like() {
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
    bd(0, 0, 0);
    bd(1, 0, 1);
    in(2, 7);
    in(3, 6);
    bd(4, 1, 1);
    bd(5, 1, 0);
    p.boundary_order1[0] = {0, 1};
    p.boundary_order1[1] = {4, 5};
    p.boundary_order2[0] = {0, 5};
    p.boundary_order2[1] = {4, 1};
    return p;
}

}  // namespace

TEST_CASE("symmetry generators preserve the structure") {
    IncidencePair p = fig71_like();
    REQUIRE(validate(p).empty());

    // Reflections and reversals are involutions.
    for (auto* op : {&sym_mirror1, &sym_mirror2, &sym_swap_rings1, &sym_swap_rings2,
                     &sym_reverse1, &sym_reverse2}) {
        IncidencePair twice = (*op)((*op)(p));
        CHECK(encode_pair(normal_form(twice)) == encode_pair(normal_form(p)));
    }

    // Reflections keep the jump reading; a traversal reversal flips it.
    auto so = jump_offsets_signed(sym_mirror1(p));
    REQUIRE(so.has_value());
    CHECK(so->step == 1);
    CHECK(validate(normal_form(sym_mirror1(p))).empty());
    auto so2 = jump_offsets_signed(sym_reverse1(p));
    REQUIRE(so2.has_value());
    CHECK(so2->step == -1);
    auto so3 = jump_offsets_signed(sym_reverse1(sym_reverse2(p)));
    REQUIRE(so3.has_value());
    CHECK(so3->step == 1);

    // Composite of both reversals is again a valid pair.
    CHECK(validate(normal_form(sym_reverse1(sym_reverse2(p)))).empty());
}

TEST_CASE("canonical code is constant on the orbit") {
    IncidencePair p = fig71_like();
    std::string code = canonicalize(p);
    CHECK(code == canonicalize(sym_rotate2(p)));
    CHECK(code == canonicalize(sym_swap_rings1(p)));
    CHECK(code == canonicalize(sym_swap_rings2(p)));
    CHECK(code == canonicalize(sym_mirror1(p)));
    CHECK(code == canonicalize(sym_mirror1(sym_mirror2(p))));
    CHECK(code == canonicalize(sym_reverse1(sym_reverse2(p))));
    auto orbit = symmetry_orbit(p);
    CHECK(orbit.size() >= 4);
    for (const auto& st : orbit) CHECK(canonicalize(st) == code);
}

TEST_CASE("distinct structures get distinct codes") {
    IncidencePair p = fig71_like();
    IncidencePair q = p;
    // Reroute the second boundary pair: e2 to the other circle on side 2.
    q.arcs[1].ring2 = 0;
    q.arcs[5].ring2 = 1;
    q.boundary_order2[0] = {0, 1};
    q.boundary_order2[1] = {4, 5};
    if (validate(q).empty()) CHECK(canonicalize(p) != canonicalize(q));
}
