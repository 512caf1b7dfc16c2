#include <set>

#include "core/canon.hpp"
#include "core/figures.hpp"
#include "core/filters.hpp"
#include "core/json_io.hpp"
#include "doctest.h"

using namespace anng;

TEST_CASE("figure 7.1: special survivor structure") {
    IncidencePair p = figure_pair("7.1");
    REQUIRE(validate(p).empty());
    FilterContext c = make_filter_context(p);
    REQUIRE(c.usable);
    for (const auto& v : run_filters(c)) {
        INFO(v.name, ": ", v.witness);
        CHECK(v.pass);
    }
    CHECK(c.side[0].special);
    CHECK(c.side[1].special);
    int interior = 0, boundary = 0;
    for (const auto& a : p.arcs) (a.boundary ? boundary : interior)++;
    CHECK(interior == 2);
    CHECK(boundary == 4);
}

TEST_CASE("figure 8.1: doubled reduced edges, jumping number 2") {
    IncidencePair p = figure_pair("8.1");
    REQUIRE(validate(p).empty());
    FilterContext c = make_filter_context(p);
    REQUIRE(c.usable);
    for (const auto& v : run_filters(c)) {
        INFO(v.name, ": ", v.witness);
        CHECK(v.pass);
    }
    CHECK_FALSE(c.side[0].special);
    CHECK_FALSE(c.side[1].special);
    REQUIRE(c.g.red1.edges.size() == 6);
    REQUIRE(c.g.red2.edges.size() == 6);
    for (const auto& e : c.g.red1.edges) CHECK(e.arcs.size() == 2);
    for (const auto& e : c.g.red2.edges) CHECK(e.arcs.size() == 2);

    // The order of the label-1 endpoints around v1 transfers as the
    // documented jump pattern: u1-order a,c,e,k,d becomes a,e,d,c,k.
    const auto& v2 = c.g.view2;
    std::vector<int> order;
    for (int t = 0; t < 10; t += 2) {
        for (int a = 0; a < static_cast<int>(v2.arcs.size()); ++a) {
            const auto& e = v2.arcs[a];
            if (e.v0.vertex == 0 && e.v0.slot == t) order.push_back(a);
            if (!e.boundary && e.v1.vertex == 0 && e.v1.slot == t) order.push_back(a);
        }
    }
    // arcs were pushed as a,b,c,d,e,f,k,l,g,h,i,j -> ids 0,2,4,6,3 spell
    // a,c,e,k,d on u1 and a,e,d,c,k here.
    CHECK(order == std::vector<int>{0, 4, 3, 2, 6});

    // With jumping number 1 the same endpoint data breaks the jump rule.
    IncidencePair q1 = p;
    q1.par.q = 1;
    bool jump_broken = false;
    for (const auto& viol : validate(q1)) jump_broken |= viol.invariant == "jump-ordering";
    CHECK(jump_broken);
}

TEST_CASE("figure 8.2: unique completion of the closed shape") {
    auto codes = derive_closed_delta4_codes();
    REQUIRE(codes.size() == 1);
    IncidencePair p = figure_pair("8.2");
    REQUIRE(validate(p).empty());
    CHECK(canonicalize(p) == codes[0]);

    FilterContext c = make_filter_context(p);
    for (const auto& v : run_filters(c)) {
        INFO(v.name, ": ", v.witness);
        CHECK(v.pass);
    }
    for (const auto& a : p.arcs) CHECK_FALSE(a.boundary);
    REQUIRE(c.g.red1.edges.size() == 4);
    for (const auto& e : c.g.red1.edges) CHECK(e.arcs.size() == 2);
}

TEST_CASE("figures round-trip through json with stable canonical codes") {
    for (const auto& id : figure_ids()) {
        IncidencePair p = figure_pair(id);
        IncidencePair q = pair_from_json(pair_to_json(p));
        CHECK(validate(q).empty());
        CHECK(canonicalize(q) == canonicalize(p));
        CHECK(pair_to_json(normal_form(q)) == pair_to_json(normal_form(p)));
    }
}

TEST_CASE("figures are pairwise non-equivalent") {
    std::set<std::string> codes;
    for (const auto& id : figure_ids()) codes.insert(canonicalize(figure_pair(id)));
    CHECK(codes.size() == 3);
}
