#include <map>
#include <set>

#include "core/classify.hpp"
#include "core/figures.hpp"
#include "core/filters.hpp"
#include "doctest.h"

using namespace anng;

namespace {

AnnularMap triangulated_annulus() {
    // Two boundary vertices per circle, eight triangular faces; rotations
    // derived by hand from the face cycles.
    AnnularMap m;
    m.nodes.assign(6, {});
    m.ring0 = 4;
    m.ring1 = 5;
    m.nodes[4].ring = m.nodes[5].ring = true;
    m.nodes[0].rot = {0, 8, 18, 16, 10};
    m.nodes[1].rot = {2, 11, 20, 22, 9};
    m.nodes[2].rot = {4, 14, 21, 17, 12};
    m.nodes[3].rot = {6, 13, 19, 23, 15};
    m.nodes[4].rot = {1, 3};
    m.nodes[5].rot = {5, 7};
    REQUIRE(m.index_darts(24));
    return m;
}

}  // namespace

TEST_CASE("triangulated annulus classifies as triangular") {
    auto rg = make_reduced_graph(triangulated_annulus());
    REQUIRE(rg.has_value());
    CHECK(rg->faces.walk_count() == 8);
    Classification c = classify(*rg);
    CHECK(c.triangular);
    CHECK_FALSE(c.interior_low_valency);
    CHECK_FALSE(c.boundary_low_valency);
    CHECK_FALSE(c.special);
}

TEST_CASE("isolated interior vertex is low valency") {
    AnnularMap m;
    m.nodes.assign(3, {});
    m.ring0 = 1;
    m.ring1 = 2;
    m.nodes[1].ring = m.nodes[2].ring = true;
    REQUIRE(m.index_darts(0));
    FaceData f = trace_walks(m);
    auto tables = enumerate_region_tables(f);
    REQUIRE_FALSE(tables.empty());
    auto rg = make_reduced_graph(m, &tables.front());
    REQUIRE(rg.has_value());
    Classification c = classify(*rg);
    CHECK(c.interior_low_valency);
    CHECK(c.witness_vertex == 0);
}

TEST_CASE("figure 7.1 dual graph is special; loops graph too") {
    IncidencePair p = figure_pair("7.1");
    PairGeometry g = build_pair_geometry(p);
    REQUIRE(g.usable);
    Classification c2 = classify_view(g.view2);
    CHECK(c2.special);
    Classification c1 = classify_view(g.view1);
    CHECK(c1.special);
}

TEST_CASE("figure 8.2 graphs classify without boundary flags") {
    IncidencePair p = figure_pair("8.2");
    PairGeometry g = build_pair_geometry(p);
    REQUIRE(g.usable);
    Classification c = classify_view(g.view1);
    CHECK(c.any());
    CHECK_FALSE(c.special);
    CHECK(c.interior_low_valency);  // reduced valency 4 vertices, no boundary
}

TEST_CASE("classifier totality on the small exhaustive corpus") {
    int count = 0, zero_flag = 0;
    int max_edges_seen = 0;
    exhaustive_reduced_corpus(2, 7, [&](const ReducedAnnularGraph& rg) {
        count++;
        max_edges_seen = std::max(max_edges_seen, rg.map.arc_count());
        if (!classify(rg).any()) zero_flag++;
    });
    CHECK(count > 0);
    CHECK(zero_flag == 0);
    // Reduced two-vertex annulus graphs never exceed 3n = 6 edges.
    CHECK(max_edges_seen <= 6);
}

TEST_CASE("classifier totality on seeded random graphs") {
    int produced = 0, zero_flag = 0;
    for (uint64_t seed = 1; seed <= 400; ++seed) {
        auto rg = random_reduced_graph(seed, 6);
        if (!rg) continue;
        produced++;
        if (!classify(*rg).any()) zero_flag++;
    }
    CHECK(produced > 100);
    CHECK(zero_flag == 0);
}

TEST_CASE("special is reduction-invariant on views") {
    IncidencePair p = figure_pair("7.1");
    PairGeometry g = build_pair_geometry(p);
    // View-level special agrees with the reduced graph's special flag.
    CHECK(is_special(g.view1, g.geo1, g.red1) == classify_view(g.view1).special);
    CHECK(is_special(g.view2, g.geo2, g.red2) == classify_view(g.view2).special);
}
