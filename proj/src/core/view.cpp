#include "view.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anng {

namespace {

std::string arc_name(int a) { return "arc " + std::to_string(a); }

}  // namespace

BuiltView build_view(const AnnulusGraphView& v) {
    BuiltView out;
    auto fail = [&](std::string inv, std::string wit) {
        out.violations.push_back({std::move(inv), std::move(wit)});
    };

    const int spv = v.slots_per_vertex();
    const int A = static_cast<int>(v.arcs.size());
    out.geo.slot_dart.assign(v.n_self, std::vector<int>(spv, -1));

    auto place = [&](const AnnulusGraphView::VertexEnd& e, Dart d) {
        if (e.vertex < 0 || e.vertex >= v.n_self || e.slot < 0 || e.slot >= spv) {
            fail("endpoint-range", arc_name(AnnularMap::arc_of(d)));
            return;
        }
        int& cell = out.geo.slot_dart[e.vertex][e.slot];
        if (cell != -1) {
            fail("slot-clash", "vertex " + std::to_string(e.vertex + 1) + " slot " +
                                   std::to_string(e.slot));
            return;
        }
        cell = d;
    };

    std::vector<int> ring_end(A, -1);
    for (int a = 0; a < A; ++a) {
        const auto& e = v.arcs[a];
        place(e.v0, 2 * a);
        if (e.boundary) {
            if (e.ring != 0 && e.ring != 1) fail("ring-range", arc_name(a));
            ring_end[a] = e.ring;
        } else {
            place(e.v1, 2 * a + 1);
        }
    }
    for (int u = 0; u < v.n_self; ++u)
        for (int s = 0; s < spv; ++s)
            if (out.geo.slot_dart[u][s] == -1)
                fail("slot-empty",
                     "vertex " + std::to_string(u + 1) + " slot " + std::to_string(s));

    // Boundary lists must enumerate exactly the boundary arcs of each ring.
    std::vector<int> listed(A, -1);
    for (int r = 0; r < 2; ++r) {
        for (int a : v.boundary_order[r]) {
            if (a < 0 || a >= A || !v.arcs[a].boundary || ring_end[a] != r || listed[a] != -1) {
                fail("boundary-order", "ring " + std::to_string(r) + " " + arc_name(a));
                continue;
            }
            listed[a] = r;
        }
    }
    for (int a = 0; a < A; ++a)
        if (v.arcs[a].boundary && listed[a] == -1) fail("boundary-order-missing", arc_name(a));

    if (static_cast<int>(v.sign.size()) != v.n_self) fail("sign-vector", "length");
    for (int s : v.sign)
        if (s != 1 && s != -1) fail("sign-vector", "value");

    if (!out.violations.empty()) return out;

    AnnularMap& m = out.geo.map;
    m.nodes.assign(v.n_self + 2, {});
    m.ring0 = v.n_self;
    m.ring1 = v.n_self + 1;
    m.nodes[m.ring0].ring = m.nodes[m.ring1].ring = true;
    for (int u = 0; u < v.n_self; ++u) {
        auto& rot = m.nodes[u].rot;
        rot.resize(spv);
        for (int s = 0; s < spv; ++s) {
            int cw = v.sign[u] > 0 ? s : spv - 1 - s;  // counterclockwise drawing order
            rot[cw] = out.geo.slot_dart[u][s];
        }
    }
    for (int r = 0; r < 2; ++r)
        for (int a : v.boundary_order[r])
            m.nodes[v.n_self + r].rot.push_back(2 * a + 1);
    if (!m.index_darts(2 * A)) {
        fail("dart-index", "internal");
        return out;
    }

    out.geo.faces = trace_walks(m);
    if (!pieces_planar(m, out.geo.faces)) {
        fail("non-planar", "rotation data does not embed in the annulus");
        return out;
    }
    if (v.regions.has_value()) {
        const int W = out.geo.faces.walk_count();
        std::vector<int> group_of(W, -1);
        bool ok = true;
        for (int gidx = 0; gidx < static_cast<int>(v.regions->size()); ++gidx) {
            for (const WalkKey& key : (*v.regions)[gidx]) {
                int w = resolve_walk(out.geo, key);
                if (w < 0 || group_of[w] != -1) {
                    ok = false;
                    break;
                }
                group_of[w] = gidx;
            }
        }
        if (!ok) {
            fail("region-table", "bad walk key in nesting");
            return out;
        }
        RegionTable t;
        t.region_of_walk.assign(W, -1);
        int next = static_cast<int>(v.regions->size());
        for (int w = 0; w < W; ++w)
            t.region_of_walk[w] = group_of[w] != -1 ? group_of[w] : next++;
        t.region_count = next;
        if (!region_table_valid(out.geo.faces, t)) {
            fail("region-table", "invalid nesting");
            return out;
        }
        out.geo.regions = std::move(t);
    } else if (out.geo.faces.piece_count == 1) {
        out.geo.regions = single_piece_regions(out.geo.faces);
    } else {
        fail("region-table", "disconnected complex requires explicit nesting");
        return out;
    }
    out.usable = true;
    return out;
}

int resolve_walk(const ViewGeometry& g, const WalkKey& key) {
    if (key.ring >= 0) {
        int node = key.ring == 0 ? g.map.ring0 : g.map.ring1;
        for (int w = 0; w < g.faces.walk_count(); ++w)
            if (g.faces.walk_ring[w] == node) return w;
        return -1;
    }
    if (key.arc < 0 || 2 * key.arc + key.end >= g.map.dart_count() || key.end < 0 ||
        key.end > 1)
        return -1;
    return g.faces.walk_of_dart[2 * key.arc + key.end];
}

namespace {

RegionSpec spec_from_table(const AnnularMap& m, const FaceData& f, const RegionTable& t) {
    std::vector<std::vector<int>> walks_in(t.region_count);
    for (int w = 0; w < f.walk_count(); ++w) walks_in[t.region_of_walk[w]].push_back(w);
    RegionSpec spec;
    for (const auto& ws : walks_in) {
        if (ws.size() < 2) continue;
        std::vector<WalkKey> group;
        for (int w : ws) {
            if (f.walk_ring[w] != -1) {
                if (f.walk_ring[w] != m.ring0 && f.walk_ring[w] != m.ring1)
                    throw std::logic_error("isolated vertex in a labeled view");
                group.push_back(WalkKey::ring_circle(f.walk_ring[w] == m.ring0 ? 0 : 1));
            } else {
                Dart least = *std::min_element(f.walks[w].begin(), f.walks[w].end());
                group.push_back(WalkKey::arc_side(AnnularMap::arc_of(least), least & 1));
            }
        }
        std::sort(group.begin(), group.end(), [](const WalkKey& a, const WalkKey& b) {
            return std::tuple(a.ring, a.arc, a.end) < std::tuple(b.ring, b.arc, b.end);
        });
        spec.push_back(std::move(group));
    }
    std::sort(spec.begin(), spec.end(), [](const auto& a, const auto& b) {
        auto key = [](const WalkKey& k) { return std::tuple(k.ring, k.arc, k.end); };
        return key(a.front()) < key(b.front());
    });
    return spec;
}

}  // namespace

RegionSpec region_spec_of(const ViewGeometry& g) {
    return spec_from_table(g.map, g.faces, g.regions);
}

std::vector<RegionSpec> enumerate_view_region_specs(const AnnulusGraphView& v) {
    AnnulusGraphView probe = v;
    probe.regions.reset();
    BuiltView b = build_view(probe);
    std::vector<RegionSpec> out;
    if (b.usable) {
        out.push_back(region_spec_of(b.geo));
        return out;
    }
    bool only_regions = true;
    for (const auto& viol : b.violations) only_regions &= viol.invariant == "region-table";
    if (!only_regions) return out;
    for (const auto& t : enumerate_region_tables(b.geo.faces))
        out.push_back(spec_from_table(b.geo.map, b.geo.faces, t));
    return out;
}

std::vector<Violation> validate_view(const AnnulusGraphView& v) {
    BuiltView b = build_view(v);
    if (!b.usable) return b.violations;
    if (has_trivial_loop(b.geo.map, b.geo.faces, b.geo.regions))
        b.violations.push_back({"trivial-loop", "disk face with a single edge side"});
    return b.violations;
}

std::vector<FaceInfo> trace_faces(const ViewGeometry& g) {
    std::vector<FaceInfo> out(g.regions.region_count);
    for (int r = 0; r < g.regions.region_count; ++r) {
        out[r].region = r;
        out[r].chi = g.regions.chi(g.faces, r);
        out[r].disk = out[r].chi == 1;
    }
    for (Dart d = 0; d < g.map.dart_count(); ++d)
        out[g.regions.region_of_walk[g.faces.walk_of_dart[d]]].arc_sides.push_back(
            AnnularMap::arc_of(d));
    for (auto& fi : out) std::sort(fi.arc_sides.begin(), fi.arc_sides.end());
    return out;
}

std::vector<FaceInfo> trace_faces(const AnnulusGraphView& v) {
    BuiltView b = build_view(v);
    if (!b.usable) {
        std::string msg = "structural error";
        if (!b.violations.empty())
            msg = b.violations[0].invariant + ": " + b.violations[0].witness;
        throw std::invalid_argument(msg);
    }
    return trace_faces(b.geo);
}

int ReducedGraph::valency(int vertex) const {
    int val = 0;
    for (const auto& e : edges) {
        if (e.v0 == vertex) val++;
        if (!e.boundary && e.v1 == vertex) val++;
    }
    return val;
}

int ReducedGraph::boundary_edge_count(int vertex) const {
    int c = 0;
    for (const auto& e : edges)
        if (e.boundary && e.v0 == vertex) c++;
    return c;
}

ReducedGraph reduce(const AnnulusGraphView& v, const ViewGeometry& g) {
    ParallelFamilies pf = parallel_families(g.map, g.faces, g.regions);
    ReducedGraph rg;
    rg.n_vertices = v.n_self;
    rg.family_of_arc = pf.family_of_arc;
    for (size_t fam = 0; fam < pf.family_arcs.size(); ++fam) {
        ReducedEdge e;
        e.arcs = pf.family_arcs[fam];
        e.cyclic = pf.cyclic[fam];
        int a0 = e.arcs.front();
        e.boundary = v.arcs[a0].boundary;
        e.v0 = v.arcs[a0].v0.vertex;
        e.v1 = e.boundary ? -1 - v.arcs[a0].ring : v.arcs[a0].v1.vertex;
        e.positive = !e.boundary && v.is_positive(a0);
        rg.edges.push_back(std::move(e));
    }
    return rg;
}

ReducedMapView reduced_map(const AnnulusGraphView& v, const ViewGeometry& g,
                           const ReducedGraph& rg) {
    // One representative arc per family; rotations keep the representative
    // dart positions in their original cyclic order.
    const int F = static_cast<int>(rg.edges.size());
    ReducedMapView out;
    out.family_of_reduced_arc.resize(F);
    std::iota(out.family_of_reduced_arc.begin(), out.family_of_reduced_arc.end(), 0);
    AnnularMap& m = out.map;
    m.nodes.assign(v.n_self + 2, {});
    m.ring0 = v.n_self;
    m.ring1 = v.n_self + 1;
    m.nodes[m.ring0].ring = m.nodes[m.ring1].ring = true;

    // The two sides of a collapsed band are the outward sides of its first
    // and last member; a member's outward side is the one not bounding the
    // bigon shared with its band neighbour.
    auto region_of_dart = [&](Dart d) {
        return g.regions.region_of_walk[g.faces.walk_of_dart[d]];
    };
    auto outer_dart = [&](int arc, int neighbour) -> Dart {
        // The shared bigon is the two-sided disk bounded by exactly this
        // pair; the outward side of `arc` is its other side.
        for (Dart d : {Dart(2 * arc), Dart(2 * arc + 1)}) {
            int r = region_of_dart(d);
            if (!g.regions.is_disk(g.faces, r)) return d;
            std::vector<int> sides;
            for (int w = 0; w < g.faces.walk_count(); ++w)
                if (g.regions.region_of_walk[w] == r)
                    for (Dart x : g.faces.walks[w]) sides.push_back(AnnularMap::arc_of(x));
            if (sides.size() != 2) return d;
            if (!((sides[0] == arc && sides[1] == neighbour) ||
                  (sides[0] == neighbour && sides[1] == arc)))
                return d;
        }
        throw std::logic_error("band member without an outward side");
    };
    std::vector<Dart> rep_dart(F * 2, -1);
    for (int f = 0; f < F; ++f) {
        const auto& band = rg.edges[f].arcs;
        if (rg.edges[f].cyclic)
            throw std::invalid_argument("closed parallel band has no reduced edge");
        if (band.size() == 1) {
            rep_dart[2 * f] = 2 * band[0];
            rep_dart[2 * f + 1] = 2 * band[0] + 1;
        } else {
            rep_dart[2 * f] = outer_dart(band.front(), band[1]);
            rep_dart[2 * f + 1] = outer_dart(band.back(), band[band.size() - 2]);
        }
    }
    // New rotation = original rotation filtered to representative darts.
    std::vector<int> new_dart_of_old(g.map.dart_count(), -1);
    for (int f = 0; f < F; ++f) {
        new_dart_of_old[rep_dart[2 * f]] = 2 * f;
        new_dart_of_old[rep_dart[2 * f + 1]] = 2 * f + 1;
    }
    for (int n = 0; n < static_cast<int>(g.map.nodes.size()); ++n) {
        for (Dart d : g.map.nodes[n].rot)
            if (new_dart_of_old[d] != -1) m.nodes[n].rot.push_back(new_dart_of_old[d]);
    }
    if (!m.index_darts(2 * F)) throw std::logic_error("reduced map darts");
    out.faces = trace_walks(m);

    // Inherit the region of each reduced walk from any original dart on it.
    out.regions.region_of_walk.assign(out.faces.walk_count(), -1);
    for (int w = 0; w < out.faces.walk_count(); ++w) {
        if (out.faces.walk_ring[w] != -1) {
            for (int ow = 0; ow < g.faces.walk_count(); ++ow)
                if (g.faces.walk_ring[ow] == out.faces.walk_ring[w])
                    out.regions.region_of_walk[w] = g.regions.region_of_walk[ow];
        } else {
            Dart nd = out.faces.walks[w][0];
            Dart od = rep_dart[nd];
            out.regions.region_of_walk[w] = g.regions.region_of_walk[g.faces.walk_of_dart[od]];
        }
    }
    // Normalize region ids.
    std::vector<int> remap;
    for (int& r : out.regions.region_of_walk) {
        auto it = std::find(remap.begin(), remap.end(), r);
        if (it == remap.end()) {
            remap.push_back(r);
            r = static_cast<int>(remap.size()) - 1;
        } else {
            r = static_cast<int>(it - remap.begin());
        }
    }
    out.regions.region_count = static_cast<int>(remap.size());
    return out;
}

bool is_essential(const AnnulusGraphView& v, const ViewGeometry& g,
                  const std::vector<int>& cycle_arcs) {
    if (cycle_arcs.empty()) throw std::invalid_argument("empty cycle");
    std::vector<int> deg(v.n_self, 0);
    for (int a : cycle_arcs) {
        if (a < 0 || a >= static_cast<int>(v.arcs.size()) || v.arcs[a].boundary)
            throw std::invalid_argument("cycle must consist of interior edges");
        deg[v.arcs[a].v0.vertex]++;
        deg[v.arcs[a].v1.vertex]++;
    }
    for (int d : deg)
        if (d % 2) throw std::invalid_argument("edge list is not a closed walk");
    return subgraph_essential(g.map, g.faces, g.regions, cycle_arcs);
}

EdgePermutation family_permutation(const AnnulusGraphView& v, const ViewGeometry& g,
                                   const ReducedGraph& rg, int family) {
    (void)g;
    const ReducedEdge& e = rg.edges.at(family);
    if (e.boundary || e.positive)
        throw std::invalid_argument("permutation is defined for negative interior families");
    EdgePermutation out;
    out.lo_vertex = std::min(e.v0, e.v1);
    out.hi_vertex = std::max(e.v0, e.v1);
    out.image.assign(v.n_other + 1, 0);
    int defined = 0;
    for (int a : e.arcs) {
        const auto& ae = v.arcs[a];
        int lo_slot = ae.v0.vertex == out.lo_vertex ? ae.v0.slot : ae.v1.slot;
        int hi_slot = ae.v0.vertex == out.lo_vertex ? ae.v1.slot : ae.v0.slot;
        int from = v.label_of_slot(lo_slot), to = v.label_of_slot(hi_slot);
        if (out.image[from] != 0) throw std::logic_error("family repeats a label");
        out.image[from] = to;
        defined++;
    }
    out.total = defined == v.n_other;
    if (out.total) {
        std::vector<bool> seen(v.n_other + 1, false);
        for (int k = 1; k <= v.n_other; ++k) {
            if (seen[k]) continue;
            std::vector<int> orbit;
            int x = k;
            while (!seen[x]) {
                seen[x] = true;
                orbit.push_back(x);
                x = out.image[x];
            }
            out.orbits.push_back(std::move(orbit));
        }
    }
    return out;
}

bool is_special(const AnnulusGraphView& v, const ViewGeometry& g, const ReducedGraph& rg) {
    (void)g;
    for (int u = 0; u < v.n_self; ++u)
        if (rg.boundary_edge_count(u) < 2) return false;
    // Consequence check: a special graph has exactly two reduced boundary
    // edges per vertex, one to each circle. A breach is a model bug.
    for (int u = 0; u < v.n_self; ++u) {
        int per_ring[2] = {0, 0};
        for (const auto& e : rg.edges)
            if (e.boundary && e.v0 == u) per_ring[-1 - e.v1]++;
        if (per_ring[0] != 1 || per_ring[1] != 1)
            throw std::logic_error("special graph without two opposite boundary edges");
    }
    return true;
}

std::string view_to_dot(const AnnulusGraphView& v) {
    std::ostringstream os;
    os << "graph g" << v.side << " {\n";
    os << "  layout=neato;\n";
    for (int u = 0; u < v.n_self; ++u)
        os << "  u" << u + 1 << " [shape=circle,label=\"" << (v.side == 1 ? "u" : "v")
           << u + 1 << (v.sign[u] > 0 ? "+" : "-") << "\"];\n";
    for (int r = 0; r < 2; ++r) {
        int k = 0;
        for (int a : v.boundary_order[r])
            os << "  b" << r << "_" << k++ << " [shape=box,label=\"r" << r << ":a" << a
               << "\"];\n";
    }
    for (int a = 0; a < static_cast<int>(v.arcs.size()); ++a) {
        const auto& e = v.arcs[a];
        os << "  u" << e.v0.vertex + 1;
        if (e.boundary) {
            int pos = 0;
            const auto& order = v.boundary_order[e.ring];
            for (int i = 0; i < static_cast<int>(order.size()); ++i)
                if (order[i] == a) pos = i;
            os << " -- b" << e.ring << "_" << pos;
        } else {
            os << " -- u" << e.v1.vertex + 1;
        }
        os << " [label=\"a" << a << ":" << v.label_of_slot(e.v0.slot);
        if (!e.boundary) os << "," << v.label_of_slot(e.v1.slot);
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace anng
