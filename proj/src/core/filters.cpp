#include "filters.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anng {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int slot_of_dart(const AnnulusGraphView& v, const ViewGeometry& g, Dart d) {
    int node = g.map.node_of[d];
    int p = g.map.pos_of[d];
    int spv = v.slots_per_vertex();
    return v.sign[node] > 0 ? p : spv - 1 - p;
}

std::string arcs_str(const std::vector<int>& arcs) {
    std::string s;
    for (int a : arcs) s += (s.empty() ? "" : ",") + std::to_string(a);
    return s;
}

FilterVerdict pass_verdict(std::string name, std::string citation) {
    return {std::move(name), std::move(citation), true, "", {}};
}

FilterVerdict fail_verdict(std::string name, std::string citation, std::string witness,
                           std::vector<int> arcs) {
    return {std::move(name), std::move(citation), false, std::move(witness),
            std::move(arcs)};
}

}  // namespace

std::vector<ScharlemannCycle> find_scharlemann_cycles(const AnnulusGraphView& v,
                                                      const ViewGeometry& g) {
    std::vector<ScharlemannCycle> out;
    const int spv = v.slots_per_vertex();
    for (int r = 0; r < g.regions.region_count; ++r) {
        if (!g.regions.is_disk(g.faces, r)) continue;
        int walk_id = -1;
        for (int w = 0; w < g.faces.walk_count(); ++w)
            if (g.regions.region_of_walk[w] == r) walk_id = w;
        const auto& walk = g.faces.walks[walk_id];
        if (walk.empty()) continue;
        bool ok = true;
        std::set<int> arcs_seen;
        for (Dart d : walk) {
            int a = AnnularMap::arc_of(d);
            if (v.arcs[a].boundary || !v.is_positive(a) || !arcs_seen.insert(a).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // Corners must all sit in the same annulus between consecutive dual
        // vertex circles.
        int lo = -1;
        for (size_t x = 0; x < walk.size() && ok; ++x) {
            Dart arrive = AnnularMap::theta(walk[x]);
            Dart leave = walk[(x + 1) % walk.size()];
            int s1 = slot_of_dart(v, g, arrive), s2 = slot_of_dart(v, g, leave);
            int pf = (s1 + 1) % spv == s2 ? s1 : s2;
            int c = pf % v.n_other + 1;
            if (lo == -1) lo = c;
            if (lo != c) ok = false;
        }
        if (!ok || lo == -1) continue;
        int hi = lo % v.n_other + 1;
        for (Dart d : walk) {
            int a = AnnularMap::arc_of(d);
            int l0 = v.label_of_slot(v.arcs[a].v0.slot);
            int l1 = v.label_of_slot(v.arcs[a].v1.slot);
            if (std::minmax(l0, l1) != std::minmax(lo, hi)) ok = false;
        }
        if (!ok) continue;
        ScharlemannCycle sc;
        for (Dart d : walk) sc.arcs.push_back(AnnularMap::arc_of(d));
        sc.lo = lo;
        sc.region = r;
        out.push_back(std::move(sc));
    }
    return out;
}

namespace {

// Member arcs of a boundary family ordered along the slot run at its vertex.
std::vector<std::pair<int, int>> family_run(const AnnulusGraphView& v,
                                            const ReducedEdge& fam) {
    std::vector<std::pair<int, int>> run;  // (slot, arc)
    for (int a : fam.arcs) run.push_back({v.arcs[a].v0.slot, a});
    const int spv = v.slots_per_vertex();
    std::set<int> slots;
    for (auto& [s, a] : run) slots.insert(s);
    int start = -1;
    for (auto& [s, a] : run)
        if (!slots.count(mod(s - 1, spv))) start = s;
    if (start == -1) start = run.front().first;  // full circle
    std::sort(run.begin(), run.end(), [&](auto& x, auto& y) {
        return mod(x.first - start, spv) < mod(y.first - start, spv);
    });
    return run;
}

}  // namespace

std::vector<Band> find_bands(const AnnulusGraphView& v, const ViewGeometry& g,
                             const ReducedGraph& rg) {
    (void)g;
    std::vector<Band> out;
    for (const auto& fam : rg.edges) {
        if (!fam.boundary || fam.arcs.size() < 2) continue;
        auto run = family_run(v, fam);
        size_t pairs = fam.cyclic ? run.size() : run.size() - 1;
        for (size_t x = 0; x < pairs; ++x) {
            auto [s, a] = run[x];
            auto [s2, b] = run[(x + 1) % run.size()];
            Band bd;
            bd.vertex = fam.v0;
            bd.initial_arc = a;
            bd.terminal_arc = b;
            bd.label = v.label_of_slot(s);
            out.push_back(bd);
        }
    }
    return out;
}

FilterContext make_filter_context(const IncidencePair& pair, int band_cycle_cap) {
    FilterContext c;
    c.pair = pair;
    c.band_cycle_cap = band_cycle_cap;
    c.g = build_pair_geometry(c.pair);
    if (!c.g.usable) return c;
    c.side[0].v = &c.g.view1;
    c.side[0].geo = &c.g.geo1;
    c.side[0].red = &c.g.red1;
    c.side[1].v = &c.g.view2;
    c.side[1].geo = &c.g.geo2;
    c.side[1].red = &c.g.red2;
    for (auto& s : c.side) {
        s.special = is_special(*s.v, *s.geo, *s.red);
        s.scycles = find_scharlemann_cycles(*s.v, *s.geo);
        s.bands = find_bands(*s.v, *s.geo, *s.red);
    }
    c.usable = true;
    return c;
}

FilterVerdict parity_filter(const FilterContext& c) {
    const char* name = "L2.1.1-parity";
    const char* cite = "Lemma 2.1(1)";
    for (int a = 0; a < static_cast<int>(c.pair.arcs.size()); ++a) {
        const auto& e = c.pair.arcs[a];
        if (e.boundary) continue;
        bool pos1 = c.pair.sign1[e.p0.i] == c.pair.sign1[e.p1.i];
        bool pos2 = c.pair.sign2[e.p0.j] == c.pair.sign2[e.p1.j];
        if (pos1 == pos2)
            return fail_verdict(name, cite,
                                "arc " + std::to_string(a) + " is " +
                                    (pos1 ? "positive" : "negative") + " in both graphs",
                                {a});
    }
    return pass_verdict(name, cite);
}

FilterVerdict double_parallel_filter(const FilterContext& c) {
    const char* name = "L2.1.2-double-parallel";
    const char* cite = "Lemma 2.1(2)";
    const auto& f1 = c.g.red1.family_of_arc;
    const auto& f2 = c.g.red2.family_of_arc;
    const int A = static_cast<int>(c.pair.arcs.size());
    for (int a = 0; a < A; ++a)
        for (int b = a + 1; b < A; ++b)
            if (f1[a] == f1[b] && f2[a] == f2[b])
                return fail_verdict(name, cite,
                                    "arcs " + std::to_string(a) + "," + std::to_string(b) +
                                        " are parallel in both graphs",
                                    {a, b});
    return pass_verdict(name, cite);
}

FilterVerdict negative_family_filter(const FilterContext& c) {
    const char* name = "L2.1.3-negative-family";
    const char* cite = "Lemma 2.1(3)";
    for (int s = 1; s <= 2; ++s) {
        const auto& me = c.of(s);
        const auto& ot = c.other(s);
        int n_other = me.v->n_other;
        for (int fam = 0; fam < static_cast<int>(me.red->edges.size()); ++fam) {
            const auto& e = me.red->edges[fam];
            if (e.boundary || e.positive ||
                static_cast<int>(e.arcs.size()) != n_other)
                continue;
            EdgePermutation phi = family_permutation(*me.v, *me.geo, *me.red, fam);
            if (!phi.total) continue;
            size_t len = phi.orbits.front().size();
            for (const auto& orbit : phi.orbits)
                if (orbit.size() != len)
                    return fail_verdict(name, cite,
                                        "g" + std::to_string(s) + " family " +
                                            arcs_str(e.arcs) + " has orbits of unequal length",
                                        e.arcs);
            for (const auto& orbit : phi.orbits) {
                std::set<int> labels(orbit.begin(), orbit.end());
                std::vector<int> cycle;
                for (int a : e.arcs) {
                    int l0 = me.v->label_of_slot(me.v->arcs[a].v0.slot);
                    if (labels.count(l0)) cycle.push_back(a);
                }
                if (!subgraph_essential(ot.geo->map, ot.geo->faces, ot.geo->regions, cycle))
                    return fail_verdict(
                        name, cite,
                        "orbit cycle " + arcs_str(cycle) + " of g" + std::to_string(s) +
                            " family is inessential in the other graph",
                        cycle);
            }
        }
    }
    return pass_verdict(name, cite);
}

FilterVerdict scharlemann_filter(const FilterContext& c) {
    const char* name = "L2.1.4-scharlemann";
    const char* cite = "Lemma 2.1(4),(5); Lemma 2.2(1)";
    for (int s = 1; s <= 2; ++s) {
        const auto& me = c.of(s);
        const auto& ot = c.other(s);
        if (me.scycles.empty()) continue;
        int n_other = me.v->n_other;
        const auto& other_sign = s == 1 ? c.pair.sign2 : c.pair.sign1;
        if (n_other % 2)
            return fail_verdict(name, cite,
                                "Scharlemann cycle with odd dual vertex count",
                                me.scycles[0].arcs);
        for (int i = 0; i < n_other; ++i)
            if ((other_sign[i] == other_sign[0]) != (i % 2 == 0))
                return fail_verdict(name, cite,
                                    "dual annulus cannot separate: signs do not alternate",
                                    me.scycles[0].arcs);
        for (const auto& sc : me.scycles) {
            if (sc.lo != me.scycles[0].lo)
                return fail_verdict(name, cite, "Scharlemann cycles on distinct label pairs",
                                    sc.arcs);
            if (!subgraph_essential(ot.geo->map, ot.geo->faces, ot.geo->regions, sc.arcs))
                return fail_verdict(name, cite,
                                    "Scharlemann cycle subgraph is inessential in the "
                                    "other graph",
                                    sc.arcs);
        }
        // Extended Scharlemann cycle around a two-edge cycle.
        for (const auto& sc : me.scycles) {
            if (sc.arcs.size() != 2) continue;
            int fam = me.red->family_of_arc[sc.arcs[0]];
            const auto& band = me.red->edges[fam].arcs;
            const bool cyc = me.red->edges[fam].cyclic;
            auto pos = [&](int a) {
                return static_cast<int>(std::find(band.begin(), band.end(), a) -
                                        band.begin());
            };
            int p0 = pos(sc.arcs[0]), p1 = pos(sc.arcs[1]);
            if (std::abs(p0 - p1) != 1 && !cyc) continue;
            int lopos = std::min(p0, p1), hipos = std::max(p0, p1);
            int sz = static_cast<int>(band.size());
            int before = lopos - 1, after = hipos + 1;
            if (cyc) {
                before = mod(before, sz);
                after = mod(after, sz);
            }
            if (before >= 0 && after < sz && before != after &&
                band[before] != sc.arcs[0] && band[before] != sc.arcs[1] &&
                band[after] != sc.arcs[0] && band[after] != sc.arcs[1])
                return fail_verdict(name, cite, "extended Scharlemann cycle",
                                    {band[before], sc.arcs[0], sc.arcs[1], band[after]});
        }
    }
    return pass_verdict(name, cite);
}

FilterVerdict family_size_filter(const FilterContext& c) {
    const char* name = "L2.2-family-size";
    const char* cite = "Lemma 2.2(2),(3); Lemma 2.6(2),(3)";
    for (int s = 1; s <= 2; ++s) {
        const auto& me = c.of(s);
        const auto& ot = c.other(s);
        const int n = me.v->n_other;
        bool has_positive = false;
        bool has_full_negative = false;
        for (const auto& e : me.red->edges) {
            if (!e.boundary && e.positive && !e.arcs.empty()) has_positive = true;
            if (!e.boundary && !e.positive && static_cast<int>(e.arcs.size()) == n)
                has_full_negative = true;
        }
        for (int fam = 0; fam < static_cast<int>(me.red->edges.size()); ++fam) {
            const auto& e = me.red->edges[fam];
            const int sz = static_cast<int>(e.arcs.size());
            if (!e.boundary) {
                if (sz > n)
                    return fail_verdict(name, cite,
                                        "interior family larger than the dual vertex count",
                                        e.arcs);
                if (e.positive && 2 * sz > n + 2)
                    return fail_verdict(name, cite, "positive family larger than n/2+1",
                                        e.arcs);
                if (e.positive && 2 * sz == n + 2) {
                    bool contains = false;
                    for (const auto& sc : me.scycles) {
                        bool inside = true;
                        for (int a : sc.arcs)
                            if (me.red->family_of_arc[a] != fam) inside = false;
                        contains |= inside;
                    }
                    if (!contains)
                        return fail_verdict(name, cite,
                                            "extremal positive family without a "
                                            "Scharlemann cycle",
                                            e.arcs);
                }
            } else {
                if (sz > 2 * n)
                    return fail_verdict(name, cite, "boundary family larger than 2n",
                                        e.arcs);
                if (sz == 2 * n && !ot.special)
                    return fail_verdict(name, cite,
                                        "full boundary family but the other graph is "
                                        "not special",
                                        e.arcs);
                if (has_full_negative && has_positive && sz > n)
                    return fail_verdict(name, cite,
                                        "boundary family larger than n next to a full "
                                        "negative family",
                                        e.arcs);
            }
        }
        if (has_full_negative && has_positive) {
            for (int u = 0; u < ot.v->n_self; ++u)
                if (ot.red->boundary_edge_count(u) > 1) {
                    std::vector<int> wit;
                    for (const auto& e : ot.red->edges)
                        if (e.boundary && e.v0 == u) wit.push_back(e.arcs[0]);
                    return fail_verdict(name, cite,
                                        "dual vertex with two boundary families next to "
                                        "a full negative family",
                                        wit);
                }
        }
    }
    return pass_verdict(name, cite);
}

FilterVerdict negative_valency_filter(const FilterContext& c) {
    const char* name = "L2.3-negative-valency";
    const char* cite = "Lemma 2.3";
    for (int s = 1; s <= 2; ++s) {
        const auto& me = c.of(s);
        const auto& ot = c.other(s);
        const int n = me.v->n_other;
        std::vector<int> neg(me.v->n_self, 0);
        std::vector<std::vector<int>> wit(me.v->n_self);
        for (int a = 0; a < static_cast<int>(me.v->arcs.size()); ++a) {
            const auto& e = me.v->arcs[a];
            if (e.boundary || me.v->is_positive(a)) continue;
            neg[e.v0.vertex]++;
            neg[e.v1.vertex]++;
            wit[e.v0.vertex].push_back(a);
            wit[e.v1.vertex].push_back(a);
        }
        for (int u = 0; u < me.v->n_self; ++u) {
            if (neg[u] > 2 * n)
                return fail_verdict(name, cite,
                                    "vertex with more than 2n negative edge endpoints",
                                    wit[u]);
            if (neg[u] > n && ot.scycles.empty())
                return fail_verdict(name, cite,
                                    "vertex with more than n negative endpoints but no "
                                    "Scharlemann cycle in the other graph",
                                    wit[u]);
        }
    }
    return pass_verdict(name, cite);
}

FilterVerdict equidistance_filter(const FilterContext& c) {
    const char* name = "L2.4-equidistance";
    const char* cite = "Lemma 2.4";
    for (auto [a, b] : equidistance_candidates(c.pair))
        if (equidistant_in(c.pair, 1, a, b) != equidistant_in(c.pair, 2, a, b))
            return fail_verdict(name, cite,
                                "arcs " + std::to_string(a) + "," + std::to_string(b) +
                                    " are equidistant in exactly one graph",
                                {a, b});
    return pass_verdict(name, cite);
}

FilterVerdict jumping_adjacency_filter(const FilterContext& c) {
    const char* name = "L2.5-jumping-adjacency";
    const char* cite = "Lemma 2.5";
    const auto& p = c.pair.par;
    if (p.delta < 4) return pass_verdict(name, cite);
    // occurrence correspondence per (i,j)
    std::vector<std::vector<std::pair<int, int>>> blocks(p.n1 * p.n2);
    auto add = [&](const PairPoint& pt, int arc) {
        blocks[pt.i * p.n2 + pt.j].push_back({point_occ1(p, pt.s), arc});
    };
    for (int a = 0; a < static_cast<int>(c.pair.arcs.size()); ++a) {
        add(c.pair.arcs[a].p0, a);
        if (!c.pair.arcs[a].boundary) add(c.pair.arcs[a].p1, a);
    }
    auto so = jump_offsets(c.pair);
    if (!so) return fail_verdict(name, cite, "jump rule unreadable", {});
    for (int i = 0; i < p.n1; ++i)
        for (int j = 0; j < p.n2; ++j) {
            int cc = (*so)[i * p.n2 + j];
            int qi = 1;
            for (int x = 1; x <= p.delta; ++x)
                if (mod(p.q * x, p.delta) == 1) qi = x;
            for (int k1 = 0; k1 < p.delta; ++k1)
                for (int k2 = k1 + 1; k2 < p.delta; ++k2) {
                    bool adj_u = mod(k1 - k2, p.delta) == 1 ||
                                 mod(k2 - k1, p.delta) == 1;
                    int m1 = mod(qi * (k1 - cc), p.delta);
                    int m2 = mod(qi * (k2 - cc), p.delta);
                    bool adj_v = mod(m1 - m2, p.delta) == 1 ||
                                 mod(m2 - m1, p.delta) == 1;
                    bool want = p.q == 1 ? adj_u == adj_v : adj_u == !adj_v;
                    if (!want) {
                        std::vector<int> wit;
                        for (auto [k, arc] : blocks[i * p.n2 + j])
                            if (k == k1 || k == k2) wit.push_back(arc);
                        return fail_verdict(name, cite,
                                            "adjacency transfer violated at (u" +
                                                std::to_string(i + 1) + ",v" +
                                                std::to_string(j + 1) + ")",
                                            wit);
                    }
                }
        }
    return pass_verdict(name, cite);
}

FilterVerdict low_valency_filter(const FilterContext& c) {
    const char* name = "L2.7-low-valency";
    const char* cite = "Lemma 2.7";
    for (int s = 1; s <= 2; ++s) {
        const auto& me = c.of(s);
        const auto& ot = c.other(s);
        if (ot.special) continue;
        bool all_boundary = true;
        for (int u = 0; u < me.v->n_self; ++u)
            if (me.red->boundary_edge_count(u) == 0) all_boundary = false;
        if (!all_boundary) continue;
        for (int u = 0; u < me.v->n_self; ++u) {
            std::vector<int> per_ring[2];
            for (const auto& e : me.red->edges)
                if (e.boundary && e.v0 == u) per_ring[-1 - e.v1].push_back(e.arcs[0]);
            for (int r = 0; r < 2; ++r)
                if (per_ring[r].size() >= 2)
                    return fail_verdict(name, cite,
                                        "two boundary families to one circle while the "
                                        "other graph is not special",
                                        per_ring[r]);
        }
    }
    return pass_verdict(name, cite);
}

FilterVerdict band_type_filter(const FilterContext& c) {
    const char* name = "L4.2-band-type";
    const char* cite = "Lemma 4.2";
    if (!c.side[0].special || !c.side[1].special) return pass_verdict(name, cite);
    for (int s = 1; s <= 2; ++s) {
        const auto& me = c.of(s);
        const auto& ot = c.other(s);
        bool some_label_uniform = false;
        std::vector<int> wit;
        for (int lab = 1; lab <= me.v->n_other && !some_label_uniform; ++lab) {
            std::set<int> types;
            std::vector<int> initials;
            for (const auto& bd : me.bands)
                if (bd.label == lab) {
                    types.insert(ot.red->family_of_arc[bd.initial_arc]);
                    initials.push_back(bd.initial_arc);
                }
            if (types.size() <= 1)
                some_label_uniform = true;
            else if (wit.empty())
                wit = initials;
        }
        if (!some_label_uniform)
            return fail_verdict(name, cite,
                                "every label of g" + std::to_string(s) +
                                    " carries bands of two types",
                                wit);
    }
    return pass_verdict(name, cite);
}

namespace {

struct BandStrip {
    int side;    // 1 or 2
    int family;  // family id in that side's reduced graph
    int lo, hi;  // positions in band order, lo < hi
};

struct BandSearch {
    const FilterContext* c;
    // per side: family -> run (ordered arcs), vertex, slots
    struct Fam {
        int vertex;
        std::vector<int> arcs;       // run order
        std::vector<int> slots;      // run order
    };
    std::vector<Fam> fams[2];
    std::vector<std::vector<std::pair<int, int>>> arc_pos[2];  // arc -> (family,pos)

    std::vector<BandStrip> path;
    std::vector<int> shared;  // arcs between consecutive strips
    std::vector<int> crossings;  // circle index: side1 vertices, then side2

    bool found = false;
    std::vector<int> witness;

    void add_crossings(const BandStrip& b, int sign) {
        const auto& fam = fams[b.side - 1][b.family];
        const auto& v = *c->of(b.side).v;
        for (int p = b.lo + 1; p < b.hi; ++p) {
            int lab = v.label_of_slot(fam.slots[p]);  // 1-based dual vertex
            int idx = b.side == 1 ? c->pair.par.n1 + (lab - 1) : (lab - 1);
            crossings[idx] += sign;
        }
    }

    bool overlaps(const BandStrip& b) const {
        for (const auto& o : path)
            if (o.side == b.side && o.family == b.family && o.lo < b.hi && b.lo < o.hi)
                return true;
        return false;
    }

    void dfs(int first_arc, int cur_arc, int next_side, int cap) {
        if (found) return;
        if (static_cast<int>(path.size()) >= cap) return;
        for (const auto& [famidx, pos] : arc_pos[next_side - 1][cur_arc]) {
            const auto& fam = fams[next_side - 1][famidx];
            for (int other = 0; other < static_cast<int>(fam.arcs.size()); ++other) {
                if (other == pos) continue;
                BandStrip b{next_side, famidx, std::min(pos, other), std::max(pos, other)};
                if (overlaps(b)) continue;
                int other_arc = fam.arcs[other];
                bool closes = other_arc == first_arc && path.size() >= 1;
                if (!closes) {
                    bool reused = other_arc == cur_arc;
                    for (int a : shared) reused |= a == other_arc;
                    if (reused) continue;
                }
                path.push_back(b);
                shared.push_back(other_arc);
                add_crossings(b, +1);
                if (closes) {
                    bool odd = false;
                    for (int x : crossings) odd |= x % 2 != 0;
                    if (odd && path.size() % 2 == 0) {
                        found = true;
                        witness = shared;
                    }
                }
                if (!found) dfs(first_arc, other_arc, 3 - next_side, cap);
                add_crossings(b, -1);
                shared.pop_back();
                path.pop_back();
                if (found) return;
            }
        }
    }
};

}  // namespace

FilterVerdict band_annulus_filter(const FilterContext& c) {
    const char* name = "L6.3-band-annulus";
    const char* cite = "Lemma 6.3";
    BandSearch bs;
    bs.c = &c;
    bs.crossings.assign(c.pair.par.n1 + c.pair.par.n2, 0);
    for (int s = 1; s <= 2; ++s) {
        bs.arc_pos[s - 1].assign(c.pair.arcs.size(), {});
        for (const auto& e : c.of(s).red->edges) {
            if (!e.boundary || e.arcs.size() < 2 || e.cyclic) continue;
            auto run = family_run(*c.of(s).v, e);
            BandSearch::Fam f;
            f.vertex = e.v0;
            for (auto& [slot, arc] : run) {
                f.slots.push_back(slot);
                f.arcs.push_back(arc);
            }
            int idx = static_cast<int>(bs.fams[s - 1].size());
            for (int p = 0; p < static_cast<int>(f.arcs.size()); ++p)
                bs.arc_pos[s - 1][f.arcs[p]].push_back({idx, p});
            bs.fams[s - 1].push_back(std::move(f));
        }
    }
    for (int a = 0; a < static_cast<int>(c.pair.arcs.size()); ++a) {
        if (!c.pair.arcs[a].boundary) continue;
        bs.dfs(a, a, 1, c.band_cycle_cap);
        if (!bs.found) bs.dfs(a, a, 2, c.band_cycle_cap);
        if (bs.found)
            return fail_verdict(name, cite,
                                "closed band chain traces an essential curve on the "
                                "filling torus",
                                bs.witness);
    }
    return pass_verdict(name, cite);
}

const std::vector<std::string>& all_filter_names() {
    static const std::vector<std::string> names = {
        "L2.1.1-parity",       "L2.1.2-double-parallel", "L2.1.3-negative-family",
        "L2.1.4-scharlemann",  "L2.2-family-size",       "L2.3-negative-valency",
        "L2.4-equidistance",   "L2.5-jumping-adjacency", "L2.7-low-valency",
        "L4.2-band-type",      "L6.3-band-annulus"};
    return names;
}

std::vector<FilterVerdict> run_filters(const FilterContext& c,
                                       const std::vector<std::string>& names) {
    using Fn = FilterVerdict (*)(const FilterContext&);
    static const std::map<std::string, Fn> table = {
        {"L2.1.1-parity", parity_filter},
        {"L2.1.2-double-parallel", double_parallel_filter},
        {"L2.1.3-negative-family", negative_family_filter},
        {"L2.1.4-scharlemann", scharlemann_filter},
        {"L2.2-family-size", family_size_filter},
        {"L2.3-negative-valency", negative_valency_filter},
        {"L2.4-equidistance", equidistance_filter},
        {"L2.5-jumping-adjacency", jumping_adjacency_filter},
        {"L2.7-low-valency", low_valency_filter},
        {"L4.2-band-type", band_type_filter},
        {"L6.3-band-annulus", band_annulus_filter}};
    std::vector<FilterVerdict> out;
    for (const auto& name : all_filter_names()) {
        if (!names.empty() &&
            std::find(names.begin(), names.end(), name) == names.end())
            continue;
        out.push_back(table.at(name)(c));
    }
    return out;
}

bool replay_witness(const IncidencePair& pair, const FilterVerdict& verdict) {
    if (verdict.pass) return true;
    for (int a : verdict.witness_arcs)
        if (a < 0 || a >= static_cast<int>(pair.arcs.size())) return false;
    FilterContext c = make_filter_context(pair);
    if (!c.usable) return false;
    auto vs = run_filters(c, {verdict.name});
    return vs.size() == 1 && !vs[0].pass;
}

}  // namespace anng
