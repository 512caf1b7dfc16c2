#include "classify.hpp"
#include <cstdio>
#include <cstdlib>

#include <algorithm>
#include <numeric>
#include <cassert>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace anng {

namespace {

bool region_is_bad(const AnnularMap& m, const FaceData& f, const RegionTable& t, int r) {
    if (!t.is_disk(f, r)) return false;
    std::vector<Dart> sides;
    for (int w = 0; w < f.walk_count(); ++w)
        if (t.region_of_walk[w] == r)
            for (Dart d : f.walks[w]) sides.push_back(d);
    if (sides.size() == 1) return true;  // monogon
    if (sides.size() == 2 && AnnularMap::arc_of(sides[0]) != AnnularMap::arc_of(sides[1]))
        return true;  // bigon between distinct edges
    return false;
}

bool table_reduced(const AnnularMap& m, const FaceData& f, const RegionTable& t) {
    for (int r = 0; r < t.region_count; ++r)
        if (region_is_bad(m, f, t, r)) return false;
    return true;
}

}  // namespace

std::optional<ReducedAnnularGraph> make_reduced_graph(AnnularMap map,
                                                      const RegionTable* table) {
    ReducedAnnularGraph rg;
    rg.map = std::move(map);
    rg.faces = trace_walks(rg.map);
    if (!pieces_planar(rg.map, rg.faces)) return std::nullopt;
    if (table) {
        if (!region_table_valid(rg.faces, *table)) return std::nullopt;
        rg.regions = *table;
    } else if (rg.faces.piece_count == 1) {
        rg.regions = single_piece_regions(rg.faces);
    } else {
        return std::nullopt;
    }
    if (!table_reduced(rg.map, rg.faces, rg.regions)) return std::nullopt;
    return rg;
}

Classification classify(const ReducedAnnularGraph& rg) {
    Classification out;
    const auto& m = rg.map;
    const int n = m.fat_count();
    std::vector<int> boundary_edges(n, 0);
    for (Dart d = 0; d < m.dart_count(); d += 2) {
        int a = m.node_of[d], b = m.node_of[d + 1];
        bool ra = m.nodes[a].ring, rb = m.nodes[b].ring;
        if (ra && rb) throw std::invalid_argument("edge joining the two boundary circles");
        if (rb) boundary_edges[a]++;
        if (ra) boundary_edges[b]++;
    }
    for (int v = 0; v < n; ++v) {
        int val = static_cast<int>(m.nodes[v].rot.size());
        if (boundary_edges[v] == 0 && val <= 5) {
            out.interior_low_valency = true;
            if (out.witness_vertex < 0) out.witness_vertex = v;
        }
        if (boundary_edges[v] == 1 && val <= 4) {
            out.boundary_low_valency = true;
            if (out.witness_vertex < 0) out.witness_vertex = v;
        }
    }
    // Special: every vertex has at least two (automatically nonparallel)
    // boundary edges.
    out.special = true;
    for (int v = 0; v < n; ++v)
        if (boundary_edges[v] < 2) out.special = false;
    // Triangular: every vertex has at most one boundary edge, interior
    // valency 6, boundary valency 5, and every complementary region is a
    // disk with three edge sides (ring arcs not counted).
    bool tri = true;
    for (int v = 0; v < n; ++v) {
        int val = static_cast<int>(m.nodes[v].rot.size());
        if (boundary_edges[v] > 1) tri = false;
        if (boundary_edges[v] == 0 && val != 6) tri = false;
        if (boundary_edges[v] == 1 && val != 5) tri = false;
    }
    if (n == 0) tri = false;
    if (tri) {
        std::vector<int> sides(rg.regions.region_count, 0);
        for (Dart d = 0; d < m.dart_count(); ++d)
            sides[rg.regions.region_of_walk[rg.faces.walk_of_dart[d]]]++;
        for (int r = 0; r < rg.regions.region_count; ++r)
            if (!rg.regions.is_disk(rg.faces, r) || sides[r] != 3) tri = false;
    }
    out.triangular = tri;
    return out;
}

Classification classify_view(const AnnulusGraphView& v) {
    BuiltView b = build_view(v);
    if (!b.usable) throw std::invalid_argument("view does not build");
    ReducedGraph red = reduce(v, b.geo);
    ReducedMapView rm = reduced_map(v, b.geo, red);
    ReducedAnnularGraph rg;
    rg.map = rm.map;
    rg.faces = rm.faces;
    rg.regions = rm.regions;
    if (!table_reduced(rg.map, rg.faces, rg.regions))
        throw std::invalid_argument("reduced structure is not reduced");
    return classify(rg);
}

namespace {

// Rollback union-find over walk terminals for incremental face tracking.
struct RollbackDsu {
    struct Node {
        int parent = 0;
        int sides = 0;  // arc sides accumulated in the component
        int ring_corners = 0;
        int arc0 = -1, arc1 = -1;  // two distinct arc sides, if present
    };
    std::vector<Node> nodes;
    struct Op {
        int child, root;
        Node root_before;
    };
    std::vector<Op> log;

    int find(int x) const {
        while (nodes[x].parent != x) x = nodes[x].parent;
        return x;
    }
    static void push_arc(Node& nd, int x) {
        if (x == -1) return;
        if (nd.arc0 == -1)
            nd.arc0 = x;
        else if (nd.arc1 == -1 && nd.arc0 != x)
            nd.arc1 = x;
    }
    struct Closed {
        bool closed = false;
        int sides = 0, ring_corners = 0;
        bool two_distinct_arcs = false;
    };
    Closed unite_side(int a, int b, int arc) {
        int ra = find(a), rb = find(b);
        Closed c;
        if (ra == rb) {
            log.push_back({ra, ra, nodes[ra]});
            nodes[ra].sides += 1;
            push_arc(nodes[ra], arc);
            c.closed = true;
            c.sides = nodes[ra].sides;
            c.ring_corners = nodes[ra].ring_corners;
            c.two_distinct_arcs = nodes[ra].arc1 != -1;
            return c;
        }
        log.push_back({ra, rb, nodes[rb]});
        nodes[rb].sides += nodes[ra].sides + 1;
        nodes[rb].ring_corners += nodes[ra].ring_corners;
        push_arc(nodes[rb], nodes[ra].arc0);
        push_arc(nodes[rb], nodes[ra].arc1);
        push_arc(nodes[rb], arc);
        nodes[ra].parent = rb;
        return c;
    }
    size_t mark() const { return log.size(); }
    void rollback(size_t m) {
        while (log.size() > m) {
            Op op = log.back();
            log.pop_back();
            nodes[op.root] = op.root_before;
            if (op.child != op.root) nodes[op.child].parent = op.child;
        }
    }
};

struct Piece {
    AnnularMap map;   // rings always nodes n, n+1 (possibly unused)
    int vertices = 0;
    int edges = 0;
    bool uses_r0 = false, uses_r1 = false;
};

struct CorpusGen {
    int max_vertices, max_edges;
    bool unflagged_only = false;  // every vertex avoids the low-valency clauses
    std::vector<Piece>* pieces = nullptr;
    long dfs_nodes = 0;
    std::vector<int> bd_quota;       // boundary edges per vertex (unflagged mode)
    std::vector<int> ring_matched;   // current boundary matches per vertex

    std::vector<int> degrees;  // per fat vertex
    int k0 = 0, k1 = 0;
    int n = 0;

    // positions: per node, consecutive; pos -> node
    std::vector<int> pos_node, pos_index, node_first;
    std::vector<int> match;  // position -> position or -1
    RollbackDsu dsu;
    std::vector<int> in_term, out_term;  // per position
    int empty_rings = 0;
    int needs = 0;
    int closures = 0;
    int min_faces = 0;  // 2 - V + E for a connected completion

    void run() {
        for (n = 1; n <= max_vertices; ++n) {
            std::vector<int> d(n, 0);
            degree_loop(0, d);
        }
    }

    // Incremental node-level union-find with rollback for connectivity.
    struct NodeDsu {
        std::vector<int> parent, size, open;
        struct Op { int child, root, root_size, root_open; };
        std::vector<Op> log;
        void init(const std::vector<int>& opens) {
            int m = static_cast<int>(opens.size());
            parent.resize(m);
            size.assign(m, 1);
            open = opens;
            std::iota(parent.begin(), parent.end(), 0);
            log.clear();
        }
        int find(int x) const {
            while (parent[x] != x) x = parent[x];
            return x;
        }
        void dec_open(int node) {
            int r = find(node);
            log.push_back({-1, r, size[r], open[r]});
            open[r]--;
        }
        void unite(int a, int b) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return;
            if (size[ra] > size[rb]) std::swap(ra, rb);
            log.push_back({ra, rb, size[rb], open[rb]});
            size[rb] += size[ra];
            open[rb] += open[ra];
            parent[ra] = rb;
        }
        int open_at(int node) const { return open[find(node)]; }
        int size_at(int node) const { return size[find(node)]; }
        size_t mark() const { return log.size(); }
        void rollback(size_t m) {
            while (log.size() > m) {
                Op op = log.back();
                log.pop_back();
                size[op.root] = op.root_size;
                open[op.root] = op.root_open;
                if (op.child >= 0) parent[op.child] = op.child;
            }
        }
    };
    NodeDsu ndsu;
    int support_nodes = 0;
    int open_vertices = 0;  // fat vertices with an unmatched position

    void degree_loop(int v, std::vector<int>& d) {
        if (v == n) {
            int sum = 0;
            for (int x : d) sum += x;
            if (!unflagged_only) {
                for (k0 = 0; sum + k0 <= 2 * max_edges; ++k0)
                    for (k1 = 0; (sum + k0 + k1) <= 2 * max_edges; ++k1) {
                        if ((sum + k0 + k1) % 2) continue;
                        degrees = d;
                        assemble();
                    }
            } else {
                std::vector<int> bq(n, 0);
                degrees = d;
                quota_loop(0, sum, bq);
            }
            return;
        }
        for (int x = 1; x <= 2 * max_edges; ++x) {
            d[v] = x;
            if (v > 0 && d[v] > d[v - 1]) break;
            degree_loop(v + 1, d);
        }
        d[v] = 0;
    }

    // Unflagged stratum: per-vertex boundary-edge quotas consistent with
    // avoiding clauses (1) and (2) of the classification.
    void quota_loop(int v, int sum, std::vector<int>& bq) {
        if (v == n) {
            int total_bd = 0;
            for (int x : bq) total_bd += x;
            if (sum + total_bd > 2 * max_edges) return;
            for (k0 = 0; k0 <= total_bd; ++k0) {
                k1 = total_bd - k0;
                if ((sum + k0 + k1) % 2) continue;
                bd_quota = bq;
                assemble();
            }
            return;
        }
        for (int b = 0; b <= degrees[v]; ++b) {
            if (b == 0 && degrees[v] <= 5) continue;      // interior low valency
            if (b == 1 && degrees[v] <= 4) continue;      // boundary low valency
            bq[v] = b;
            quota_loop(v + 1, sum, bq);
        }
        bq[v] = 0;
    }

    void assemble() {
        int total = 0;
        for (int x : degrees) total += x;
        total += k0 + k1;
        if (total == 0) return;
        pos_node.clear();
        pos_index.clear();
        node_first.assign(n + 2, -1);
        for (int v = 0; v < n; ++v) {
            node_first[v] = static_cast<int>(pos_node.size());
            for (int i = 0; i < degrees[v]; ++i) {
                pos_node.push_back(v);
                pos_index.push_back(i);
            }
        }
        node_first[n] = static_cast<int>(pos_node.size());
        for (int i = 0; i < k0; ++i) {
            pos_node.push_back(n);
            pos_index.push_back(i);
        }
        node_first[n + 1] = static_cast<int>(pos_node.size());
        for (int i = 0; i < k1; ++i) {
            pos_node.push_back(n + 1);
            pos_index.push_back(i);
        }
        match.assign(total, -1);
        matched_pairs = 0;
        ring_matched.assign(n, 0);
        empty_rings = (k0 == 0 ? 1 : 0) + (k1 == 0 ? 1 : 0);
        needs = 0;
        closures = 0;
        {
            int v_cnt = 0;
            for (int v = 0; v < n; ++v)
                if (degrees[v] > 0) v_cnt++;
            if (k0 > 0) v_cnt++;
            if (k1 > 0) v_cnt++;
            min_faces = 2 - v_cnt + total / 2;
        }
        // walk terminals: IN(p) = 2p, OUT(p) = 2p+1; corner wiring unions
        // IN(node,i) with OUT(node,i+1).
        dsu.nodes.assign(2 * total, {});
        for (int x = 0; x < 2 * total; ++x) dsu.nodes[x].parent = x;
        for (int node = 0; node < n + 2; ++node) {
            int deg = node == n ? k0 : (node == n + 1 ? k1 : degrees[node]);
            if (deg == 0) continue;
            int base = node_first[node];
            for (int i = 0; i < deg; ++i) {
                int p = base + i, pn = base + (i + 1) % deg;
                int ra = dsu.find(2 * p), rb = dsu.find(2 * pn + 1);
                if (ra != rb) {
                    dsu.nodes[ra].parent = rb;
                    dsu.nodes[rb].ring_corners += dsu.nodes[ra].ring_corners;
                }
                if (node >= n) dsu.nodes[dsu.find(rb)].ring_corners += 1;
            }
        }
        dsu.log.clear();
        {
            std::vector<int> opens(n + 2, 0);
            for (int v = 0; v < n; ++v) opens[v] = degrees[v];
            opens[n] = k0;
            opens[n + 1] = k1;
            ndsu.init(opens);
            support_nodes = 0;
            for (int v = 0; v < n + 2; ++v)
                if (opens[v] > 0) support_nodes++;
            open_vertices = 0;
            for (int v = 0; v < n; ++v)
                if (degrees[v] > 0) open_vertices++;
        }
        dfs(0);
    }

    bool face_ok(const RollbackDsu::Closed& c) {
        if (!c.closed) return true;
        closures++;
        if (c.sides == 1 && c.ring_corners == 0)
            needs++;  // monogon: something must nest inside
        else if (c.sides == 2 && c.two_distinct_arcs)
            needs++;  // bigon between distinct edges
        return needs <= empty_rings + open_vertices + (max_vertices - n);
    }

    int matched_pairs = 0;

    bool node_open(int node) const {
        int deg = node == n ? k0 : (node == n + 1 ? k1 : degrees[node]);
        for (int p = node_first[node]; p < node_first[node] + deg; ++p)
            if (match[p] == -1) return true;
        return false;
    }

    bool node_fresh(int node) const {
        int deg = node == n ? k0 : (node == n + 1 ? k1 : degrees[node]);
        for (int p = node_first[node]; p < node_first[node] + deg; ++p)
            if (match[p] != -1) return false;
        return true;
    }

    void dfs(int p) {
        while (p < static_cast<int>(match.size()) && match[p] != -1) ++p;
        if (p == static_cast<int>(match.size())) {
            emit();
            return;
        }
        for (int q = p + 1; q < static_cast<int>(match.size()); ++q) {
            if (match[q] != -1) continue;
            if (pos_node[p] >= n && pos_node[q] >= n) continue;  // no ring-ring edges
            int qn = pos_node[q];
            if (unflagged_only) {
                bool ring_arc = pos_node[p] >= n || qn >= n;
                int fat = pos_node[p] >= n ? qn : pos_node[p];
                if (ring_arc && ring_matched[fat] >= bd_quota[fat]) continue;
                if (!ring_arc && qn < n) {
                    // interior arc consumes two interior position budgets
                    auto interior_left = [&](int v) {
                        int open_here = 0;
                        for (int x = node_first[v]; x < node_first[v] + degrees[v]; ++x)
                            if (match[x] == -1) open_here++;
                        return open_here - (bd_quota[v] - ring_matched[v]);
                    };
                    int needp = pos_node[p] == qn ? 2 : 1;
                    if (interior_left(pos_node[p]) < needp) continue;
                    if (interior_left(qn) < (pos_node[p] == qn ? 2 : 1)) continue;
                }
            }
            if (qn != pos_node[p] && node_fresh(qn)) {
                // First contact with an untouched node: its rotation start is
                // a relabeling gauge, so only its first position is tried,
                // and among untouched equal-degree vertices only the lowest.
                if (pos_index[q] != 0) continue;
                if (qn < n) {
                    bool skip = false;
                    for (int w = qn - 1; w >= 0; --w)
                        if (degrees[w] == degrees[qn] && node_fresh(w) &&
                            w != pos_node[p])
                            skip = true;
                    if (skip) continue;
                }
            }
            dfs_nodes++;
            match[p] = q;
            match[q] = p;
            matched_pairs++;
            bool counted_ring = false;
            if (unflagged_only && (pos_node[p] >= n || qn >= n)) {
                ring_matched[pos_node[p] >= n ? qn : pos_node[p]]++;
                counted_ring = true;
            }
            int arc = p;  // provisional id
            size_t mk = dsu.mark();
            size_t nmk = ndsu.mark();
            int old_needs = needs;
            int old_closures = closures;
            int old_open_vertices = open_vertices;
            int pn = pos_node[p];
            bool was_open_p = true, was_open_q = true;
            ndsu.dec_open(pn);
            ndsu.unite(pn, qn);
            ndsu.dec_open(qn);
            if (pn < n && !node_open(pn)) open_vertices--;
            if (qn < n && qn != pn && !node_open(qn)) open_vertices--;
            (void)was_open_p;
            (void)was_open_q;
            auto c1 = dsu.unite_side(2 * p + 1, 2 * q, arc);
            bool ok = face_ok(c1);
            RollbackDsu::Closed c2;
            if (ok) {
                c2 = dsu.unite_side(2 * q + 1, 2 * p, arc);
                ok = face_ok(c2);
            }
            // connectivity: a closed component must be everything
            if (ok && ndsu.open_at(pn) == 0 && ndsu.size_at(pn) < support_nodes) ok = false;
            if (ok) {
                int open_positions = static_cast<int>(match.size()) - 2 * matched_pairs;
                if (closures + open_positions >= min_faces) dfs(p + 1);
            }
            dsu.rollback(mk);
            ndsu.rollback(nmk);
            needs = old_needs;
            closures = old_closures;
            open_vertices = old_open_vertices;
            matched_pairs--;
            if (counted_ring) ring_matched[pos_node[p] >= n ? qn : pos_node[p]]--;
            match[p] = match[q] = -1;
        }
    }

    void emit() {
        AnnularMap m;
        m.nodes.assign(n + 2, {});
        m.ring0 = n;
        m.ring1 = n + 1;
        m.nodes[n].ring = m.nodes[n + 1].ring = true;
        // darts: arc per matched pair with p < q
        std::vector<int> dart_of_pos(match.size(), -1);
        int arc = 0;
        for (int p = 0; p < static_cast<int>(match.size()); ++p) {
            if (match[p] > p) {
                dart_of_pos[p] = 2 * arc;
                dart_of_pos[match[p]] = 2 * arc + 1;
                arc++;
            }
        }
        if (arc > max_edges) return;
        for (int node = 0; node < n + 2; ++node) {
            int deg = node == n ? k0 : (node == n + 1 ? k1 : degrees[node]);
            int base = node_first[node];
            for (int i = 0; i < deg; ++i) m.nodes[node].rot.push_back(dart_of_pos[base + i]);
        }
        if (!m.index_darts(2 * arc)) return;
        if (unflagged_only)
            for (int v = 0; v < n; ++v)
                if (ring_matched[v] != bd_quota[v]) return;
        FaceData f = trace_walks(m);
        if (!pieces_planar(m, f)) return;
        // connected up to the unused rings
        int graph_pieces = 0;
        std::vector<bool> seen_piece(f.piece_count, false);
        for (int node = 0; node < n; ++node)
            if (!seen_piece[f.piece_of_node[node]]) {
                seen_piece[f.piece_of_node[node]] = true;
                graph_pieces++;
            }
        if (graph_pieces != 1) return;
        Piece pc;
        pc.map = std::move(m);
        pc.vertices = n;
        pc.edges = arc;
        pc.uses_r0 = k0 > 0;
        pc.uses_r1 = k1 > 0;
        pieces->push_back(std::move(pc));
    }
};

// Disjoint union of pieces: fat vertices renumbered, rings shared.
AnnularMap union_map(const std::vector<const Piece*>& parts) {
    AnnularMap m;
    int total_fat = 0, total_darts = 0;
    for (const Piece* p : parts) {
        total_fat += p->vertices;
        total_darts += p->map.dart_count();
    }
    m.nodes.assign(total_fat + 2, {});
    m.ring0 = total_fat;
    m.ring1 = total_fat + 1;
    m.nodes[m.ring0].ring = m.nodes[m.ring1].ring = true;
    int fat_base = 0, dart_base = 0;
    for (const Piece* p : parts) {
        const AnnularMap& pm = p->map;
        for (int v = 0; v < p->vertices; ++v)
            for (Dart d : pm.nodes[v].rot)
                m.nodes[fat_base + v].rot.push_back(dart_base + d);
        for (int r = 0; r < 2; ++r) {
            int src_ring = r == 0 ? pm.ring0 : pm.ring1;
            int dst_ring = r == 0 ? m.ring0 : m.ring1;
            for (Dart d : pm.nodes[src_ring].rot)
                m.nodes[dst_ring].rot.push_back(dart_base + d);
        }
        fat_base += p->vertices;
        dart_base += pm.dart_count();
    }
    if (!m.index_darts(total_darts)) throw std::logic_error("union map darts");
    return m;
}

}  // namespace

namespace {
void corpus_driver(int max_vertices, int max_edges, bool unflagged,
                   const std::function<void(const ReducedAnnularGraph&)>& fn) {
    std::vector<Piece> pieces;
    {
        CorpusGen gen;
        gen.max_vertices = max_vertices;
        gen.max_edges = max_edges;
        gen.unflagged_only = unflagged;
        gen.pieces = &pieces;
        gen.run();
        if (getenv("ANNGRAPH_CORPUS_STATS"))
            fprintf(stderr, "corpus dfs nodes: %ld, pieces: %zu\n", gen.dfs_nodes,
                    pieces.size());
    }
    // Isolated vertex as a float piece (flagged by clause (1), so it has no
    // place in the unflagged stratum).
    if (!unflagged) {
        Piece iso;
        iso.map.nodes.assign(3, {});
        iso.map.ring0 = 1;
        iso.map.ring1 = 2;
        iso.map.nodes[1].ring = iso.map.nodes[2].ring = true;
        iso.map.index_darts(0);
        iso.vertices = 1;
        iso.edges = 0;
        pieces.push_back(std::move(iso));
    }
    auto emit_combo = [&](const std::vector<const Piece*>& parts) {
        AnnularMap m = union_map(parts);
        FaceData f = trace_walks(m);
        if (!pieces_planar(m, f)) return;
        std::vector<RegionTable> tables;
        if (f.piece_count == 1)
            tables.push_back(single_piece_regions(f));
        else
            tables = enumerate_region_tables(f);
        for (const auto& t : tables) {
            if (!table_reduced(m, f, t)) continue;
            ReducedAnnularGraph rg;
            rg.map = m;
            rg.faces = f;
            rg.regions = t;
            fn(rg);
        }
    };
    // Split pieces by ring usage.
    std::vector<const Piece*> anchored, floats;
    for (const auto& p : pieces)
        (p.uses_r0 || p.uses_r1 ? anchored : floats).push_back(&p);
    // Float multisets with nondecreasing indices.
    std::function<void(std::vector<const Piece*>&, size_t, int, int)> extend =
        [&](std::vector<const Piece*>& parts, size_t from, int vleft, int eleft) {
            if (!parts.empty()) emit_combo(parts);
            for (size_t x = from; x < floats.size(); ++x) {
                if (floats[x]->vertices > vleft || floats[x]->edges > eleft) continue;
                parts.push_back(floats[x]);
                extend(parts, x, vleft - floats[x]->vertices, eleft - floats[x]->edges);
                parts.pop_back();
            }
        };
    {
        std::vector<const Piece*> parts;
        extend(parts, 0, max_vertices, max_edges);  // floats only
    }
    for (const Piece* a : anchored) {
        std::vector<const Piece*> parts{a};
        if (a->uses_r0 && a->uses_r1) {
            extend(parts, 0, max_vertices - a->vertices, max_edges - a->edges);
        } else {
            extend(parts, 0, max_vertices - a->vertices, max_edges - a->edges);
            for (const Piece* b : anchored) {
                if (!a->uses_r0) continue;  // ordered: ring-0 piece first
                if ((b->uses_r0 && a->uses_r0) || (b->uses_r1 && a->uses_r1)) continue;
                if (a->vertices + b->vertices > max_vertices) continue;
                if (a->edges + b->edges > max_edges) continue;
                std::vector<const Piece*> parts2{a, b};
                extend(parts2, 0, max_vertices - a->vertices - b->vertices,
                       max_edges - a->edges - b->edges);
            }
        }
    }
}
}  // namespace

void exhaustive_reduced_corpus(int max_vertices, int max_edges,
                               const std::function<void(const ReducedAnnularGraph&)>& fn) {
    corpus_driver(max_vertices, max_edges, false, fn);
}

void exhaustive_unflagged_corpus(int max_vertices, int max_edges,
                                 const std::function<void(const ReducedAnnularGraph&)>& fn) {
    corpus_driver(max_vertices, max_edges, true, fn);
}

std::optional<ReducedAnnularGraph> random_reduced_graph(uint64_t seed, int max_vertices) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        int n = 1 + static_cast<int>(rng() % max_vertices);
        int total = 0;
        std::vector<int> degrees(n);
        for (int v = 0; v < n; ++v) {
            degrees[v] = 1 + static_cast<int>(rng() % 8);
            total += degrees[v];
        }
        int k0 = static_cast<int>(rng() % 5), k1 = static_cast<int>(rng() % 5);
        if ((total + k0 + k1) % 2) {
            k0++;
        }
        total += k0 + k1;
        std::vector<int> positions(total);
        std::iota(positions.begin(), positions.end(), 0);
        std::shuffle(positions.begin(), positions.end(), rng);
        // nodes: vertex v owns degrees[v] positions, then rings
        std::vector<int> owner(total), idx(total);
        {
            int p = 0;
            for (int v = 0; v < n; ++v)
                for (int i = 0; i < degrees[v]; ++i, ++p) owner[p] = v, idx[p] = i;
            for (int i = 0; i < k0; ++i, ++p) owner[p] = n, idx[p] = i;
            for (int i = 0; i < k1; ++i, ++p) owner[p] = n + 1, idx[p] = i;
        }
        AnnularMap m;
        m.nodes.assign(n + 2, {});
        m.ring0 = n;
        m.ring1 = n + 1;
        m.nodes[n].ring = m.nodes[n + 1].ring = true;
        for (int v = 0; v < n; ++v) m.nodes[v].rot.assign(degrees[v], -1);
        m.nodes[n].rot.assign(k0, -1);
        m.nodes[n + 1].rot.assign(k1, -1);
        bool ring_ring = false;
        for (int x = 0; x + 1 < total; x += 2) {
            int p = positions[x], q = positions[x + 1];
            if (owner[p] >= n && owner[q] >= n) ring_ring = true;
            m.nodes[owner[p]].rot[idx[p]] = x;
            m.nodes[owner[q]].rot[idx[q]] = x + 1;
        }
        if (ring_ring) continue;
        if (!m.index_darts(total)) continue;
        FaceData f = trace_walks(m);
        if (!pieces_planar(m, f)) continue;
        std::vector<RegionTable> tables;
        if (f.piece_count == 1)
            tables.push_back(single_piece_regions(f));
        else
            tables = enumerate_region_tables(f);
        std::shuffle(tables.begin(), tables.end(), rng);
        for (const auto& t : tables) {
            if (!table_reduced(m, f, t)) continue;
            ReducedAnnularGraph rg;
            rg.map = m;
            rg.faces = f;
            rg.regions = t;
            return rg;
        }
    }
    return std::nullopt;
}

}  // namespace anng
