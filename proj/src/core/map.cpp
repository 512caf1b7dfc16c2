#include "map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anng {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

bool AnnularMap::index_darts(int darts) {
    node_of.assign(darts, -1);
    pos_of.assign(darts, -1);
    for (int n = 0; n < static_cast<int>(nodes.size()); ++n) {
        const auto& r = nodes[n].rot;
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            Dart d = r[i];
            if (d < 0 || d >= darts || node_of[d] != -1) return false;
            node_of[d] = n;
            pos_of[d] = i;
        }
    }
    for (int d = 0; d < darts; ++d)
        if (node_of[d] == -1) return false;
    return true;
}

FaceData trace_walks(const AnnularMap& m) {
    FaceData f;
    const int darts = m.dart_count();
    f.walk_of_dart.assign(darts, -1);
    for (Dart d0 = 0; d0 < darts; ++d0) {
        if (f.walk_of_dart[d0] != -1) continue;
        std::vector<Dart> walk;
        Dart d = d0;
        do {
            f.walk_of_dart[d] = static_cast<int>(f.walks.size());
            walk.push_back(d);
            d = m.rot_next(AnnularMap::theta(d));
        } while (d != d0);
        f.walks.push_back(std::move(walk));
        f.walk_ring.push_back(-1);
    }
    // Synthetic walks for isolated nodes: their circles still bound regions.
    for (int node = 0; node < static_cast<int>(m.nodes.size()); ++node) {
        if (m.nodes[node].rot.empty()) {
            f.walks.emplace_back();
            f.walk_ring.push_back(node);
        }
    }

    // Pieces: connected components of the complex.
    UnionFind uf(static_cast<int>(m.nodes.size()));
    for (Dart d = 0; d < darts; d += 2) uf.unite(m.node_of[d], m.node_of[d + 1]);
    f.piece_of_node.assign(m.nodes.size(), -1);
    std::vector<int> rep_to_piece(m.nodes.size(), -1);
    for (int n = 0; n < static_cast<int>(m.nodes.size()); ++n) {
        int r = uf.find(n);
        if (rep_to_piece[r] == -1) rep_to_piece[r] = f.piece_count++;
        f.piece_of_node[n] = rep_to_piece[r];
    }
    f.piece_of_walk.assign(f.walks.size(), -1);
    for (int w = 0; w < f.walk_count(); ++w) {
        if (f.walk_ring[w] != -1)
            f.piece_of_walk[w] = f.piece_of_node[f.walk_ring[w]];
        else
            f.piece_of_walk[w] = f.piece_of_node[m.node_of[f.walks[w][0]]];
    }
    return f;
}

bool pieces_planar(const AnnularMap& m, const FaceData& f) {
    std::vector<int> v(f.piece_count, 0), e(f.piece_count, 0), w(f.piece_count, 0);
    std::vector<bool> has_node(f.piece_count, false);
    for (int n = 0; n < static_cast<int>(m.nodes.size()); ++n) {
        v[f.piece_of_node[n]]++;
        has_node[f.piece_of_node[n]] = true;
    }
    for (Dart d = 0; d < m.dart_count(); d += 2) e[f.piece_of_node[m.node_of[d]]]++;
    for (int i = 0; i < f.walk_count(); ++i)
        if (f.walk_ring[i] == -1) w[f.piece_of_walk[i]]++;
    for (int p = 0; p < f.piece_count; ++p) {
        if (!has_node[p]) continue;
        if (e[p] == 0) continue;  // isolated node (endpoint-free ring)
        if (v[p] - e[p] + w[p] != 2) return false;
    }
    return true;
}

int RegionTable::chi(const FaceData& f, int region) const {
    int walks_here = 0;
    for (int w = 0; w < f.walk_count(); ++w)
        if (region_of_walk[w] == region) walks_here++;
    return 2 - walks_here;
}

RegionTable single_piece_regions(const FaceData& f) {
    RegionTable t;
    t.region_of_walk.resize(f.walk_count());
    std::iota(t.region_of_walk.begin(), t.region_of_walk.end(), 0);
    t.region_count = f.walk_count();
    return t;
}

bool region_table_valid(const FaceData& f, const RegionTable& t) {
    const int W = f.walk_count();
    if (static_cast<int>(t.region_of_walk.size()) != W) return false;
    for (int w = 0; w < W; ++w)
        if (t.region_of_walk[w] < 0 || t.region_of_walk[w] >= t.region_count) return false;
    // Two walks of one piece never share a region.
    std::set<std::pair<int, int>> seen;
    for (int w = 0; w < W; ++w)
        if (!seen.insert({f.piece_of_walk[w], t.region_of_walk[w]}).second) return false;
    // Piece/region incidence graph is a tree.
    const int P = f.piece_count, R = t.region_count;
    if (W != P + R - 1) return false;
    UnionFind uf(P + R);
    int joins = 0;
    for (int w = 0; w < W; ++w)
        if (uf.unite(f.piece_of_walk[w], P + t.region_of_walk[w])) joins++;
    return joins == P + R - 1;
}

namespace {

void normalize_table(RegionTable& t) {
    std::vector<int> remap(t.region_count, -1);
    int next = 0;
    for (int& r : t.region_of_walk) {
        if (remap[r] == -1) remap[r] = next++;
        r = remap[r];
    }
    t.region_count = next;
}

void place_pieces(const FaceData& f, const std::vector<std::vector<int>>& piece_walks,
                  size_t p, std::vector<std::vector<int>>& regions,
                  std::set<std::vector<int>>& out) {
    if (p == piece_walks.size()) {
        RegionTable t;
        t.region_of_walk.assign(f.walk_count(), -1);
        t.region_count = static_cast<int>(regions.size());
        for (int r = 0; r < static_cast<int>(regions.size()); ++r)
            for (int w : regions[r]) t.region_of_walk[w] = r;
        normalize_table(t);
        out.insert(t.region_of_walk);
        return;
    }
    const auto& pw = piece_walks[p];
    for (size_t r = 0; r < regions.size(); ++r) {
        std::vector<int> host = regions[r];
        // Every walk of the host region independently chooses which face of
        // the new piece it ends up against.
        std::vector<size_t> choice(host.size(), 0);
        while (true) {
            std::vector<std::vector<int>> next = regions;
            next.erase(next.begin() + r);
            std::vector<std::vector<int>> fresh(pw.size());
            for (size_t i = 0; i < pw.size(); ++i) fresh[i].push_back(pw[i]);
            for (size_t i = 0; i < host.size(); ++i) fresh[choice[i]].push_back(host[i]);
            for (auto& fr : fresh) next.push_back(std::move(fr));
            place_pieces(f, piece_walks, p + 1, next, out);
            size_t i = 0;
            for (; i < host.size(); ++i) {
                if (++choice[i] < pw.size()) break;
                choice[i] = 0;
            }
            if (i == host.size()) break;
        }
    }
}

}  // namespace

std::vector<RegionTable> enumerate_region_tables(const FaceData& f) {
    std::vector<std::vector<int>> piece_walks(f.piece_count);
    for (int w = 0; w < f.walk_count(); ++w) piece_walks[f.piece_of_walk[w]].push_back(w);
    std::set<std::vector<int>> out;
    std::vector<std::vector<int>> regions;
    for (int w : piece_walks[0]) regions.push_back({w});
    place_pieces(f, piece_walks, 1, regions, out);
    std::vector<RegionTable> tables;
    for (const auto& row : out) {
        RegionTable t;
        t.region_of_walk = row;
        t.region_count = row.empty() ? 0 : *std::max_element(row.begin(), row.end()) + 1;
        tables.push_back(std::move(t));
    }
    return tables;
}

int region_at_corner(const AnnularMap& m, const FaceData& f, const RegionTable& t,
                     int node, int pos) {
    Dart in = m.nodes[node].rot[pos];
    return t.region_of_walk[f.walk_of_dart[AnnularMap::theta(in)]];
}

int region_of_ring(const AnnularMap& m, const FaceData& f, const RegionTable& t,
                   int ring_node) {
    if (!m.nodes[ring_node].rot.empty()) return region_at_corner(m, f, t, ring_node, 0);
    for (int w = 0; w < f.walk_count(); ++w)
        if (f.walk_ring[w] == ring_node) return t.region_of_walk[w];
    throw std::logic_error("ring walk missing");
}

bool subgraph_essential(const AnnularMap& m, const FaceData& f, const RegionTable& t,
                        const std::vector<int>& arcs) {
    std::vector<bool> in_s(m.arc_count(), false);
    for (int a : arcs) in_s[a] = true;
    for (int a : arcs) {
        if (m.node_of[2 * a] == m.ring0 || m.node_of[2 * a] == m.ring1 ||
            m.node_of[2 * a + 1] == m.ring0 || m.node_of[2 * a + 1] == m.ring1)
            throw std::invalid_argument("essentiality subgraph touches the annulus boundary");
    }
    UnionFind uf(t.region_count);
    for (int a = 0; a < m.arc_count(); ++a) {
        if (in_s[a]) continue;
        uf.unite(t.region_of_walk[f.walk_of_dart[2 * a]],
                 t.region_of_walk[f.walk_of_dart[2 * a + 1]]);
    }
    for (int n = 0; n < static_cast<int>(m.nodes.size()); ++n) {
        const auto& rot = m.nodes[n].rot;
        const int deg = static_cast<int>(rot.size());
        if (deg == 0) continue;
        bool vertex_removed = false;
        if (!m.nodes[n].ring)
            for (Dart d : rot)
                if (in_s[AnnularMap::arc_of(d)]) vertex_removed = true;
        for (int i = 0; i < deg; ++i) {
            int j = (i + 1) % deg;
            // Passage around the node from corner i to corner j is blocked
            // only by an edge of the subgraph at a removed vertex disk.
            if (vertex_removed && in_s[AnnularMap::arc_of(rot[j])]) continue;
            uf.unite(region_at_corner(m, f, t, n, i), region_at_corner(m, f, t, n, j));
        }
    }
    return uf.find(region_of_ring(m, f, t, m.ring0)) !=
           uf.find(region_of_ring(m, f, t, m.ring1));
}

ParallelFamilies parallel_families(const AnnularMap& m, const FaceData& f,
                                   const RegionTable& t) {
    const int A = m.arc_count();
    std::vector<int> sides(t.region_count, 0);
    for (Dart d = 0; d < m.dart_count(); ++d) sides[t.region_of_walk[f.walk_of_dart[d]]]++;
    // Bigon records: two-sided disk regions bounded by distinct arcs.
    std::vector<std::array<int, 2>> bigons;
    std::vector<std::vector<int>> inc(A);
    for (int r = 0; r < t.region_count; ++r) {
        if (sides[r] != 2 || !t.is_disk(f, r)) continue;
        std::vector<Dart> ds;
        for (int w = 0; w < f.walk_count(); ++w)
            if (t.region_of_walk[w] == r)
                for (Dart d : f.walks[w]) ds.push_back(d);
        int a = AnnularMap::arc_of(ds[0]), b = AnnularMap::arc_of(ds[1]);
        if (a == b) continue;
        inc[a].push_back(static_cast<int>(bigons.size()));
        inc[b].push_back(static_cast<int>(bigons.size()));
        bigons.push_back({a, b});
    }
    for (int a = 0; a < A; ++a)
        if (inc[a].size() > 2) throw std::logic_error("arc bounds three bigons");

    ParallelFamilies out;
    out.family_of_arc.assign(A, -1);
    std::vector<bool> used(bigons.size(), false);
    for (int a0 = 0; a0 < A; ++a0) {
        if (out.family_of_arc[a0] != -1) continue;
        // Find a band end in this component, if any.
        int start = a0;
        {
            int prev_b = -1, cur = a0;
            for (int steps = 0; steps <= A; ++steps) {
                int next_b = -1;
                for (int bi : inc[cur])
                    if (bi != prev_b) next_b = bi;
                if (next_b == -1) break;  // reached an end
                prev_b = next_b;
                cur = bigons[next_b][0] == cur ? bigons[next_b][1] : bigons[next_b][0];
                if (cur == a0) break;  // closed band
            }
            start = cur;
        }
        int id = static_cast<int>(out.family_arcs.size());
        std::vector<int> fam;
        bool cyclic = false;
        int cur = start;
        out.family_of_arc[cur] = id;
        fam.push_back(cur);
        while (true) {
            int next_b = -1;
            for (int bi : inc[cur])
                if (!used[bi]) next_b = bi;
            if (next_b == -1) break;
            used[next_b] = true;
            int nxt = bigons[next_b][0] == cur ? bigons[next_b][1] : bigons[next_b][0];
            if (out.family_of_arc[nxt] != -1) {
                cyclic = true;  // band closes up into an annulus
                break;
            }
            out.family_of_arc[nxt] = id;
            fam.push_back(nxt);
            cur = nxt;
        }
        out.family_arcs.push_back(std::move(fam));
        out.cyclic.push_back(cyclic);
    }
    return out;
}

bool has_trivial_loop(const AnnularMap& m, const FaceData& f, const RegionTable& t) {
    std::vector<int> sides(t.region_count, 0);
    for (Dart d = 0; d < m.dart_count(); ++d) sides[t.region_of_walk[f.walk_of_dart[d]]]++;
    for (int r = 0; r < t.region_count; ++r)
        if (sides[r] == 1 && t.is_disk(f, r)) return true;
    return false;
}

std::string map_debug(const AnnularMap& m, const FaceData& f) {
    std::ostringstream os;
    for (int n = 0; n < static_cast<int>(m.nodes.size()); ++n) {
        os << (m.nodes[n].ring ? "ring " : "vert ") << n << ":";
        for (Dart d : m.nodes[n].rot) os << " " << d;
        os << "\n";
    }
    for (int w = 0; w < f.walk_count(); ++w) {
        os << "walk " << w << " (piece " << f.piece_of_walk[w] << "):";
        for (Dart d : f.walks[w]) os << " " << d;
        if (f.walk_ring[w] != -1) os << " [ring " << f.walk_ring[w] << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace anng
