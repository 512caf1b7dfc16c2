#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <thread>

#include "canon.hpp"
#include "figures.hpp"

namespace anng {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

const std::map<std::string, std::string>& figure_codes() {
    static const std::map<std::string, std::string> codes = [] {
        std::map<std::string, std::string> out;
        for (const auto& id : figure_ids()) out[canonicalize(figure_pair(id))] = id;
        return out;
    }();
    return codes;
}

std::string figure_of_code(const std::string& code) {
    auto it = figure_codes().find(code);
    return it == figure_codes().end() ? "" : it->second;
}

// One search slice: fixed (q, signs, offsets) and first-point decision.
struct Header {
    int n1, n2, q;
    std::vector<int> sign1, sign2;
    std::vector<int> offsets;  // free entries c[i][j], i,j >= 1، row-major
};

struct TaskResult {
    std::vector<Survivor> survivors;
    std::map<std::string, long> kills;
    long structural_rejects = 0;
    long candidates = 0;
    long nodes = 0;
    long partial_prunes = 0;
    long cross_check_violations = 0;
    bool budget_hit = false;
};

// Assignment of one side-1 point.
struct Slot {
    int partner = -2;  // -2 unset; >=0 interior partner point; -1 boundary
    int ring1 = 0, ring2 = 0;
};

struct Searcher {
    const SearchParams* sp;
    FillingParams par;
    std::vector<int> c_matrix;  // full n1 x n2
    std::vector<int> sign1, sign2;

    int points = 0;
    std::vector<Slot> slots;
    std::vector<PairPoint> point_addr;  // per side-1 point index
    long node_cap = -1;

    TaskResult* out = nullptr;

    // derived per point: (i, s) and (j, t)
    void init_points() {
        points = par.points();
        point_addr.resize(points);
        for (int i = 0; i < par.n1; ++i)
            for (int s = 0; s < par.delta * par.n2; ++s) {
                int idx = i * par.delta * par.n2 + s;
                point_addr[idx] = make_point(par, i, s, c_matrix[i * par.n2 + point_label2(par, s)]);
            }
        slots.assign(points, {});
    }

    int point_of(int i, int s) const { return i * par.delta * par.n2 + s; }
    // side-2 inverse lookup
    std::vector<int> point_of_t;  // (j, t) -> point index
    void index_side2() {
        point_of_t.assign(points, -1);
        for (int p = 0; p < points; ++p) {
            const auto& pt = point_addr[p];
            point_of_t[pt.j * par.delta * par.n1 + pt.t] = p;
        }
    }

    bool arc_parity_ok(int p, int q) const {
        const auto& a = point_addr[p];
        const auto& b = point_addr[q];
        bool pos1 = sign1[a.i] == sign1[b.i];
        bool pos2 = sign2[a.j] == sign2[b.j];
        return pos1 != pos2;
    }

    // ---- partial pruning ----------------------------------------------
    //
    // Interior arcs at consecutive slots close a bigon when the second arc
    // follows the first in rotation at one end and precedes it at the
    // other; rotation steps +1 on positive vertices, -1 on negative ones.
    // Such chains are parallel families unless a boundary circle or a
    // nested component later sits inside one of the bigons, so family caps
    // prune with a break budget.

    std::vector<char> ring_anchored1 = {0, 0}, ring_anchored2 = {0, 0};
    std::vector<int> neg_count1, neg_count2;  // negative endpoints per vertex

    struct ViewArc {
        int u0, s0, u1, s1;
    };

    ViewArc view_ends(int p, int q, int side) const {
        const auto& a = point_addr[p];
        const auto& b = point_addr[q];
        if (side == 1) return {a.i, a.s, b.i, b.s};
        return {a.j, a.t, b.j, b.t};
    }

    int spv_of(int side) const {
        return side == 1 ? par.delta * par.n2 : par.delta * par.n1;
    }

    // point index carrying view-side slot (u, s)
    int point_at(int side, int u, int s) const {
        return side == 1 ? point_of(u, s) : point_of_t[u * par.delta * par.n1 + s];
    }

    bool bigon_between(int side, const ViewArc& a, const ViewArc& b) const {
        const std::vector<int>& sg = side == 1 ? sign1 : sign2;
        int spv = spv_of(side);
        auto next = [&](int vert, int s) { return mod(s + (sg[vert] > 0 ? 1 : -1), spv); };
        auto one = [&](int au, int as, int aw, int ar, int bu, int bs, int bw, int br) {
            return au == bu && aw == bw && next(au, as) == bs && next(aw, br) == ar;
        };
        for (int fa : {0, 1})
            for (int fb : {0, 1}) {
                int au = fa ? a.u1 : a.u0, as = fa ? a.s1 : a.s0;
                int aw = fa ? a.u0 : a.u1, ar = fa ? a.s0 : a.s1;
                int bu = fb ? b.u1 : b.u0, bs = fb ? b.s1 : b.s0;
                int bw = fb ? b.u0 : b.u1, br = fb ? b.s0 : b.s1;
                if (one(au, as, aw, ar, bu, bs, bw, br)) return true;
                if (one(bu, bs, bw, br, au, as, aw, ar)) return true;
            }
        return false;
    }

    // Assigned interior arc occupying view slot (u, s), as a point pair.
    std::optional<std::pair<int, int>> arc_at(int side, int u, int s) const {
        int p = point_at(side, u, s);
        if (p < 0) return std::nullopt;
        int q = slots[p].partner;
        if (q < 0) return std::nullopt;
        return std::pair<int, int>{std::min(p, q), std::max(p, q)};
    }

    // Maximal forced-parallel chain through the arc (p,q) in this view.
    int chain_through(int side, int p, int q) const {
        ViewArc base = view_ends(p, q, side);
        std::set<std::pair<int, int>> seen{{std::min(p, q), std::max(p, q)}};
        std::vector<ViewArc> frontier{base};
        int spv = spv_of(side);
        while (!frontier.empty()) {
            ViewArc cur = frontier.back();
            frontier.pop_back();
            for (int end : {0, 1})
                for (int dir : {-1, 1}) {
                    int u = end ? cur.u1 : cur.u0;
                    int s = mod((end ? cur.s1 : cur.s0) + dir, spv);
                    auto other = arc_at(side, u, s);
                    if (!other || seen.count(*other)) continue;
                    ViewArc oa = view_ends(other->first, other->second, side);
                    if (!bigon_between(side, cur, oa)) continue;
                    seen.insert(*other);
                    frontier.push_back(oa);
                }
        }
        return static_cast<int>(seen.size());
    }

    int break_budget(int side) const {
        const std::vector<char>& anch = side == 1 ? ring_anchored1 : ring_anchored2;
        int n_self = side == 1 ? par.n1 : par.n2;
        int budget = (anch[0] ? 0 : 1) + (anch[1] ? 0 : 1);
        std::vector<char> open(n_self, 0);
        for (int x = 0; x < points; ++x) {
            if (slots[x].partner != -2) continue;
            const auto& pt = point_addr[x];
            open[side == 1 ? pt.i : pt.j] = 1;
        }
        for (char c : open) budget += c;
        return budget;
    }

    // Breaks required to fit a chain of length len under cap.
    static int breaks_needed(int len, int cap) {
        if (cap <= 0) return len;  // unusable: force a large number
        return (len + cap - 1) / cap - 1;
    }

    bool partial_ok_after(int p, int q) {
        if (!sp->partial_filtering) return true;
        const auto& a = point_addr[p];
        const auto& b = point_addr[q];
        bool pos1 = sign1[a.i] == sign1[b.i];
        // exact per-vertex negative endpoint caps
        if (!pos1) {
            if (neg_count1[a.i] > 2 * par.n2 || neg_count1[b.i] > 2 * par.n2) return false;
        } else {
            if (neg_count2[a.j] > 2 * par.n1 || neg_count2[b.j] > 2 * par.n1) return false;
        }
        for (int side : {1, 2}) {
            int n_other = side == 1 ? par.n2 : par.n1;
            bool positive_here = side == 1 ? pos1 : !pos1;
            int cap_plain = n_other;
            int cap_pos = (n_other + 2) / 2;
            int cap = positive_here ? std::min(cap_plain, cap_pos) : cap_plain;
            int len = chain_through(side, p, q);
            if (len <= cap) continue;
            if (breaks_needed(len, cap) > break_budget(side)) return false;
        }
        // adjacent-slot loop needs a nested item inside its monogon
        for (int side : {1, 2}) {
            ViewArc e = view_ends(p, q, side);
            if (e.u0 == e.u1) {
                int spv = spv_of(side);
                if (mod(e.s0 - e.s1, spv) == 1 || mod(e.s1 - e.s0, spv) == 1)
                    if (break_budget(side) < 1) return false;
            }
        }
        return true;
    }

    // ---- search ---------------------------------------------------------

    void record_kill(const std::string& name) { out->kills[name]++; }

    void search(int depth) {
        if (node_cap >= 0 && out->nodes >= node_cap) {
            out->budget_hit = true;
            return;
        }
        int p = 0;
        while (p < points && slots[p].partner != -2) ++p;
        if (p == points) {
            complete_state();
            return;
        }
        // boundary choices
        for (int r1 = 0; r1 < 2; ++r1)
            for (int r2 = 0; r2 < 2; ++r2) {
                out->nodes++;
                slots[p].partner = -1;
                slots[p].ring1 = r1;
                slots[p].ring2 = r2;
                bool a1 = ring_anchored1[r1], a2 = ring_anchored2[r2];
                ring_anchored1[r1] = 1;
                ring_anchored2[r2] = 1;
                search(depth + 1);
                ring_anchored1[r1] = a1;
                ring_anchored2[r2] = a2;
                slots[p].partner = -2;
                if (out->budget_hit) return;
            }
        // interior partners
        for (int q = p + 1; q < points; ++q) {
            if (slots[q].partner != -2) continue;
            out->nodes++;
            if (!arc_parity_ok(p, q)) {
                out->partial_prunes++;
                continue;
            }
            slots[p].partner = q;
            slots[q].partner = p;
            const auto& pa = point_addr[p];
            const auto& pb = point_addr[q];
            bool neg1 = sign1[pa.i] != sign1[pb.i];
            if (neg1) {
                neg_count1[pa.i]++;
                neg_count1[pb.i]++;
            } else {
                neg_count2[pa.j]++;
                neg_count2[pb.j]++;
            }
            if (partial_ok_after(p, q)) {
                search(depth + 1);
            } else {
                out->partial_prunes++;
            }
            if (neg1) {
                neg_count1[pa.i]--;
                neg_count1[pb.i]--;
            } else {
                neg_count2[pa.j]--;
                neg_count2[pb.j]--;
            }
            slots[p].partner = -2;
            slots[q].partner = -2;
            if (out->budget_hit) return;
        }
    }

    // Assemble the incidence pair skeleton from assignments.
    IncidencePair base_pair() const {
        IncidencePair pr;
        pr.par = par;
        pr.sign1 = sign1;
        pr.sign2 = sign2;
        for (int x = 0; x < points; ++x) {
            if (slots[x].partner == -1) {
                PairArc arc;
                arc.boundary = true;
                arc.p0 = point_addr[x];
                arc.ring1 = slots[x].ring1;
                arc.ring2 = slots[x].ring2;
                pr.arcs.push_back(arc);
            } else if (slots[x].partner > x) {
                PairArc arc;
                arc.p0 = point_addr[x];
                arc.p1 = point_addr[slots[x].partner];
                pr.arcs.push_back(arc);
            }
        }
        return pr;
    }

    void complete_state() {
        IncidencePair skeleton = base_pair();
        // boundary arc ids per ring per view
        std::array<std::vector<int>, 2> ring1_arcs, ring2_arcs;
        for (int a = 0; a < static_cast<int>(skeleton.arcs.size()); ++a) {
            if (!skeleton.arcs[a].boundary) continue;
            ring1_arcs[skeleton.arcs[a].ring1].push_back(a);
            ring2_arcs[skeleton.arcs[a].ring2].push_back(a);
        }
        // cyclic orders: fix the first element, permute the rest
        auto cyclic_orders = [](const std::vector<int>& items) {
            std::vector<std::vector<int>> orders;
            if (items.empty()) {
                orders.push_back({});
                return orders;
            }
            std::vector<int> rest(items.begin() + 1, items.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> full{items[0]};
                full.insert(full.end(), rest.begin(), rest.end());
                orders.push_back(full);
            } while (std::next_permutation(rest.begin(), rest.end()));
            return orders;
        };
        for (auto& o10 : cyclic_orders(ring1_arcs[0]))
            for (auto& o11 : cyclic_orders(ring1_arcs[1]))
                for (auto& o20 : cyclic_orders(ring2_arcs[0]))
                    for (auto& o21 : cyclic_orders(ring2_arcs[1])) {
                        IncidencePair pr = skeleton;
                        pr.boundary_order1 = {o10, o11};
                        pr.boundary_order2 = {o20, o21};
                        nesting_and_filter(pr);
                        if (out->budget_hit) return;
                    }
    }

    struct Probe {
        ViewGeometry geo;  // map/faces valid; regions set per table below
        bool planar = false;
        std::vector<RegionTable> tables;
    };

    Probe probe_view(const AnnulusGraphView& v) const {
        Probe pb;
        AnnulusGraphView raw = v;
        raw.regions.reset();
        BuiltView b = build_view(raw);
        if (b.usable) {
            pb.geo = std::move(b.geo);
            pb.planar = true;
            pb.tables.push_back(pb.geo.regions);
            return pb;
        }
        if (b.violations.empty()) return pb;
        for (const auto& viol : b.violations)
            if (viol.invariant != "region-table") return pb;
        pb.geo = std::move(b.geo);
        pb.planar = true;
        pb.tables = enumerate_region_tables(pb.geo.faces);
        return pb;
    }

    void nesting_and_filter(IncidencePair& pr) {
        AnnulusGraphView v1 = pr.project(1), v2 = pr.project(2);
        Probe pb1 = probe_view(v1);
        if (!pb1.planar) {
            out->candidates++;
            out->structural_rejects++;
            return;
        }
        Probe pb2 = probe_view(v2);
        if (!pb2.planar) {
            out->candidates++;
            out->structural_rejects++;
            return;
        }
        for (const auto& t1 : pb1.tables) {
            pb1.geo.regions = t1;
            if (has_trivial_loop(pb1.geo.map, pb1.geo.faces, t1)) {
                out->candidates++;
                out->structural_rejects++;
                continue;
            }
            for (const auto& t2 : pb2.tables) {
                pb2.geo.regions = t2;
                out->candidates++;
                if (has_trivial_loop(pb2.geo.map, pb2.geo.faces, t2)) {
                    out->structural_rejects++;
                    continue;
                }
                pr.regions1 = region_spec_of(pb1.geo);
                pr.regions2 = region_spec_of(pb2.geo);
                if (pr.regions1->empty()) pr.regions1.reset();
                if (pr.regions2->empty()) pr.regions2.reset();
                evaluate(pr, v1, v2, pb1.geo, pb2.geo);
                if (out->budget_hit) return;
            }
        }
    }

    void evaluate(const IncidencePair& pr, const AnnulusGraphView& v1,
                  const AnnulusGraphView& v2, const ViewGeometry& g1,
                  const ViewGeometry& g2) {
        FilterContext ctx;
        ctx.pair = pr;
        ctx.band_cycle_cap = sp->band_cycle_cap;
        ctx.g.view1 = v1;
        ctx.g.view2 = v2;
        ctx.g.view1.regions = pr.regions1;
        ctx.g.view2.regions = pr.regions2;
        ctx.g.geo1 = g1;
        ctx.g.geo2 = g2;
        ctx.g.red1 = reduce(ctx.g.view1, ctx.g.geo1);
        ctx.g.red2 = reduce(ctx.g.view2, ctx.g.geo2);
        ctx.g.usable = true;
        ctx.side[0].v = &ctx.g.view1;
        ctx.side[0].geo = &ctx.g.geo1;
        ctx.side[0].red = &ctx.g.red1;
        ctx.side[1].v = &ctx.g.view2;
        ctx.side[1].geo = &ctx.g.geo2;
        ctx.side[1].red = &ctx.g.red2;
        for (auto& sd : ctx.side) {
            sd.special = is_special(*sd.v, *sd.geo, *sd.red);
            sd.scycles = find_scharlemann_cycles(*sd.v, *sd.geo);
            sd.bands = find_bands(*sd.v, *sd.geo, *sd.red);
        }
        ctx.usable = true;
        if (sp->cross_checks) run_cross_checks(pr, ctx);
        for (const auto& verdict : run_filters(ctx, sp->filters)) {
            if (!verdict.pass) {
                out->kills[verdict.name]++;
                return;
            }
        }
        bool sp1 = ctx.side[0].special, sp2 = ctx.side[1].special;
        if (sp->mode == SearchMode::kSpecial && !(sp1 && sp2)) {
            out->kills["mode"]++;
            return;
        }
        if (sp->mode == SearchMode::kNonspecial && (sp1 || sp2)) {
            out->kills["mode"]++;
            return;
        }
        Survivor s;
        s.pair = normal_form(pr);
        s.code = canonicalize(pr);
        s.figure = figure_of_code(s.code);
        out->survivors.push_back(std::move(s));
    }

    void run_cross_checks(const IncidencePair& pr, const FilterContext& ctx) {
        // rho complement identity
        for (int side : {1, 2}) {
            int n_self = side == 1 ? par.n1 : par.n2;
            int spv = side == 1 ? par.delta * par.n2 : par.delta * par.n1;
            for (int v = 0; v < n_self; ++v)
                for (int s2 = 1; s2 < spv; ++s2)
                    if (rho(pr, side, v, 0, s2) + rho(pr, side, v, s2, 0) != spv)
                        out->cross_check_violations++;
        }
        // equidistance biconditional
        for (auto [a, b] : equidistance_candidates(pr))
            if (equidistant_in(pr, 1, a, b) != equidistant_in(pr, 2, a, b))
                out->cross_check_violations++;
        // parity rule (structural by construction; recheck)
        for (const auto& arc : pr.arcs) {
            if (arc.boundary) continue;
            bool pos1 = pr.sign1[arc.p0.i] == pr.sign1[arc.p1.i];
            bool pos2 = pr.sign2[arc.p0.j] == pr.sign2[arc.p1.j];
            if (pos1 == pos2) out->cross_check_violations++;
        }
        // Euler identity per view
        for (const ViewGeometry* geo : {&ctx.g.geo1, &ctx.g.geo2}) {
            int chi = 0;
            for (int r = 0; r < geo->regions.region_count; ++r)
                chi += geo->regions.chi(geo->faces, r);
            int n_self = geo == &ctx.g.geo1 ? par.n1 : par.n2;
            if (n_self - static_cast<int>(pr.arcs.size()) + chi != 0)
                out->cross_check_violations++;
        }
    }
};

std::vector<Header> make_headers(const SearchParams& sp) {
    std::vector<Header> out;
    for (int n1 = sp.n1_min; n1 <= sp.n1_max; ++n1)
        for (int n2 = sp.n2_min; n2 <= sp.n2_max; ++n2) {
            std::vector<int> qs = sp.qs.empty() ? allowed_q(sp.delta) : sp.qs;
            for (int q : qs) {
                // sign vectors
                for (int m1 = 0; m1 < (1 << n1); ++m1)
                    for (int m2 = 0; m2 < (1 << n2); ++m2) {
                        Header h;
                        h.n1 = n1;
                        h.n2 = n2;
                        h.q = q;
                        for (int i = 0; i < n1; ++i)
                            h.sign1.push_back((m1 >> i) & 1 ? -1 : 1);
                        for (int j = 0; j < n2; ++j)
                            h.sign2.push_back((m2 >> j) & 1 ? -1 : 1);
                        int free = (n1 - 1) * (n2 - 1);
                        std::vector<int> c(free, 0);
                        while (true) {
                            h.offsets = c;
                            out.push_back(h);
                            int x = 0;
                            for (; x < free; ++x) {
                                if (++c[x] < sp.delta) break;
                                c[x] = 0;
                            }
                            if (x == free) break;
                        }
                    }
            }
        }
    return out;
}

TaskResult run_header(const SearchParams& sp, const Header& h, long node_cap) {
    TaskResult res;
    Searcher s;
    s.sp = &sp;
    s.par = {sp.delta, h.n1, h.n2, h.q};
    s.sign1 = h.sign1;
    s.sign2 = h.sign2;
    s.c_matrix.assign(h.n1 * h.n2, 0);
    for (int i = 1; i < h.n1; ++i)
        for (int j = 1; j < h.n2; ++j)
            s.c_matrix[i * h.n2 + j] = h.offsets[(i - 1) * (h.n2 - 1) + (j - 1)];
    s.out = &res;
    s.node_cap = node_cap;
    s.neg_count1.assign(h.n1, 0);
    s.neg_count2.assign(h.n2, 0);
    s.init_points();
    s.index_side2();
    s.search(0);
    return res;
}

EnumerationReport merge_results(const SearchParams& sp, std::vector<TaskResult>& results) {
    EnumerationReport rep;
    rep.params = sp;
    std::set<std::string> seen;
    for (auto& r : results) {
        for (auto& s : r.survivors) {
            if (seen.insert(s.code).second)
                rep.survivors.push_back(std::move(s));
            else
                rep.dedup_hits++;
        }
        for (auto& [k, v] : r.kills) rep.kill_counts[k] += v;
        rep.structural_rejects += r.structural_rejects;
        rep.candidates += r.candidates;
        rep.nodes += r.nodes;
        rep.partial_prunes += r.partial_prunes;
        rep.cross_check_violations += r.cross_check_violations;
        if (r.budget_hit) rep.complete = false;
    }
    std::sort(rep.survivors.begin(), rep.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.code < b.code; });
    return rep;
}

}  // namespace

bool SearchParams::valid() const {
    if (delta < 1 || delta > 5) return false;
    if (n1_min < 1 || n1_min > n1_max || n2_min < 1 || n2_min > n2_max) return false;
    for (int q : qs) {
        auto ok = allowed_q(delta);
        if (std::find(ok.begin(), ok.end(), q) == ok.end()) return false;
    }
    return true;
}

long EnumerationReport::kill_total() const {
    long t = 0;
    for (const auto& [k, v] : kill_counts) t += v;
    return t;
}

EnumerationReport enumerate_pairs(const SearchParams& sp) {
    auto t0 = std::chrono::steady_clock::now();
    if (!sp.valid()) throw std::invalid_argument("bad search parameters");
    figure_codes();  // settle the reference codes before workers spawn
    std::vector<Header> headers = make_headers(sp);
    std::vector<TaskResult> results(headers.size());
    int workers = std::max(1, sp.workers);
    long per_task_cap = sp.node_budget;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= headers.size()) break;
            results[idx] = run_header(sp, headers[idx], per_task_cap);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    // Budget applies cumulatively in task order for a deterministic cut.
    if (sp.node_budget >= 0) {
        long used = 0;
        for (size_t i = 0; i < results.size(); ++i) {
            if (used >= sp.node_budget) {
                results[i] = TaskResult{};
                results[i].budget_hit = true;
            }
            used += results[i].nodes;
        }
    }
    EnumerationReport rep = merge_results(sp, results);
    rep.workers_used = workers;
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

bool oracle_in_range(const SearchParams& sp) {
    long max_points = 0;
    for (int n1 = sp.n1_min; n1 <= sp.n1_max; ++n1)
        for (int n2 = sp.n2_min; n2 <= sp.n2_max; ++n2)
            max_points = std::max<long>(max_points, 1L * sp.delta * n1 * n2);
    if (sp.delta <= 3 && max_points <= 12) return true;
    if (sp.delta == 4 && sp.n1_max == 1 && sp.n2_max == 1) return true;
    return false;
}

EnumerationReport brute_force_oracle(const SearchParams& sp) {
    if (!oracle_in_range(sp)) throw std::invalid_argument("oracle restricted to toy sizes");
    SearchParams naive = sp;
    naive.partial_filtering = false;
    naive.workers = 1;
    naive.node_budget = -1;
    return enumerate_pairs(naive);
}

bool match_figure(const IncidencePair& pair, const std::string& figure_id) {
    const auto& ids = figure_ids();
    if (std::find(ids.begin(), ids.end(), figure_id) == ids.end())
        throw std::invalid_argument("unknown figure id: " + figure_id);
    return figure_of_code(canonicalize(pair)) == figure_id;
}

}  // namespace anng
