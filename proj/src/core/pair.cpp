#include "pair.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anng {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int inv_mod(int q, int m) {
    for (int x = 1; x <= m; ++x)
        if (mod(q * x, m) == 1 % m) return x % m;
    throw std::invalid_argument("jumping number not invertible");
}

std::string arc_name(int a) { return "arc " + std::to_string(a); }

}  // namespace

bool FillingParams::valid() const {
    if (delta < 1 || delta > 5 || n1 < 1 || n2 < 1) return false;
    auto qs = allowed_q(delta);
    return std::find(qs.begin(), qs.end(), q) != qs.end();
}

std::vector<int> allowed_q(int delta) {
    return delta == 5 ? std::vector<int>{1, 2} : std::vector<int>{1};
}

PairPoint make_point(const FillingParams& p, int i, int s, int c) {
    PairPoint pt;
    pt.i = i;
    pt.s = s;
    pt.j = point_label2(p, s);
    int k = point_occ1(p, s);
    int m = mod(inv_mod(p.q, p.delta) * (k - c), p.delta);
    pt.t = m * p.n1 + i;
    return pt;
}

AnnulusGraphView IncidencePair::project(int side) const {
    AnnulusGraphView v;
    v.side = side;
    v.delta = par.delta;
    v.n_self = side == 1 ? par.n1 : par.n2;
    v.n_other = side == 1 ? par.n2 : par.n1;
    v.sign = side == 1 ? sign1 : sign2;
    for (const auto& a : arcs) {
        AnnulusGraphView::ArcEnds e;
        e.boundary = a.boundary;
        auto addr = [&](const PairPoint& p) {
            return side == 1 ? AnnulusGraphView::VertexEnd{p.i, p.s}
                             : AnnulusGraphView::VertexEnd{p.j, p.t};
        };
        e.v0 = addr(a.p0);
        if (a.boundary)
            e.ring = side == 1 ? a.ring1 : a.ring2;
        else
            e.v1 = addr(a.p1);
        v.arcs.push_back(e);
    }
    v.boundary_order = side == 1 ? boundary_order1 : boundary_order2;
    v.regions = side == 1 ? regions1 : regions2;
    return v;
}

std::optional<std::vector<int>> jump_offsets(const IncidencePair& pair) {
    const auto& p = pair.par;
    std::vector<int> c(p.n1 * p.n2, -1);
    auto scan = [&](const PairPoint& pt) {
        int k = point_occ1(p, pt.s), m = point_occ2(p, pt.t);
        int cc = mod(k - p.q * m, p.delta);
        int& cell = c[pt.i * p.n2 + pt.j];
        if (cell == -1) cell = cc;
        return cell == cc;
    };
    for (const auto& a : pair.arcs) {
        if (!scan(a.p0)) return std::nullopt;
        if (!a.boundary && !scan(a.p1)) return std::nullopt;
    }
    for (int& cell : c)
        if (cell == -1) cell = 0;
    return c;
}

std::vector<Violation> validate(const IncidencePair& pair) {
    std::vector<Violation> out;
    auto fail = [&](std::string inv, std::string wit) {
        out.push_back({std::move(inv), std::move(wit)});
    };
    const auto& p = pair.par;
    if (!p.valid()) {
        fail("params", "delta/n/q out of range");
        return out;
    }
    if (static_cast<int>(pair.sign1.size()) != p.n1 ||
        static_cast<int>(pair.sign2.size()) != p.n2) {
        fail("sign-vector", "length");
        return out;
    }

    // Every intersection point used exactly once, with dual labels.
    std::vector<int> used1(p.n1 * p.delta * p.n2, -1), used2(p.n2 * p.delta * p.n1, -1);
    bool addressing_ok = true;
    auto touch = [&](const PairPoint& pt, int arc) {
        if (pt.i < 0 || pt.i >= p.n1 || pt.s < 0 || pt.s >= p.delta * p.n2 || pt.j < 0 ||
            pt.j >= p.n2 || pt.t < 0 || pt.t >= p.delta * p.n1) {
            fail("endpoint-range", arc_name(arc));
            addressing_ok = false;
            return;
        }
        if (point_label2(p, pt.s) != pt.j || point_label1(p, pt.t) != pt.i) {
            fail("duality", arc_name(arc) + ": slot labels disagree with dual vertex");
            addressing_ok = false;
        }
        int& a1 = used1[pt.i * p.delta * p.n2 + pt.s];
        int& a2 = used2[pt.j * p.delta * p.n1 + pt.t];
        if (a1 != -1 || a2 != -1) {
            fail("point-coverage", arc_name(arc) + " reuses a point");
            addressing_ok = false;
        }
        a1 = a2 = arc;
    };
    for (int a = 0; a < static_cast<int>(pair.arcs.size()); ++a) {
        const auto& e = pair.arcs[a];
        touch(e.p0, a);
        if (!e.boundary) touch(e.p1, a);
    }
    for (int x = 0; x < static_cast<int>(used1.size()); ++x)
        if (used1[x] == -1) {
            fail("point-coverage", "unused point on side 1");
            addressing_ok = false;
            break;
        }
    if (!addressing_ok) return out;

    if (!jump_offsets(pair).has_value())
        fail("jump-ordering", "endpoint orders around dual vertices break the q-step rule");

    for (int a = 0; a < static_cast<int>(pair.arcs.size()); ++a) {
        const auto& e = pair.arcs[a];
        if (e.boundary) continue;
        bool pos1 = pair.sign1[e.p0.i] == pair.sign1[e.p1.i];
        bool pos2 = pair.sign2[e.p0.j] == pair.sign2[e.p1.j];
        if (pos1 == pos2)
            fail("parity", arc_name(a) + ": same sign relation in both graphs");
    }

    for (int side : {1, 2}) {
        auto vs = validate_view(pair.project(side));
        for (auto& viol : vs)
            out.push_back({"g" + std::to_string(side) + "/" + viol.invariant, viol.witness});
    }
    return out;
}

int rho(const IncidencePair& pair, int side, int vertex, int slot_p, int slot_q) {
    const auto& p = pair.par;
    int n_self = side == 1 ? p.n1 : p.n2;
    int spv = p.delta * (side == 1 ? p.n2 : p.n1);
    if (vertex < 0 || vertex >= n_self || slot_p < 0 || slot_p >= spv || slot_q < 0 ||
        slot_q >= spv)
        throw std::invalid_argument("rho: bad address");
    if (slot_p == slot_q) throw std::invalid_argument("rho: equal endpoints");
    return mod(slot_q - slot_p, spv);
}

IncidencePair normalize_gauge(const IncidencePair& pair) {
    auto c = jump_offsets(pair);
    if (!c) throw std::invalid_argument("normalize_gauge: jump rule violated");
    const auto& p = pair.par;
    std::vector<int> a(p.n1), b(p.n2);
    for (int i = 0; i < p.n1; ++i) a[i] = (*c)[i * p.n2];
    int qi = inv_mod(p.q, p.delta);
    for (int j = 0; j < p.n2; ++j) b[j] = mod(-qi * ((*c)[j] - a[0]), p.delta);
    IncidencePair out = pair;
    auto shift = [&](PairPoint& pt) {
        pt.s = mod(pt.s - p.n2 * a[pt.i], p.delta * p.n2);
        pt.t = mod(pt.t - p.n1 * b[pt.j], p.delta * p.n1);
    };
    for (auto& e : out.arcs) {
        shift(e.p0);
        if (!e.boundary) shift(e.p1);
    }
    return out;
}

IncidencePair normalize_arc_order(const IncidencePair& pair) {
    IncidencePair out = pair;
    auto addr1 = [](const PairPoint& pt) { return std::pair(pt.i, pt.s); };
    std::vector<int> end_swapped(out.arcs.size(), 0);
    for (size_t a = 0; a < out.arcs.size(); ++a) {
        auto& e = out.arcs[a];
        if (!e.boundary && addr1(e.p1) < addr1(e.p0)) {
            std::swap(e.p0, e.p1);
            end_swapped[a] = 1;
        }
    }
    std::vector<int> order(out.arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return addr1(out.arcs[x].p0) < addr1(out.arcs[y].p0); });
    std::vector<int> new_id(out.arcs.size());
    for (size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<int>(k);

    IncidencePair res = out;
    res.arcs.resize(out.arcs.size());
    for (size_t a = 0; a < out.arcs.size(); ++a) res.arcs[new_id[a]] = out.arcs[a];
    for (auto* orders : {&res.boundary_order1, &res.boundary_order2})
        for (auto& ring : *orders)
            for (int& a : ring) a = new_id[a];
    for (auto* spec : {&res.regions1, &res.regions2})
        if (spec->has_value())
            for (auto& group : **spec)
                for (auto& key : group)
                    if (key.arc >= 0) {
                        key.end ^= end_swapped[key.arc];
                        key.arc = new_id[key.arc];
                    }
    return res;
}

PairGeometry build_pair_geometry(const IncidencePair& pair) {
    PairGeometry g;
    g.view1 = pair.project(1);
    g.view2 = pair.project(2);
    BuiltView b1 = build_view(g.view1), b2 = build_view(g.view2);
    if (!b1.usable || !b2.usable) return g;
    g.geo1 = std::move(b1.geo);
    g.geo2 = std::move(b2.geo);
    g.red1 = reduce(g.view1, g.geo1);
    g.red2 = reduce(g.view2, g.geo2);
    g.usable = true;
    return g;
}

bool equidistant_in(const IncidencePair& pair, int side, int arc1, int arc2) {
    const auto& e1 = pair.arcs[arc1];
    const auto& e2 = pair.arcs[arc2];
    auto of = [&](const PairPoint& pt) {
        return side == 1 ? std::pair(pt.i, pt.s) : std::pair(pt.j, pt.t);
    };
    auto [u1, s1] = of(e1.p0);
    auto [w1, r1] = of(e1.p1);
    auto [u2, s2] = of(e2.p0);
    auto [w2, r2] = of(e2.p1);
    if (u2 != u1) {
        std::swap(u2, w2);
        std::swap(s2, r2);
    }
    if (u1 == w1 || u1 != u2 || w1 != w2)
        throw std::invalid_argument("equidistance needs non-loop arcs on common vertices");
    return rho(pair, side, u1, s1, s2) == rho(pair, side, w1, r2, r1);
}

std::vector<std::pair<int, int>> equidistance_candidates(const IncidencePair& pair) {
    std::vector<std::pair<int, int>> out;
    const int A = static_cast<int>(pair.arcs.size());
    for (int a = 0; a < A; ++a) {
        const auto& ea = pair.arcs[a];
        if (ea.boundary || ea.p0.i == ea.p1.i || ea.p0.j == ea.p1.j) continue;
        for (int b = a + 1; b < A; ++b) {
            const auto& eb = pair.arcs[b];
            if (eb.boundary || eb.p0.i == eb.p1.i || eb.p0.j == eb.p1.j) continue;
            if (std::minmax(ea.p0.i, ea.p1.i) != std::minmax(eb.p0.i, eb.p1.i)) continue;
            if (std::minmax(ea.p0.j, ea.p1.j) != std::minmax(eb.p0.j, eb.p1.j)) continue;
            out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace anng
