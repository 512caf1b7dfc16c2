#include "canon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anng {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int inv_mod(int q, int m) {
    for (int x = 1; x <= m; ++x)
        if (mod(q * x, m) == 1 % m) return x % m;
    throw std::invalid_argument("not invertible");
}

void for_each_point(IncidencePair& p, const std::function<void(PairPoint&)>& f) {
    for (auto& a : p.arcs) {
        f(a.p0);
        if (!a.boundary) f(a.p1);
    }
}

std::optional<std::vector<int>> offsets_with_step(const IncidencePair& pair, int qeff) {
    const auto& p = pair.par;
    std::vector<int> c(p.n1 * p.n2, -1);
    bool ok = true;
    IncidencePair& mut = const_cast<IncidencePair&>(pair);
    for_each_point(mut, [&](PairPoint& pt) {
        int k = point_occ1(p, pt.s), m = point_occ2(p, pt.t);
        int cc = mod(k - qeff * m, p.delta);
        int& cell = c[pt.i * p.n2 + pt.j];
        if (cell == -1) cell = cc;
        if (cell != cc) ok = false;
    });
    if (!ok) return std::nullopt;
    for (int& cell : c)
        if (cell == -1) cell = 0;
    return c;
}

}  // namespace

std::optional<SignedOffsets> jump_offsets_signed(const IncidencePair& pair) {
    if (auto c = offsets_with_step(pair, pair.par.q)) return SignedOffsets{*c, 1};
    if (auto c = offsets_with_step(pair, -pair.par.q)) return SignedOffsets{*c, -1};
    return std::nullopt;
}

IncidencePair normalize_gauge_signed(const IncidencePair& pair) {
    auto so = jump_offsets_signed(pair);
    if (!so) throw std::invalid_argument("gauge: jump rule violated");
    const auto& p = pair.par;
    int qeff = mod(so->step * p.q, p.delta);
    if (p.delta == 1) return pair;
    int qi = inv_mod(qeff == 0 ? 1 : qeff, p.delta);
    std::vector<int> a(p.n1), b(p.n2);
    for (int i = 0; i < p.n1; ++i) a[i] = so->c[i * p.n2];
    for (int j = 0; j < p.n2; ++j) b[j] = mod(-qi * (so->c[j] - a[0]), p.delta);
    IncidencePair out = pair;
    for_each_point(out, [&](PairPoint& pt) {
        pt.s = mod(pt.s - p.n2 * a[pt.i], p.delta * p.n2);
        pt.t = mod(pt.t - p.n1 * b[pt.j], p.delta * p.n1);
    });
    return out;
}

namespace {

void rotate_list_min(std::vector<int>& v) {
    if (v.size() < 2) return;
    std::vector<int> best = v;
    for (size_t r = 1; r < v.size(); ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
    }
    v = best;
}

}  // namespace

IncidencePair normal_form(const IncidencePair& pair) {
    IncidencePair out = normalize_arc_order(normalize_gauge_signed(pair));
    for (auto* orders : {&out.boundary_order1, &out.boundary_order2})
        for (auto& ring : *orders) rotate_list_min(ring);
    // Region specs are regenerated from the geometry so that equal
    // embeddings serialize identically.
    for (int side : {1, 2}) {
        BuiltView bv = build_view(out.project(side));
        if (!bv.usable) throw std::invalid_argument("normal_form: view not buildable");
        RegionSpec spec = region_spec_of(bv.geo);
        auto& slot = side == 1 ? out.regions1 : out.regions2;
        if (spec.empty())
            slot.reset();
        else
            slot = std::move(spec);
    }
    return out;
}

std::string encode_pair(const IncidencePair& p) {
    std::ostringstream os;
    os << p.par.delta << "," << p.par.q << "," << p.par.n1 << "," << p.par.n2 << ";";
    for (int s : p.sign1) os << (s > 0 ? '+' : '-');
    os << ";";
    for (int s : p.sign2) os << (s > 0 ? '+' : '-');
    os << ";";
    for (const auto& a : p.arcs) {
        if (a.boundary)
            os << "b" << a.p0.i << "." << a.p0.s << "." << a.ring1 << "." << a.ring2;
        else
            os << "i" << a.p0.i << "." << a.p0.s << "." << a.p0.t << ":" << a.p1.i << "."
               << a.p1.s << "." << a.p1.t;
        os << "|";
    }
    os << ";";
    for (const auto* orders : {&p.boundary_order1, &p.boundary_order2})
        for (const auto& ring : *orders) {
            for (int a : ring) os << a << ",";
            os << "/";
        }
    os << ";";
    for (const auto* spec : {&p.regions1, &p.regions2}) {
        if (spec->has_value())
            for (const auto& group : **spec) {
                for (const auto& k : group)
                    os << (k.ring >= 0 ? "r" + std::to_string(k.ring)
                                       : std::to_string(k.arc) + "e" + std::to_string(k.end))
                       << ",";
                os << "/";
            }
        os << ";";
    }
    return os.str();
}

IncidencePair sym_rotate1(const IncidencePair& pair) {
    const auto& p = pair.par;
    IncidencePair out = pair;
    for_each_point(out, [&](PairPoint& pt) {
        pt.i = (pt.i + 1) % p.n1;
        pt.t = (pt.t + 1) % (p.delta * p.n1);
    });
    for (int i = 0; i < p.n1; ++i) out.sign1[(i + 1) % p.n1] = pair.sign1[i];
    return out;
}

IncidencePair sym_rotate2(const IncidencePair& pair) {
    const auto& p = pair.par;
    IncidencePair out = pair;
    for_each_point(out, [&](PairPoint& pt) {
        pt.j = (pt.j + 1) % p.n2;
        pt.s = (pt.s + 1) % (p.delta * p.n2);
    });
    for (int j = 0; j < p.n2; ++j) out.sign2[(j + 1) % p.n2] = pair.sign2[j];
    return out;
}

IncidencePair sym_swap_rings1(const IncidencePair& pair) {
    IncidencePair out = pair;
    std::swap(out.boundary_order1[0], out.boundary_order1[1]);
    for (auto& a : out.arcs)
        if (a.boundary) a.ring1 ^= 1;
    if (out.regions1.has_value())
        for (auto& group : *out.regions1)
            for (auto& k : group)
                if (k.ring >= 0) k.ring ^= 1;
    return out;
}

IncidencePair sym_swap_rings2(const IncidencePair& pair) {
    IncidencePair out = pair;
    std::swap(out.boundary_order2[0], out.boundary_order2[1]);
    for (auto& a : out.arcs)
        if (a.boundary) a.ring2 ^= 1;
    if (out.regions2.has_value())
        for (auto& group : *out.regions2)
            for (auto& k : group)
                if (k.ring >= 0) k.ring ^= 1;
    return out;
}

IncidencePair sym_mirror1(const IncidencePair& pair) {
    // Redraw the first annulus with the opposite orientation: signs flip,
    // the drawing mirrors, slot data on the filling torus is untouched.
    IncidencePair out = pair;
    for (int i = 0; i < pair.par.n1; ++i) out.sign1[i] = -pair.sign1[i];
    for (auto& ring : out.boundary_order1) std::reverse(ring.begin(), ring.end());
    if (out.regions1.has_value())
        for (auto& group : *out.regions1)
            for (auto& k : group)
                if (k.arc >= 0) k.end ^= 1;
    return out;
}

IncidencePair sym_mirror2(const IncidencePair& pair) {
    IncidencePair out = pair;
    for (int j = 0; j < pair.par.n2; ++j) out.sign2[j] = -pair.sign2[j];
    for (auto& ring : out.boundary_order2) std::reverse(ring.begin(), ring.end());
    if (out.regions2.has_value())
        for (auto& group : *out.regions2)
            for (auto& k : group)
                if (k.arc >= 0) k.end ^= 1;
    return out;
}

IncidencePair sym_reverse1(const IncidencePair& pair) {
    // Reverse the traversal direction of the first filling solid torus and
    // renumber the dual disks to keep labels reading forward. Both drawings
    // are unchanged; the jump rule reverses its step.
    const auto& p = pair.par;
    IncidencePair out = pair;
    for_each_point(out, [&](PairPoint& pt) {
        pt.s = mod(-1 - pt.s, p.delta * p.n2);
        pt.j = p.n2 - 1 - pt.j;
    });
    for (int i = 0; i < p.n1; ++i) out.sign1[i] = -pair.sign1[i];
    for (int j = 0; j < p.n2; ++j) out.sign2[p.n2 - 1 - j] = pair.sign2[j];
    return out;
}

IncidencePair sym_reverse2(const IncidencePair& pair) {
    const auto& p = pair.par;
    IncidencePair out = pair;
    for_each_point(out, [&](PairPoint& pt) {
        pt.t = mod(-1 - pt.t, p.delta * p.n1);
        pt.i = p.n1 - 1 - pt.i;
    });
    for (int j = 0; j < p.n2; ++j) out.sign2[j] = -pair.sign2[j];
    for (int i = 0; i < p.n1; ++i) out.sign1[p.n1 - 1 - i] = pair.sign1[i];
    return out;
}

IncidencePair sym_swap_sides(const IncidencePair& pair) {
    if (pair.par.n1 != pair.par.n2)
        throw std::invalid_argument("side swap needs n1 == n2");
    IncidencePair out = pair;
    std::swap(out.par.n1, out.par.n2);
    std::swap(out.sign1, out.sign2);
    std::swap(out.boundary_order1, out.boundary_order2);
    std::swap(out.regions1, out.regions2);
    for (auto& a : out.arcs) {
        std::swap(a.ring1, a.ring2);
        for (PairPoint* pt : {&a.p0, &a.p1}) {
            std::swap(pt->i, pt->j);
            std::swap(pt->s, pt->t);
        }
    }
    return out;
}

std::vector<IncidencePair> symmetry_orbit(const IncidencePair& pair) {
    std::vector<IncidencePair> orbit;
    std::set<std::string> seen;
    std::vector<IncidencePair> queue{normal_form(pair)};
    seen.insert(encode_pair(queue[0]));
    while (!queue.empty()) {
        IncidencePair cur = std::move(queue.back());
        queue.pop_back();
        orbit.push_back(cur);
        std::vector<IncidencePair> nexts;
        nexts.push_back(sym_rotate1(cur));
        nexts.push_back(sym_rotate2(cur));
        nexts.push_back(sym_swap_rings1(cur));
        nexts.push_back(sym_swap_rings2(cur));
        nexts.push_back(sym_mirror1(cur));
        nexts.push_back(sym_mirror2(cur));
        nexts.push_back(sym_reverse1(cur));
        nexts.push_back(sym_reverse2(cur));
        if (cur.par.n1 == cur.par.n2) nexts.push_back(sym_swap_sides(cur));
        for (auto& nx : nexts) {
            IncidencePair nf = normal_form(nx);
            std::string code = encode_pair(nf);
            if (seen.insert(code).second) queue.push_back(std::move(nf));
        }
    }
    return orbit;
}

std::string canonicalize(const IncidencePair& pair) {
    std::string best;
    for (const auto& st : symmetry_orbit(pair)) {
        if (!offsets_with_step(st, st.par.q).has_value()) continue;  // mirrored reading
        std::string code = encode_pair(st);
        if (best.empty() || code < best) best = code;
    }
    if (best.empty()) throw std::logic_error("orbit has no forward-reading state");
    return best;
}

}  // namespace anng
