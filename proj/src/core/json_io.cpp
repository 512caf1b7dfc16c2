#include "json_io.hpp"

#include <stdexcept>

namespace anng {

using nlohmann::json;

namespace {

json end_to_json(const PairPoint& pt, int side) {
    if (side == 1) return json{{"v", pt.i + 1}, {"slot", pt.s}};
    return json{{"v", pt.j + 1}, {"slot", pt.t}};
}

json key_to_json(const WalkKey& k) {
    if (k.ring >= 0) return json{{"ring", k.ring}};
    return json{{"arc", k.arc}, {"end", k.end}};
}

WalkKey key_from_json(const json& j) {
    if (j.contains("ring")) return WalkKey::ring_circle(j.at("ring").get<int>());
    return WalkKey::arc_side(j.at("arc").get<int>(), j.at("end").get<int>());
}

json regions_to_json(const RegionSpec& spec) {
    json out = json::array();
    for (const auto& group : spec) {
        json g = json::array();
        for (const auto& k : group) g.push_back(key_to_json(k));
        out.push_back(g);
    }
    return out;
}

RegionSpec regions_from_json(const json& j) {
    RegionSpec spec;
    for (const auto& g : j) {
        std::vector<WalkKey> group;
        for (const auto& k : g) group.push_back(key_from_json(k));
        spec.push_back(std::move(group));
    }
    return spec;
}

}  // namespace

json pair_to_json(const IncidencePair& p) {
    json j;
    j["params"] = {{"delta", p.par.delta}, {"n1", p.par.n1}, {"n2", p.par.n2}, {"q", p.par.q}};
    json arcs = json::array();
    for (int a = 0; a < static_cast<int>(p.arcs.size()); ++a) {
        const auto& e = p.arcs[a];
        json ja;
        ja["id"] = a;
        ja["kind"] = e.boundary ? "boundary" : "interior";
        json g1 = json::array(), g2 = json::array();
        g1.push_back(end_to_json(e.p0, 1));
        g2.push_back(end_to_json(e.p0, 2));
        if (e.boundary) {
            g1.push_back(json{{"ring", e.ring1}});
            g2.push_back(json{{"ring", e.ring2}});
        } else {
            g1.push_back(end_to_json(e.p1, 1));
            g2.push_back(end_to_json(e.p1, 2));
        }
        ja["ends"] = {{"g1", g1}, {"g2", g2}};
        arcs.push_back(ja);
    }
    j["arcs"] = arcs;
    j["signs"] = {{"g1", p.sign1}, {"g2", p.sign2}};
    j["boundary_orders"] = {
        {"g1", json::array({p.boundary_order1[0], p.boundary_order1[1]})},
        {"g2", json::array({p.boundary_order2[0], p.boundary_order2[1]})}};
    if (p.regions1.has_value() || p.regions2.has_value()) {
        json r;
        if (p.regions1.has_value()) r["g1"] = regions_to_json(*p.regions1);
        if (p.regions2.has_value()) r["g2"] = regions_to_json(*p.regions2);
        j["regions"] = r;
    }
    return j;
}

IncidencePair pair_from_json(const json& j) {
    IncidencePair p;
    const auto& par = j.at("params");
    p.par.delta = par.at("delta").get<int>();
    p.par.n1 = par.at("n1").get<int>();
    p.par.n2 = par.at("n2").get<int>();
    p.par.q = par.at("q").get<int>();
    p.sign1 = j.at("signs").at("g1").get<std::vector<int>>();
    p.sign2 = j.at("signs").at("g2").get<std::vector<int>>();
    const auto& arcs = j.at("arcs");
    p.arcs.resize(arcs.size());
    for (const auto& ja : arcs) {
        int id = ja.at("id").get<int>();
        if (id < 0 || id >= static_cast<int>(p.arcs.size()))
            throw std::invalid_argument("arc ids must be 0..count-1");
        PairArc e;
        e.boundary = ja.at("kind").get<std::string>() == "boundary";
        const auto& g1 = ja.at("ends").at("g1");
        const auto& g2 = ja.at("ends").at("g2");
        auto read_point = [&](const json& e1, const json& e2) {
            PairPoint pt;
            pt.i = e1.at("v").get<int>() - 1;
            pt.s = e1.at("slot").get<int>();
            pt.j = e2.at("v").get<int>() - 1;
            pt.t = e2.at("slot").get<int>();
            return pt;
        };
        e.p0 = read_point(g1.at(0), g2.at(0));
        if (e.boundary) {
            e.ring1 = g1.at(1).at("ring").get<int>();
            e.ring2 = g2.at(1).at("ring").get<int>();
        } else {
            e.p1 = read_point(g1.at(1), g2.at(1));
        }
        p.arcs[id] = e;
    }
    auto read_orders = [&](const json& side) {
        std::array<std::vector<int>, 2> out;
        out[0] = side.at(0).get<std::vector<int>>();
        out[1] = side.at(1).get<std::vector<int>>();
        return out;
    };
    p.boundary_order1 = read_orders(j.at("boundary_orders").at("g1"));
    p.boundary_order2 = read_orders(j.at("boundary_orders").at("g2"));
    if (j.contains("regions")) {
        const auto& r = j.at("regions");
        if (r.contains("g1")) p.regions1 = regions_from_json(r.at("g1"));
        if (r.contains("g2")) p.regions2 = regions_from_json(r.at("g2"));
    }
    return p;
}

json view_to_json(const AnnulusGraphView& v) {
    json j;
    j["side"] = v.side;
    j["delta"] = v.delta;
    j["n_self"] = v.n_self;
    j["n_other"] = v.n_other;
    // Slot table per vertex.
    std::vector<std::vector<int>> slot_arc(v.n_self,
                                           std::vector<int>(v.slots_per_vertex(), -1));
    for (int a = 0; a < static_cast<int>(v.arcs.size()); ++a) {
        const auto& e = v.arcs[a];
        slot_arc[e.v0.vertex][e.v0.slot] = a;
        if (!e.boundary) slot_arc[e.v1.vertex][e.v1.slot] = a;
    }
    json verts = json::array();
    for (int u = 0; u < v.n_self; ++u) {
        json jv;
        jv["index"] = u + 1;
        jv["sign"] = v.sign[u];
        json slots = json::array();
        for (int s = 0; s < v.slots_per_vertex(); ++s)
            slots.push_back(json{{"label", v.label_of_slot(s)}, {"arc", slot_arc[u][s]}});
        jv["slots"] = slots;
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    j["boundary"] = json::array({v.boundary_order[0], v.boundary_order[1]});
    if (v.regions.has_value()) j["regions"] = regions_to_json(*v.regions);
    return j;
}

AnnulusGraphView view_from_json(const json& j) {
    AnnulusGraphView v;
    v.side = j.at("side").get<int>();
    v.delta = j.at("delta").get<int>();
    v.n_self = j.at("n_self").get<int>();
    v.n_other = j.at("n_other").get<int>();
    int max_arc = -1;
    for (const auto& jv : j.at("vertices"))
        for (const auto& js : jv.at("slots")) max_arc = std::max(max_arc, js.at("arc").get<int>());
    v.arcs.resize(max_arc + 1);
    std::vector<int> ends_seen(max_arc + 1, 0);
    v.sign.assign(v.n_self, 1);
    for (const auto& jv : j.at("vertices")) {
        int u = jv.at("index").get<int>() - 1;
        if (u < 0 || u >= v.n_self) throw std::invalid_argument("vertex index range");
        v.sign[u] = jv.at("sign").get<int>();
        const auto& slots = jv.at("slots");
        for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
            int a = slots[s].at("arc").get<int>();
            if (a < 0) throw std::invalid_argument("slot without arc");
            if (ends_seen[a] == 0)
                v.arcs[a].v0 = {u, s};
            else
                v.arcs[a].v1 = {u, s};
            ends_seen[a]++;
        }
    }
    v.boundary_order[0] = j.at("boundary").at(0).get<std::vector<int>>();
    v.boundary_order[1] = j.at("boundary").at(1).get<std::vector<int>>();
    for (int r = 0; r < 2; ++r)
        for (int a : v.boundary_order[r]) {
            if (a < 0 || a > max_arc || ends_seen[a] != 1)
                throw std::invalid_argument("boundary arc mismatch");
            v.arcs[a].boundary = true;
            v.arcs[a].ring = r;
        }
    if (j.contains("regions")) v.regions = regions_from_json(j.at("regions"));
    return v;
}

std::string dump_pretty(const json& j) { return j.dump(2) + "\n"; }

}  // namespace anng
