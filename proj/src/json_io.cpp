#include "galcov/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace galcov {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

double num_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
    return v;
}

const json& object_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_object()) fail(std::string("field '") + key + "' must be an object");
    return v;
}

// {"vertices":{src:dst},"edges":{src:dst}}; every src item must be mapped.
GraphMap graph_map_from_json(const json& j, const Multigraph& src, const Multigraph& dst,
                             const char* what) {
    GraphMap m;
    m.v.assign(src.vertex_count(), -1);
    m.e.assign(src.edge_count(), -1);
    for (const auto& [key, value] : object_field(j, "vertices").items()) {
        auto sv = src.vertex_index(key);
        if (!sv) fail(std::string(what) + ": unknown source vertex '" + key + "'");
        if (!value.is_string()) fail(std::string(what) + ": image of '" + key + "' must be a string");
        auto dv = dst.vertex_index(value.get<std::string>());
        if (!dv) fail(std::string(what) + ": unknown image vertex '" + value.get<std::string>() + "'");
        m.v[*sv] = *dv;
    }
    for (const auto& [key, value] : object_field(j, "edges").items()) {
        auto se = src.edge_index(key);
        if (!se) fail(std::string(what) + ": unknown source edge '" + key + "'");
        if (!value.is_string()) fail(std::string(what) + ": image of '" + key + "' must be a string");
        auto de = dst.edge_index(value.get<std::string>());
        if (!de) fail(std::string(what) + ": unknown image edge '" + value.get<std::string>() + "'");
        m.e[*se] = *de;
    }
    for (int v = 0; v < src.vertex_count(); ++v)
        if (m.v[v] < 0) fail(std::string(what) + ": vertex '" + src.vertex_id(v) + "' has no image");
    for (int e = 0; e < src.edge_count(); ++e)
        if (m.e[e] < 0) fail(std::string(what) + ": edge '" + src.edge_id(e) + "' has no image");
    return m;
}

json graph_map_to_json(const GraphMap& m, const Multigraph& src, const Multigraph& dst) {
    json vs = json::object(), es = json::object();
    for (int v = 0; v < src.vertex_count(); ++v) vs[src.vertex_id(v)] = dst.vertex_id(m.v[v]);
    for (int e = 0; e < src.edge_count(); ++e) es[src.edge_id(e)] = dst.edge_id(m.e[e]);
    return json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

json complex_to_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const json& j) {
    return {num_field(j, "re"), num_field(j, "im")};
}

}  // namespace

GroupPtr group_from_json(const json& j) {
    const std::string kind = str_field(j, "kind");
    if (kind == "cyclic") return make_cyclic(int_field(j, "m"));
    if (kind == "symmetric") return make_symmetric(int_field(j, "n"));
    if (kind == "table") {
        std::vector<std::string> labels;
        for (const json& l : array_field(j, "labels")) {
            if (!l.is_string()) fail("group labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        std::vector<std::vector<int>> table;
        for (const json& row : array_field(j, "table")) {
            if (!row.is_array()) fail("group table rows must be arrays");
            std::vector<int> r;
            for (const json& x : row) {
                if (!x.is_number_integer()) fail("group table entries must be integers");
                r.push_back(x.get<int>());
            }
            table.push_back(std::move(r));
        }
        return make_from_table(std::move(labels), std::move(table), int_field(j, "identity"));
    }
    fail("unknown group kind '" + kind + "'");
}

json group_to_json(const GroupPtr& g) {
    if (!g) fail("group_to_json: no group");
    const int n = g->order();
    if (g->same_structure(*make_cyclic(n))) return json{{"kind", "cyclic"}, {"m", n}};
    for (int k = 1, f = 1; k <= 6; f *= ++k)
        if (f == n && g->same_structure(*make_symmetric(k)))
            return json{{"kind", "symmetric"}, {"n", k}};
    json labels = json::array(), table = json::array();
    for (int i = 0; i < n; ++i) labels.push_back(g->label(i));
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int k = 0; k < n; ++k) row.push_back(g->mul(i, k));
        table.push_back(std::move(row));
    }
    return json{{"kind", "table"},
                {"labels", std::move(labels)},
                {"table", std::move(table)},
                {"identity", g->identity()}};
}

Multigraph graph_from_json(const json& j) {
    Multigraph g;
    for (const json& v : array_field(j, "vertices")) {
        if (!v.is_string()) fail("graph vertices must be strings");
        g.add_vertex(v.get<std::string>());
    }
    for (const json& e : array_field(j, "edges"))
        g.add_edge(str_field(e, "id"), str_field(e, "init"), str_field(e, "term"));
    return g;
}

json graph_to_json(const Multigraph& g) {
    json vs = json::array(), es = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_id(v));
    for (int e = 0; e < g.edge_count(); ++e)
        es.push_back(json{{"id", g.edge_id(e)},
                          {"init", g.vertex_id(g.edge_init(e))},
                          {"term", g.vertex_id(g.edge_term(e))}});
    return json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

Walk walk_from_json(const json& j, const Multigraph& g) {
    const std::string start = str_field(j, "start");
    auto sv = g.vertex_index(start);
    if (!sv) fail("walk start '" + start + "' is not a vertex");
    std::vector<WalkStep> steps;
    for (const json& s : array_field(j, "steps")) {
        const std::string edge = str_field(s, "edge");
        auto e = g.edge_index(edge);
        if (!e) fail("walk step edge '" + edge + "' does not exist");
        const std::string dir = str_field(s, "dir");
        if (dir != "+" && dir != "-") fail("walk step dir must be '+' or '-'");
        steps.push_back({*e, dir == "+"});
    }
    return Walk::make(g, *sv, std::move(steps));
}

json walk_to_json(const Walk& w) {
    const Multigraph& g = w.graph();
    json steps = json::array();
    for (const WalkStep& s : w.steps())
        steps.push_back(json{{"edge", g.edge_id(s.edge)}, {"dir", s.forward ? "+" : "-"}});
    return json{{"start", g.vertex_id(w.start())}, {"steps", std::move(steps)}};
}

Cover cover_from_json(const json& j) {
    Cover c;
    c.group = group_from_json(field(j, "group"));
    c.base = graph_from_json(field(j, "base"));
    c.total = graph_from_json(field(j, "total"));
    c.phi = graph_map_from_json(field(j, "phi"), c.total, c.base, "phi");
    c.action.assign(c.group->order(), std::nullopt);
    for (const auto& [label, value] : object_field(j, "action").items()) {
        auto idx = c.group->index_of(label);
        if (!idx) fail("action lists unknown group element '" + label + "'");
        c.action[*idx] =
            graph_map_from_json(value, c.total, c.total, ("action of " + label).c_str());
    }
    // Close under composition; missing elements are validate_cover's business.
    complete_action(c);
    return c;
}

json cover_to_json(const Cover& c) {
    if (!c.group) fail("cover_to_json: no group");
    json action = json::object();
    for (int g = 0; g < c.group->order(); ++g) {
        if (static_cast<std::size_t>(g) >= c.action.size() || !c.action[g])
            fail("cover_to_json: incomplete action (run complete_action first)");
        action[c.group->label(g)] = graph_map_to_json(*c.action[g], c.total, c.total);
    }
    return json{{"group", group_to_json(c.group)},
                {"base", graph_to_json(c.base)},
                {"total", graph_to_json(c.total)},
                {"phi", graph_map_to_json(c.phi, c.total, c.base)},
                {"action", std::move(action)}};
}

CurveCombinatorics curve_from_json(const json& j) {
    if (j.is_object() && j.contains("curve")) return curve_from_json(j.at("curve"));
    CurveCombinatorics cc;
    for (const json& comp : array_field(j, "components"))
        cc.components.push_back({str_field(comp, "id"), int_field(comp, "degree")});
    for (const json& pt : array_field(j, "points")) {
        CurvePoint p;
        p.id = str_field(pt, "id");
        for (const json& b : array_field(pt, "branches"))
            p.branches.push_back({str_field(b, "component")});
        cc.points.push_back(std::move(p));
    }
    cc.validate();
    return cc;
}

json curve_to_json(const CurveCombinatorics& cc) {
    json comps = json::array(), pts = json::array();
    for (const auto& c : cc.components)
        comps.push_back(json{{"id", c.id}, {"degree", c.degree}});
    for (const auto& p : cc.points) {
        json branches = json::array();
        for (const auto& b : p.branches) branches.push_back(json{{"component", b.component}});
        pts.push_back(json{{"id", p.id}, {"branches", std::move(branches)}});
    }
    return json{{"components", std::move(comps)}, {"points", std::move(pts)}};
}

CyclicSplittingData splitting_data_from_json(const json& j) {
    if (j.is_object() && j.contains("splitting"))
        return splitting_data_from_json(j.at("splitting"));
    CyclicSplittingData d;
    d.m = int_field(j, "m");
    for (const auto& [comp, v] : object_field(j, "s").items()) {
        if (!v.is_number_integer()) fail("splitting data: s values must be integers");
        d.s[comp] = v.get<int>();
    }
    for (const auto& [pt, v] : object_field(j, "offsets").items()) {
        if (!v.is_array()) fail("splitting data: offsets must be arrays");
        std::vector<int> offs;
        for (const json& o : v) {
            if (!o.is_number_integer()) fail("splitting data: offsets must be integers");
            offs.push_back(o.get<int>());
        }
        d.offsets[pt] = std::move(offs);
    }
    return d;
}

json splitting_data_to_json(const CyclicSplittingData& d) {
    json s = json::object(), offsets = json::object();
    for (const auto& [comp, v] : d.s) s[comp] = v;
    for (const auto& [pt, v] : d.offsets) offsets[pt] = v;
    return json{{"m", d.m}, {"s", std::move(s)}, {"offsets", std::move(offsets)}};
}

GroupAutomorphism automorphism_from_json(const json& j, const GroupPtr& g) {
    std::vector<int> images(g->order(), -1);
    for (const auto& [from, to] : object_field(j, "images").items()) {
        auto x = g->index_of(from);
        if (!x) fail("automorphism: unknown element '" + from + "'");
        if (!to.is_string()) fail("automorphism: image of '" + from + "' must be a string");
        auto y = g->index_of(to.get<std::string>());
        if (!y) fail("automorphism: unknown image '" + to.get<std::string>() + "'");
        images[*x] = *y;
    }
    for (int x = 0; x < g->order(); ++x)
        if (images[x] < 0) fail("automorphism: no image for '" + g->label(x) + "'");
    return GroupAutomorphism::make(g, std::move(images));
}

json automorphism_to_json(const GroupAutomorphism& tau) {
    json images = json::object();
    for (int x = 0; x < tau.group->order(); ++x)
        images[tau.group->label(x)] = tau.group->label(tau.images[x]);
    return json{{"images", std::move(images)}};
}

ArtalCoefficients coefficients_from_json(const json& j) {
    const int d = int_field(j, "d");
    const json& parts = array_field(j, "partitions");
    if (parts.size() != 3) fail("coefficients: need exactly three partitions");
    std::vector<Partition> ps;
    for (const json& p : parts) {
        if (!p.is_array()) fail("coefficients: partitions must be arrays of integers");
        std::vector<int> v;
        for (const json& e : p) {
            if (!e.is_number_integer()) fail("coefficients: partition parts must be integers");
            v.push_back(e.get<int>());
        }
        ps.push_back(Partition::of(std::move(v)));
    }
    // The c lists are aligned with the partitions by position, so the file
    // must present the type already in normal-form order; re-sorting here
    // would silently move the twisted family.
    if (partition_compare(ps[0], ps[1]) > 0 || partition_compare(ps[1], ps[2]) > 0)
        fail("coefficients: partitions must be listed in normal-form (ascending) order");

    ArtalCoefficients a;
    a.type = ArtalType::of(d, ps[0], ps[1], ps[2]);
    a.beta = int_field(j, "beta");
    const json& cj = array_field(j, "c");
    if (cj.size() != 3) fail("coefficients: need exactly three coefficient families");
    for (const json& family : cj) {
        if (!family.is_array()) fail("coefficients: c families must be arrays");
        std::vector<std::complex<double>> list;
        for (const json& z : family) list.push_back(complex_from_json(z));
        a.c.push_back(std::move(list));
    }
    a.g0 = CPolynomial(3);
    if (j.contains("g0") && !j["g0"].is_null()) {
        for (const json& t : array_field(j["g0"], "terms")) {
            const json& exp = array_field(t, "exp");
            if (exp.size() != 3) fail("coefficients: g0 exponents must have length 3");
            std::vector<int> e;
            for (const json& x : exp) {
                if (!x.is_number_integer()) fail("coefficients: g0 exponents must be integers");
                e.push_back(x.get<int>());
            }
            a.g0.add_term(std::move(e), {num_field(t, "re"), num_field(t, "im")});
        }
    }
    return a;
}

json coefficients_to_json(const ArtalCoefficients& a) {
    json parts = json::array();
    for (int i = 1; i <= 3; ++i) parts.push_back(a.type.partition(i).parts());
    json c = json::array();
    for (const auto& family : a.c) {
        json list = json::array();
        for (auto z : family) list.push_back(complex_to_json(z));
        c.push_back(std::move(list));
    }
    json terms = json::array();
    for (const auto& [exp, coeff] : a.g0.terms())
        terms.push_back(json{{"exp", exp}, {"re", coeff.real()}, {"im", coeff.imag()}});
    return json{{"d", a.type.degree()},
                {"partitions", std::move(parts)},
                {"beta", a.beta},
                {"c", std::move(c)},
                {"g0", json{{"terms", std::move(terms)}}}};
}

json validation_report_to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& ck : r.checks)
        checks.push_back(json{{"name", ck.name}, {"pass", ck.pass}, {"witness", ck.witness}});
    return json{{"ok", r.ok()}, {"checks", std::move(checks)}};
}

json subset_to_json(const GroupSubset& s) {
    json out = json::array();
    for (const auto& l : s.labels()) out.push_back(l);
    return out;
}

json subset_class_to_json(const SubsetClass& c) {
    auto labels_of = [&](const std::vector<int>& members) {
        json out = json::array();
        for (int x : members) out.push_back(c.group->label(x));
        return out;
    };
    json orbit = json::array();
    for (const auto& members : c.orbit) orbit.push_back(labels_of(members));
    return json{{"canonical", labels_of(c.canonical())}, {"orbit", std::move(orbit)}};
}

json coset_to_json(const CycloCoset& c) {
    return json{{"m", c.m}, {"step", c.step}, {"offset", c.offset}};
}

json artal_type_to_json(const ArtalType& t) {
    json parts = json::array();
    for (int i = 1; i <= 3; ++i) parts.push_back(t.partition(i).parts());
    return json{{"d", t.degree()}, {"partitions", std::move(parts)}};
}

json artal_class_to_json(const ArtalClass& a) {
    const char* ch = a.chirality == Chirality::Plus    ? "plus"
                     : a.chirality == Chirality::Minus ? "minus"
                                                       : "none";
    return json{{"type", artal_type_to_json(a.type)},
                {"beta", a.beta},
                {"alpha", a.alpha},
                {"chirality", ch}};
}

json verdict_to_json(const Verdict& v, const Cover& c1, const Cover& c2) {
    const char* kind = v.kind == Verdict::Kind::Distinguished  ? "distinguished"
                       : v.kind == Verdict::Kind::Equivalent   ? "equivalent"
                                                               : "inconclusive";
    json out{{"verdict", kind}, {"detail", v.detail}};
    if (v.mismatch) {
        json labels = json::array();
        for (const auto& l : v.mismatch->class_labels) labels.push_back(l);
        out["mismatch"] = json{{"length", v.mismatch->length},
                               {"class", std::move(labels)},
                               {"count1", v.mismatch->count1},
                               {"count2", v.mismatch->count2}};
    }
    if (v.witness)
        out["witness"] =
            json{{"theta", graph_map_to_json(v.witness->theta, c1.base, c2.base)},
                 {"theta_tilde", graph_map_to_json(v.witness->theta_tilde, c1.total, c2.total)}};
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail("cannot parse '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail("cannot open '" + path + "' for writing");
    out << dump_json(j);
    if (!out) fail("failed writing '" + path + "'");
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace galcov
