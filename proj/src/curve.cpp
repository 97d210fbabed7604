#include "galcov/curve.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace galcov {

void CurveCombinatorics::validate() const {
    std::set<std::string> ids;
    for (const auto& c : components) {
        if (c.id.empty()) throw std::invalid_argument("curve: empty component id");
        if (!ids.insert(c.id).second)
            throw std::invalid_argument("curve: duplicate id '" + c.id + "'");
        if (c.degree < 1)
            throw std::invalid_argument("curve: component '" + c.id + "' has degree < 1");
    }
    for (const auto& p : points) {
        if (p.id.empty()) throw std::invalid_argument("curve: empty point id");
        if (!ids.insert(p.id).second)
            throw std::invalid_argument("curve: duplicate id '" + p.id + "'");
        if (p.branches.empty())
            throw std::invalid_argument("curve: point '" + p.id + "' has no branches");
        for (const auto& b : p.branches) {
            bool found = false;
            for (const auto& c : components) found = found || c.id == b.component;
            if (!found)
                throw std::invalid_argument("curve: point '" + p.id +
                                            "' references unknown component '" +
                                            b.component + "'");
        }
    }
}

IncidenceGraph incidence_graph(const CurveCombinatorics& cc) {
    cc.validate();
    IncidenceGraph ig;
    for (const auto& p : cc.points) {
        ig.graph.add_vertex(p.id);
        ig.vertex_class.push_back(0);
    }
    for (const auto& c : cc.components) {
        ig.graph.add_vertex(c.id);
        ig.vertex_class.push_back(1);
    }
    for (const auto& p : cc.points)
        for (std::size_t k = 0; k < p.branches.size(); ++k)
            ig.graph.add_edge(p.id + "#" + std::to_string(k), p.id,
                              p.branches[k].component);
    return ig;
}

Cover build_splitting_cover(const CurveCombinatorics& cc, const CyclicSplittingData& d) {
    cc.validate();
    if (d.m < 1) throw std::invalid_argument("splitting data: m must be >= 1");
    for (const auto& c : cc.components) {
        auto it = d.s.find(c.id);
        if (it == d.s.end())
            throw std::invalid_argument("splitting data: no s value for component '" +
                                        c.id + "'");
        if (it->second < 1 || d.m % it->second != 0)
            throw std::invalid_argument("splitting data: s for '" + c.id +
                                        "' must be a positive divisor of m");
    }
    for (const auto& p : cc.points) {
        auto it = d.offsets.find(p.id);
        if (it == d.offsets.end())
            throw std::invalid_argument("splitting data: no offsets for point '" + p.id + "'");
        if (it->second.size() != p.branches.size())
            throw std::invalid_argument("splitting data: point '" + p.id + "' needs " +
                                        std::to_string(p.branches.size()) + " offsets");
    }

    Cover cov;
    cov.group = make_cyclic(d.m);
    IncidenceGraph ig = incidence_graph(cc);
    cov.base = std::move(ig.graph);

    // total graph and projection; vertex order mirrors the base (point fibers
    // first, then component fibers)
    for (const auto& p : cc.points)
        for (int j = 0; j < d.m; ++j)
            cov.total.add_vertex(p.id + "@" + std::to_string(j));
    for (const auto& c : cc.components)
        for (int k = 0; k < d.s.at(c.id); ++k)
            cov.total.add_vertex(c.id + "@" + std::to_string(k));
    for (const auto& p : cc.points) {
        for (std::size_t k = 0; k < p.branches.size(); ++k) {
            const std::string& comp = p.branches[k].component;
            const int sc = d.s.at(comp);
            const int o = d.offsets.at(p.id)[k];
            for (int j = 0; j < d.m; ++j) {
                const int target = (((j - o) % sc) + sc) % sc;
                cov.total.add_edge(p.id + "#" + std::to_string(k) + "@" + std::to_string(j),
                                   p.id + "@" + std::to_string(j),
                                   comp + "@" + std::to_string(target));
            }
        }
    }

    cov.phi.v.resize(cov.total.vertex_count());
    for (int v = 0; v < cov.total.vertex_count(); ++v) {
        const std::string& id = cov.total.vertex_id(v);
        cov.phi.v[v] = cov.base.require_vertex(id.substr(0, id.rfind('@')));
    }
    cov.phi.e.resize(cov.total.edge_count());
    for (int e = 0; e < cov.total.edge_count(); ++e) {
        const std::string& id = cov.total.edge_id(e);
        cov.phi.e[e] = cov.base.require_edge(id.substr(0, id.rfind('@')));
    }

    // generator [1]: advance every fiber index
    if (d.m >= 1) {
        GraphMap gen;
        gen.v.resize(cov.total.vertex_count());
        for (const auto& p : cc.points)
            for (int j = 0; j < d.m; ++j)
                gen.v[cov.total.require_vertex(p.id + "@" + std::to_string(j))] =
                    cov.total.require_vertex(p.id + "@" + std::to_string((j + 1) % d.m));
        for (const auto& c : cc.components) {
            const int sc = d.s.at(c.id);
            for (int k = 0; k < sc; ++k)
                gen.v[cov.total.require_vertex(c.id + "@" + std::to_string(k))] =
                    cov.total.require_vertex(c.id + "@" + std::to_string((k + 1) % sc));
        }
        gen.e.resize(cov.total.edge_count());
        for (const auto& p : cc.points)
            for (std::size_t k = 0; k < p.branches.size(); ++k)
                for (int j = 0; j < d.m; ++j) {
                    const std::string stem = p.id + "#" + std::to_string(k) + "@";
                    gen.e[cov.total.require_edge(stem + std::to_string(j))] =
                        cov.total.require_edge(stem + std::to_string((j + 1) % d.m));
                }
        cov.action.assign(cov.group->order(), std::nullopt);
        cov.action[cov.group->identity()] = identity_map(cov.total);
        if (d.m > 1) cov.action[1] = std::move(gen);
    }
    const auto problems = complete_action(cov);
    if (!problems.empty())
        throw std::logic_error("build_splitting_cover: " + problems.front());
    return cov;
}

int splitting_number(const Cover& c, std::string_view component_id) {
    const int bv = c.base.require_vertex(component_id);
    return static_cast<int>(fiber_vertices(c, bv).size());
}

int connected_number(const Cover& c) {
    const int n = c.total.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < c.total.edge_count(); ++e)
        parent[find(c.total.edge_init(e))] = find(c.total.edge_term(e));
    std::set<int> roots;
    for (int v = 0; v < n; ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

std::vector<int> pull_back_classes(const Cover& c, const std::vector<int>& base_classes) {
    if (static_cast<int>(base_classes.size()) != c.base.vertex_count())
        throw std::invalid_argument("pull_back_classes: class vector size mismatch");
    std::vector<int> out(c.total.vertex_count());
    for (int v = 0; v < c.total.vertex_count(); ++v) out[v] = base_classes[c.phi.v[v]];
    return out;
}

}  // namespace galcov
