#include "galcov/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace galcov {

namespace {

// Multiplicity of edges between each unordered vertex pair (loops keyed by
// (v,v) and counted once per loop edge).
std::map<std::pair<int, int>, std::vector<int>> edge_groups(const Multigraph& g) {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.edge_init(e), b = g.edge_term(e);
        if (a > b) std::swap(a, b);
        groups[{a, b}].push_back(e);
    }
    return groups;
}

struct Search {
    const Multigraph& g1;
    const Multigraph& g2;
    const std::optional<VertexClassConstraint>& classes;
    const std::function<bool(const GraphMap&)>& visit;

    std::vector<int> order;                 // g1 vertices, decreasing degree
    std::vector<int> vimg;                  // g1 vertex -> g2 vertex or -1
    std::vector<bool> used;                 // g2 vertex taken
    std::map<std::pair<int, int>, std::vector<int>> groups1, groups2;
    bool keep_going = true;

    bool compatible(int v, int w) const {
        if (g1.degree(v) != g2.degree(w)) return false;
        if (classes && classes->c1[v] != classes->c2[w]) return false;
        // multiplicities towards already-placed vertices, loops included
        for (auto& [key, edges] : groups1) {
            auto [a, b] = key;
            int other = -1;
            if (a == v) other = b;
            else if (b == v) other = a;
            else continue;
            const int oimg = other == v ? w : vimg[other];
            if (oimg < 0) continue;
            auto [x, y] = std::minmax(w, oimg);
            auto it = groups2.find({x, y});
            const std::size_t have = it == groups2.end() ? 0 : it->second.size();
            if (have != edges.size()) return false;
        }
        return true;
    }

    void assign_edges(std::size_t gi, std::vector<std::pair<std::vector<int>, std::vector<int>>>& asg,
                      GraphMap& m) {
        if (!keep_going) return;
        if (gi == asg.size()) {
            keep_going = visit(m);
            return;
        }
        auto& [src_edges, dst_perm] = asg[gi];
        // dst_perm starts sorted; walk its permutations in lexicographic order
        do {
            for (std::size_t k = 0; k < src_edges.size(); ++k) m.e[src_edges[k]] = dst_perm[k];
            assign_edges(gi + 1, asg, m);
            if (!keep_going) break;
        } while (std::next_permutation(dst_perm.begin(), dst_perm.end()));
        std::sort(dst_perm.begin(), dst_perm.end());
    }

    void emit_maps() {
        // vertices fixed; enumerate all edge bijections group by group
        std::vector<std::pair<std::vector<int>, std::vector<int>>> asg;
        for (auto& [key, edges] : groups1) {
            auto [x, y] = std::minmax(vimg[key.first], vimg[key.second]);
            auto it = groups2.find({x, y});
            if (it == groups2.end() || it->second.size() != edges.size()) return;  // defensive
            asg.emplace_back(edges, it->second);
        }
        GraphMap m;
        m.v = vimg;
        m.e.assign(g1.edge_count(), -1);
        assign_edges(0, asg, m);
    }

    void place(std::size_t pos) {
        if (!keep_going) return;
        if (pos == order.size()) {
            emit_maps();
            return;
        }
        const int v = order[pos];
        for (int w = 0; w < g2.vertex_count() && keep_going; ++w) {
            if (used[w] || !compatible(v, w)) continue;
            vimg[v] = w;
            used[w] = true;
            place(pos + 1);
            used[w] = false;
            vimg[v] = -1;
        }
    }
};

}  // namespace

bool for_each_isomorphism(const Multigraph& g1, const Multigraph& g2,
                          const std::optional<VertexClassConstraint>& classes,
                          const std::function<bool(const GraphMap&)>& visit) {
    if (classes) {
        if (static_cast<int>(classes->c1.size()) != g1.vertex_count() ||
            static_cast<int>(classes->c2.size()) != g2.vertex_count())
            throw std::invalid_argument("for_each_isomorphism: class vector size mismatch");
    }
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return true;
    {
        auto degs = [](const Multigraph& g) {
            std::vector<int> d(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
            std::sort(d.begin(), d.end());
            return d;
        };
        if (degs(g1) != degs(g2)) return true;
    }
    if (classes) {
        std::map<int, int> n1, n2;
        for (int c : classes->c1) ++n1[c];
        for (int c : classes->c2) ++n2[c];
        if (n1 != n2) return true;
    }

    Search s{g1, g2, classes, visit};
    s.order.resize(g1.vertex_count());
    for (int v = 0; v < g1.vertex_count(); ++v) s.order[v] = v;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return g1.degree(a) > g1.degree(b); });
    s.vimg.assign(g1.vertex_count(), -1);
    s.used.assign(g2.vertex_count(), false);
    s.groups1 = edge_groups(g1);
    s.groups2 = edge_groups(g2);
    s.place(0);
    return s.keep_going;
}

std::vector<GraphMap> isomorphisms(const Multigraph& g1, const Multigraph& g2,
                                   const std::optional<VertexClassConstraint>& classes) {
    std::vector<GraphMap> out;
    for_each_isomorphism(g1, g2, classes, [&](const GraphMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::optional<GraphMap> first_isomorphism(const Multigraph& g1, const Multigraph& g2,
                                          const std::optional<VertexClassConstraint>& classes) {
    std::optional<GraphMap> found;
    for_each_isomorphism(g1, g2, classes, [&](const GraphMap& m) {
        found = m;
        return false;
    });
    return found;
}

}  // namespace galcov
