#include "galcov/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace galcov {

int Multigraph::add_vertex(std::string id) {
    if (id.empty()) throw std::invalid_argument("Multigraph: empty vertex id");
    auto [it, fresh] = vertex_lookup_.emplace(id, vertex_count());
    if (!fresh) throw std::invalid_argument("Multigraph: duplicate vertex id '" + id + "'");
    vertex_ids_.push_back(std::move(id));
    return it->second;
}

int Multigraph::add_edge(std::string id, std::string_view init_id, std::string_view term_id) {
    return add_edge_idx(std::move(id), require_vertex(init_id), require_vertex(term_id));
}

int Multigraph::add_edge_idx(std::string id, int init, int term) {
    if (id.empty()) throw std::invalid_argument("Multigraph: empty edge id");
    if (init < 0 || init >= vertex_count() || term < 0 || term >= vertex_count())
        throw std::invalid_argument("Multigraph: edge '" + id + "' has bad endpoint");
    auto [it, fresh] = edge_lookup_.emplace(id, edge_count());
    if (!fresh) throw std::invalid_argument("Multigraph: duplicate edge id '" + id + "'");
    edges_.push_back(Edge{std::move(id), init, term});
    return it->second;
}

std::optional<int> Multigraph::vertex_index(std::string_view id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Multigraph::edge_index(std::string_view id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

int Multigraph::require_vertex(std::string_view id) const {
    auto v = vertex_index(id);
    if (!v) throw std::invalid_argument("Multigraph: unknown vertex '" + std::string(id) + "'");
    return *v;
}

int Multigraph::require_edge(std::string_view id) const {
    auto e = edge_index(id);
    if (!e) throw std::invalid_argument("Multigraph: unknown edge '" + std::string(id) + "'");
    return *e;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) {
        if (e.init == v) ++d;
        if (e.term == v) ++d;
    }
    return d;
}

Walk Walk::make(const Multigraph& g, int start, std::vector<WalkStep> steps) {
    if (start < 0 || start >= g.vertex_count())
        throw std::invalid_argument("Walk: start vertex out of range");
    Walk w;
    w.graph_ = &g;
    w.vertices_.reserve(steps.size() + 1);
    w.vertices_.push_back(start);
    int cur = start;
    for (const WalkStep& s : steps) {
        if (s.edge < 0 || s.edge >= g.edge_count())
            throw std::invalid_argument("Walk: edge index out of range");
        const int from = s.forward ? g.edge_init(s.edge) : g.edge_term(s.edge);
        const int to = s.forward ? g.edge_term(s.edge) : g.edge_init(s.edge);
        if (from != cur)
            throw std::invalid_argument("Walk: step over '" + g.edge_id(s.edge) +
                                        "' does not continue from '" + g.vertex_id(cur) + "'");
        cur = to;
        w.vertices_.push_back(cur);
    }
    w.steps_ = std::move(steps);
    return w;
}

bool Walk::simple_closed() const {
    const int n = length();
    if (n < 1 || !closed()) return false;
    std::set<int> vs(vertices_.begin(), vertices_.end() - 1);
    if (static_cast<int>(vs.size()) != n) return false;
    std::set<int> es;
    for (const WalkStep& s : steps_) es.insert(s.edge);
    return static_cast<int>(es.size()) == n;
}

Walk inverse_walk(const Walk& w) {
    std::vector<WalkStep> steps(w.steps().rbegin(), w.steps().rend());
    for (WalkStep& s : steps) s.forward = !s.forward;
    return Walk::make(w.graph(), w.end(), std::move(steps));
}

Walk concat_walks(const Walk& a, const Walk& b) {
    if (&a.graph() != &b.graph())
        throw std::invalid_argument("concat_walks: walks live on different graphs");
    if (a.end() != b.start())
        throw std::invalid_argument("concat_walks: second walk does not start where the first ends");
    std::vector<WalkStep> steps = a.steps();
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return Walk::make(a.graph(), a.start(), std::move(steps));
}

Walk shift_walk(const Walk& w, int j) {
    if (!w.closed()) throw std::invalid_argument("shift_walk: walk is not closed");
    const int n = w.length();
    if (n == 0) return w;
    const int jbar = ((j % n) + n) % n;
    if (jbar == 0) return w;
    std::vector<WalkStep> steps(w.steps().begin() + jbar, w.steps().end());
    steps.insert(steps.end(), w.steps().begin(), w.steps().begin() + jbar);
    return Walk::make(w.graph(), w.vertex(jbar), std::move(steps));
}

std::vector<Walk> enumerate_simple_closed_walks(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<WalkStep>> leaving(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        leaving[g.edge_init(e)].push_back(WalkStep{e, true});
        leaving[g.edge_term(e)].push_back(WalkStep{e, false});
    }
    for (auto& l : leaving) std::sort(l.begin(), l.end());

    std::vector<Walk> out;
    std::vector<bool> on_path(n, false);
    std::vector<bool> edge_used(g.edge_count(), false);
    std::vector<WalkStep> path;
    int start = 0;

    // Extends the current vertex-simple path; a step back to the start closes
    // a walk (recorded, not extended further).
    std::function<void(int)> dfs = [&](int cur) {
        for (const WalkStep& s : leaving[cur]) {
            if (edge_used[s.edge]) continue;
            const int to = s.forward ? g.edge_term(s.edge) : g.edge_init(s.edge);
            if (to == start) {
                path.push_back(s);
                out.push_back(Walk::make(g, start, path));
                path.pop_back();
            } else if (!on_path[to]) {
                path.push_back(s);
                on_path[to] = true;
                edge_used[s.edge] = true;
                dfs(to);
                edge_used[s.edge] = false;
                on_path[to] = false;
                path.pop_back();
            }
        }
    };

    for (start = 0; start < n; ++start) {
        on_path[start] = true;
        dfs(start);
        on_path[start] = false;
    }

    std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.start() != b.start()) return a.start() < b.start();
        return a.steps() < b.steps();
    });
    return out;
}

GraphMap identity_map(const Multigraph& g) {
    GraphMap m;
    m.v.resize(g.vertex_count());
    m.e.resize(g.edge_count());
    for (int i = 0; i < g.vertex_count(); ++i) m.v[i] = i;
    for (int i = 0; i < g.edge_count(); ++i) m.e[i] = i;
    return m;
}

GraphMap compose_maps(const GraphMap& outer, const GraphMap& inner) {
    GraphMap m;
    m.v.reserve(inner.v.size());
    m.e.reserve(inner.e.size());
    for (int x : inner.v) m.v.push_back(outer.v.at(x));
    for (int x : inner.e) m.e.push_back(outer.e.at(x));
    return m;
}

GraphMap invert_map(const Multigraph& src, const Multigraph& dst, const GraphMap& m) {
    if (!is_bijective_map(src, dst, m))
        throw std::invalid_argument("invert_map: map is not bijective");
    GraphMap inv;
    inv.v.assign(dst.vertex_count(), -1);
    inv.e.assign(dst.edge_count(), -1);
    for (int x = 0; x < src.vertex_count(); ++x) inv.v[m.v[x]] = x;
    for (int x = 0; x < src.edge_count(); ++x) inv.e[m.e[x]] = x;
    return inv;
}

bool is_graph_map(const Multigraph& src, const Multigraph& dst, const GraphMap& m) {
    if (static_cast<int>(m.v.size()) != src.vertex_count()) return false;
    if (static_cast<int>(m.e.size()) != src.edge_count()) return false;
    for (int x : m.v)
        if (x < 0 || x >= dst.vertex_count()) return false;
    for (int x : m.e)
        if (x < 0 || x >= dst.edge_count()) return false;
    for (int e = 0; e < src.edge_count(); ++e) {
        const int a = m.v[src.edge_init(e)], b = m.v[src.edge_term(e)];
        const int c = dst.edge_init(m.e[e]), d = dst.edge_term(m.e[e]);
        if (!((a == c && b == d) || (a == d && b == c))) return false;
    }
    return true;
}

bool preserves_directions(const Multigraph& src, const Multigraph& dst, const GraphMap& m) {
    if (!is_graph_map(src, dst, m)) return false;
    for (int e = 0; e < src.edge_count(); ++e) {
        if (m.v[src.edge_init(e)] != dst.edge_init(m.e[e])) return false;
        if (m.v[src.edge_term(e)] != dst.edge_term(m.e[e])) return false;
    }
    return true;
}

bool is_bijective_map(const Multigraph& src, const Multigraph& dst, const GraphMap& m) {
    if (src.vertex_count() != dst.vertex_count()) return false;
    if (src.edge_count() != dst.edge_count()) return false;
    if (static_cast<int>(m.v.size()) != src.vertex_count()) return false;
    if (static_cast<int>(m.e.size()) != src.edge_count()) return false;
    std::vector<bool> hv(dst.vertex_count(), false), he(dst.edge_count(), false);
    for (int x : m.v) {
        if (x < 0 || x >= dst.vertex_count() || hv[x]) return false;
        hv[x] = true;
    }
    for (int x : m.e) {
        if (x < 0 || x >= dst.edge_count() || he[x]) return false;
        he[x] = true;
    }
    return true;
}

Walk map_walk(const GraphMap& m, const Walk& w, const Multigraph& dst) {
    const Multigraph& src = w.graph();
    std::vector<WalkStep> steps;
    steps.reserve(w.steps().size());
    for (const WalkStep& s : w.steps()) {
        const int e2 = m.e.at(s.edge);
        const bool same_orientation = dst.edge_init(e2) == m.v.at(src.edge_init(s.edge)) &&
                                      dst.edge_term(e2) == m.v.at(src.edge_term(s.edge));
        steps.push_back(WalkStep{e2, same_orientation ? s.forward : !s.forward});
    }
    return Walk::make(dst, m.v.at(w.start()), std::move(steps));
}

}  // namespace galcov
