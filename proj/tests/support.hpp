#pragma once

// Shared helpers for the test binaries: fixture paths, seeded randomness,
// random splitting instances, closed point walks with crossing bookkeeping,
// relabeled-equivalent copies of covers, and synthetic coefficient sets.

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galcov/artal.hpp"
#include "galcov/artal_numeric.hpp"
#include "galcov/cover.hpp"
#include "galcov/curve.hpp"
#include "galcov/equivalence.hpp"
#include "galcov/graph.hpp"
#include "galcov/group.hpp"

namespace galcov::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(GALCOV_FIXTURE_DIR) + "/" + name;
}

using Rng = std::mt19937;

inline int pick_int(Rng& rng, int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double pick_unit(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline int pick_divisor(Rng& rng, int m) {
    std::vector<int> divs;
    for (int k = 1; k <= m; ++k)
        if (m % k == 0) divs.push_back(k);
    return divs[pick_int(rng, 0, static_cast<int>(divs.size()) - 1)];
}

template <typename T>
const T& pick_from(Rng& rng, const std::vector<T>& xs) {
    return xs[pick_int(rng, 0, static_cast<int>(xs.size()) - 1)];
}

inline Walk walk_of(const Multigraph& g, const std::string& start,
                    const std::vector<std::pair<std::string, bool>>& steps) {
    std::vector<WalkStep> ws;
    for (const auto& [edge, forward] : steps) ws.push_back({g.require_edge(edge), forward});
    return Walk::make(g, g.require_vertex(start), std::move(ws));
}

inline GroupSubset subset_of_labels(const GroupPtr& g, const std::vector<std::string>& labels) {
    std::vector<int> members;
    for (const auto& l : labels) {
        auto i = g->index_of(l);
        if (!i) throw std::invalid_argument("subset_of_labels: unknown label " + l);
        members.push_back(*i);
    }
    return GroupSubset::of(g, std::move(members));
}

// ---------------------------------------------------------------------------
// Random splitting instances

struct SplittingInstance {
    CurveCombinatorics curve;
    CyclicSplittingData data;
};

// Random curve combinatorics plus splitting data with at most max_base
// vertices in the incidence graph and cyclic order in [2, max_m].  Every
// component receives at least one branch, so the incidence graph has no
// isolated component vertices.
inline SplittingInstance random_splitting_instance(Rng& rng, int max_m, int max_base) {
    SplittingInstance inst;
    int n_comp = pick_int(rng, 1, 3);
    int n_pts = pick_int(rng, std::min(2, max_base - n_comp), max_base - n_comp);

    for (int i = 0; i < n_comp; ++i)
        inst.curve.components.push_back({"C" + std::to_string(i + 1), pick_int(rng, 1, 6)});
    std::vector<bool> hit(n_comp, false);
    for (int i = 0; i < n_pts; ++i) {
        CurvePoint p;
        p.id = "P" + std::to_string(i + 1);
        int n_branches = pick_int(rng, 1, 3);
        for (int b = 0; b < n_branches; ++b) {
            int comp = pick_int(rng, 0, n_comp - 1);
            hit[comp] = true;
            p.branches.push_back({inst.curve.components[comp].id});
        }
        inst.curve.points.push_back(std::move(p));
    }
    // route a branch to any component nothing touched yet
    for (int comp = 0; comp < n_comp; ++comp) {
        if (hit[comp]) continue;
        auto& p = inst.curve.points[pick_int(rng, 0, n_pts - 1)];
        p.branches.push_back({inst.curve.components[comp].id});
    }
    inst.curve.validate();

    inst.data.m = pick_int(rng, 2, max_m);
    for (const auto& c : inst.curve.components) inst.data.s[c.id] = pick_divisor(rng, inst.data.m);
    for (const auto& p : inst.curve.points) {
        std::vector<int> offs;
        for (const auto& b : p.branches) offs.push_back(pick_int(rng, 0, inst.data.s[b.component] - 1));
        inst.data.offsets[p.id] = std::move(offs);
    }
    return inst;
}

// Offset of each branch edge ("P#k") of the incidence graph.
inline std::map<std::string, int> branch_offsets(const CyclicSplittingData& d) {
    std::map<std::string, int> out;
    for (const auto& [point, offs] : d.offsets)
        for (std::size_t k = 0; k < offs.size(); ++k)
            out[point + "#" + std::to_string(k)] = offs[k];
    return out;
}

// ---------------------------------------------------------------------------
// Random closed point walks

// Closed walk on cover.base starting at a point vertex, with the splitting
// number and offset difference (leaving branch minus entering branch) of
// each component crossing in walk order.
struct CrossingWalk {
    Walk walk;
    std::vector<int> s_list;
    std::vector<int> alpha_list;
};

// Wanders `crossings` random point-to-point moves from a point vertex
// (start_at, or a random one when negative) and then closes up along a
// shortest alternating path back to the start.  The return-path crossings
// are recorded too.
inline CrossingWalk random_crossing_walk(Rng& rng, const Cover& c,
                                         const CyclicSplittingData& d, int crossings,
                                         int start_at = -1) {
    const Multigraph& g = c.base;
    auto offsets = branch_offsets(d);

    std::vector<std::vector<int>> out_edges(g.vertex_count());  // forward, point side
    std::vector<std::vector<int>> in_edges(g.vertex_count());   // backward, component side
    for (int e = 0; e < g.edge_count(); ++e) {
        out_edges[g.edge_init(e)].push_back(e);
        in_edges[g.edge_term(e)].push_back(e);
    }
    std::vector<int> points;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!out_edges[v].empty()) points.push_back(v);
    if (points.empty()) throw std::logic_error("random_crossing_walk: no point vertices");

    int start = start_at >= 0 ? start_at : pick_from(rng, points);
    int at = start;
    std::vector<WalkStep> steps;
    std::vector<std::pair<int, int>> pairs;  // (enter edge, leave edge)
    for (int i = 0; i < crossings; ++i) {
        int e1 = pick_from(rng, out_edges[at]);
        int comp = g.edge_term(e1);
        int e2 = pick_from(rng, in_edges[comp]);
        steps.push_back({e1, true});
        steps.push_back({e2, false});
        pairs.emplace_back(e1, e2);
        at = g.edge_init(e2);
    }

    if (at != start) {
        // BFS over point-to-point moves, remembering the move that found
        // each point first.
        std::vector<std::pair<int, int>> via(g.vertex_count(), {-1, -1});
        std::vector<int> parent(g.vertex_count(), -1);
        std::queue<int> q;
        q.push(at);
        parent[at] = at;
        while (!q.empty() && parent[start] < 0) {
            int p = q.front();
            q.pop();
            for (int e1 : out_edges[p])
                for (int e2 : in_edges[g.edge_term(e1)]) {
                    int p2 = g.edge_init(e2);
                    if (parent[p2] >= 0) continue;
                    parent[p2] = p;
                    via[p2] = {e1, e2};
                    q.push(p2);
                }
        }
        if (parent[start] < 0)
            throw std::logic_error("random_crossing_walk: start unreachable");
        std::vector<std::pair<int, int>> back;
        for (int p = start; p != at; p = parent[p]) back.push_back(via[p]);
        std::reverse(back.begin(), back.end());
        for (auto [e1, e2] : back) {
            steps.push_back({e1, true});
            steps.push_back({e2, false});
            pairs.emplace_back(e1, e2);
        }
    }

    CrossingWalk out{Walk::make(g, start, std::move(steps)), {}, {}};
    for (auto [e1, e2] : pairs) {
        const std::string& comp_id = g.vertex_id(g.edge_term(e1));
        out.s_list.push_back(d.s.at(comp_id));
        out.alpha_list.push_back(offsets.at(g.edge_id(e2)) - offsets.at(g.edge_id(e1)));
    }
    return out;
}

// Random closed walk at a given start vertex (not necessarily a point
// vertex of an incidence graph; works on any graph, used for the net
// voltage lemma checks).  Wanders `max_steps` arbitrary steps and walks
// back along a shortest path.
inline Walk random_closed_walk(Rng& rng, const Multigraph& g, int start, int max_steps) {
    std::vector<std::vector<WalkStep>> moves(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        moves[g.edge_init(e)].push_back({e, true});
        moves[g.edge_term(e)].push_back({e, false});
    }
    std::vector<WalkStep> steps;
    int at = start;
    for (int i = 0; i < max_steps; ++i) {
        if (moves[at].empty()) break;
        WalkStep s = pick_from(rng, moves[at]);
        steps.push_back(s);
        at = s.forward ? g.edge_term(s.edge) : g.edge_init(s.edge);
    }
    if (at != start) {
        std::vector<int> parent(g.vertex_count(), -1);
        std::vector<WalkStep> via(g.vertex_count(), WalkStep{-1, true});
        std::queue<int> q;
        q.push(at);
        parent[at] = at;
        while (!q.empty() && parent[start] < 0) {
            int v = q.front();
            q.pop();
            for (WalkStep s : moves[v]) {
                int w = s.forward ? g.edge_term(s.edge) : g.edge_init(s.edge);
                if (parent[w] >= 0) continue;
                parent[w] = v;
                via[w] = s;
                q.push(w);
            }
        }
        if (parent[start] < 0) throw std::logic_error("random_closed_walk: start unreachable");
        std::vector<WalkStep> back;
        for (int v = start; v != at; v = parent[v]) back.push_back(via[v]);
        std::reverse(back.begin(), back.end());
        steps.insert(steps.end(), back.begin(), back.end());
    }
    return Walk::make(g, start, std::move(steps));
}

// ---------------------------------------------------------------------------
// Relabeled-equivalent copies

struct TwistedCopy {
    Cover cover;
    EquivalenceWitness witness;
};

// Fresh cover equivalent to c1 by construction: vertices and edges are
// relabeled (id + suffix) and reordered by random permutations theta /
// theta_tilde, and the action is precomposed with tau^{-1} so that
// theta_tilde(g.x) = tau(g).theta_tilde(x) holds on the nose.
inline TwistedCopy twisted_copy(Rng& rng, const Cover& c1, const GroupAutomorphism& tau,
                                const std::string& suffix) {
    auto perm = [&rng](int n) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        return std::make_pair(order, pos);  // order[new] = old, pos[old] = new
    };
    auto [bv_order, bv_pos] = perm(c1.base.vertex_count());
    auto [be_order, be_pos] = perm(c1.base.edge_count());
    auto [tv_order, tv_pos] = perm(c1.total.vertex_count());
    auto [te_order, te_pos] = perm(c1.total.edge_count());

    auto rebuild = [&suffix](const Multigraph& g, const std::vector<int>& v_order,
                             const std::vector<int>& v_pos, const std::vector<int>& e_order) {
        Multigraph out;
        for (int old : v_order) out.add_vertex(g.vertex_id(old) + suffix);
        for (int old : e_order)
            out.add_edge_idx(g.edge_id(old) + suffix, v_pos[g.edge_init(old)],
                             v_pos[g.edge_term(old)]);
        return out;
    };

    TwistedCopy out;
    out.cover.group = c1.group;
    out.cover.base = rebuild(c1.base, bv_order, bv_pos, be_order);
    out.cover.total = rebuild(c1.total, tv_order, tv_pos, te_order);

    GraphMap phi2;
    phi2.v.resize(c1.total.vertex_count());
    phi2.e.resize(c1.total.edge_count());
    for (int i = 0; i < c1.total.vertex_count(); ++i) phi2.v[i] = bv_pos[c1.phi.v[tv_order[i]]];
    for (int i = 0; i < c1.total.edge_count(); ++i) phi2.e[i] = be_pos[c1.phi.e[te_order[i]]];
    out.cover.phi = std::move(phi2);

    std::vector<int> tau_inv(c1.group->order());
    for (int x = 0; x < c1.group->order(); ++x) tau_inv[tau.images[x]] = x;
    out.cover.action.resize(c1.group->order());
    for (int h = 0; h < c1.group->order(); ++h) {
        const GraphMap& a = *c1.action[tau_inv[h]];
        GraphMap b;
        b.v.resize(a.v.size());
        b.e.resize(a.e.size());
        for (std::size_t i = 0; i < a.v.size(); ++i) b.v[i] = tv_pos[a.v[tv_order[i]]];
        for (std::size_t i = 0; i < a.e.size(); ++i) b.e[i] = te_pos[a.e[te_order[i]]];
        out.cover.action[h] = std::move(b);
    }

    out.witness.theta = GraphMap{bv_pos, be_pos};
    out.witness.theta_tilde = GraphMap{tv_pos, te_pos};
    return out;
}

// ---------------------------------------------------------------------------
// Synthetic coefficient sets

// Coefficient families on the unit circle satisfying the product
// constraints for (type, beta): the last coefficient of each family is
// solved from the target product, and near-collisions are rerolled.
inline std::vector<std::vector<std::complex<double>>> random_coefficients(Rng& rng,
                                                                          const ArtalType& type,
                                                                          int beta) {
    const double two_pi = 8.0 * std::atan(1.0);
    std::vector<std::vector<std::complex<double>>> c;
    for (int i = 1; i <= 3; ++i) {
        std::complex<double> target =
            i == 3 ? root_of_unity(type.degree(), beta * type.mu(3)) : std::complex<double>(1.0);
        std::vector<int> mu = type.mu_parts(i);
        int n = static_cast<int>(mu.size());
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 200)
                throw std::runtime_error("random_coefficients: could not separate family");
            std::vector<std::complex<double>> fam;
            std::complex<double> partial = 1.0;
            for (int j = 0; j + 1 < n; ++j) {
                std::complex<double> v = std::polar(1.0, two_pi * pick_unit(rng));
                fam.push_back(v);
                partial *= std::pow(v, mu[j]);
            }
            int last_mu = mu[n - 1];
            std::complex<double> root = principal_root(target / partial, last_mu);
            fam.push_back(root * root_of_unity(last_mu, pick_int(rng, 0, last_mu - 1)));
            bool separated = true;
            for (int a = 0; a < n && separated; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (std::abs(fam[a] - fam[b]) < 0.05) {
                        separated = false;
                        break;
                    }
            if (separated) {
                c.push_back(std::move(fam));
                break;
            }
        }
    }
    return c;
}

// Random homogeneous correction term of degree d-3 (a constant when d = 3,
// possibly zero for any d).
inline CPolynomial random_g0(Rng& rng, int d) {
    int deg = d - 3;
    CPolynomial g0(3);
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b) {
            if (pick_unit(rng) < 0.5) continue;
            int cc = deg - a - b;
            g0.add_term({a, b, cc},
                        std::complex<double>(pick_unit(rng) - 0.5, pick_unit(rng) - 0.5));
        }
    return g0;
}

}  // namespace galcov::testing
