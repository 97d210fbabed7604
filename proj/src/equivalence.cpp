#include "galcov/equivalence.hpp"

#include <algorithm>
#include <sstream>

namespace galcov {

NVSignature nv_signature(const Cover& c) {
    NVSignature sig;
    sig.group = c.group;
    for (const Walk& w : enumerate_simple_closed_walks(c.base))
        sig.by_length[w.length()].push_back(net_voltage_class(c, w).canonical());
    for (auto& [len, classes] : sig.by_length) std::sort(classes.begin(), classes.end());
    return sig;
}

NVSignature transform_signature(const GroupAutomorphism& tau, const NVSignature& sig) {
    if (!same_group(tau.group, sig.group))
        throw std::invalid_argument("transform_signature: group mismatch");
    NVSignature out;
    out.group = sig.group;
    for (const auto& [len, classes] : sig.by_length) {
        auto& dst = out.by_length[len];
        for (const auto& canon : classes) {
            SubsetClass cls{sig.group, {canon}};
            dst.push_back(apply_automorphism(tau, cls).canonical());
        }
        std::sort(dst.begin(), dst.end());
    }
    return out;
}

namespace {

std::string class_to_string(const GroupPtr& g, const std::vector<int>& members) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << ", ";
        out << g->label(members[i]);
    }
    out << '}';
    return out.str();
}

// First multiset difference between two per-length signature tables, scanning
// lengths in increasing order.
std::optional<SignatureMismatch> first_mismatch(const GroupPtr& group,
                                                const NVSignature& a,
                                                const NVSignature& b) {
    std::vector<int> lengths;
    for (const auto& [len, _] : a.by_length) lengths.push_back(len);
    for (const auto& [len, _] : b.by_length) lengths.push_back(len);
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    static const std::vector<std::vector<int>> empty;
    for (int len : lengths) {
        auto ia = a.by_length.find(len);
        auto ib = b.by_length.find(len);
        const auto& ca = ia == a.by_length.end() ? empty : ia->second;
        const auto& cb = ib == b.by_length.end() ? empty : ib->second;
        if (ca == cb) continue;
        // find a class whose multiplicity differs
        std::vector<std::vector<int>> keys = ca;
        keys.insert(keys.end(), cb.begin(), cb.end());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (const auto& key : keys) {
            const int n1 = static_cast<int>(std::count(ca.begin(), ca.end(), key));
            const int n2 = static_cast<int>(std::count(cb.begin(), cb.end(), key));
            if (n1 != n2) {
                SignatureMismatch m;
                m.length = len;
                for (int x : key) m.class_labels.push_back(group->label(x));
                m.count1 = n1;
                m.count2 = n2;
                return m;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict distinguish(const Cover& c1, const Cover& c2, const GroupAutomorphism& tau) {
    if (!same_group(c1.group, c2.group))
        throw std::invalid_argument("distinguish: covers have different groups");
    if (!same_group(tau.group, c1.group))
        throw std::invalid_argument("distinguish: tau acts on a different group");
    const NVSignature s1 = transform_signature(tau, nv_signature(c1));
    const NVSignature s2 = nv_signature(c2);
    Verdict v;
    if (auto mm = first_mismatch(c1.group, s1, s2)) {
        v.kind = Verdict::Kind::Distinguished;
        v.mismatch = std::move(*mm);
        std::ostringstream d;
        d << "net voltage signatures differ at walk length " << v.mismatch->length
          << ": class " << class_to_string(c1.group, [&] {
                 std::vector<int> idx;
                 for (const auto& lbl : v.mismatch->class_labels)
                     idx.push_back(*c1.group->index_of(lbl));
                 return idx;
             }())
          << " occurs " << v.mismatch->count1 << " vs " << v.mismatch->count2 << " times";
        v.detail = d.str();
    } else {
        v.kind = Verdict::Kind::Inconclusive;
        v.detail = "net voltage signatures agree for this automorphism";
    }
    return v;
}

std::string check_equivalence_witness(const Cover& c1, const Cover& c2,
                                      const GroupAutomorphism& tau,
                                      const EquivalenceWitness& w) {
    if (!is_graph_map(c1.base, c2.base, w.theta) ||
        !is_bijective_map(c1.base, c2.base, w.theta))
        return "theta is not an isomorphism of the base graphs";
    if (!is_graph_map(c1.total, c2.total, w.theta_tilde) ||
        !is_bijective_map(c1.total, c2.total, w.theta_tilde))
        return "theta_tilde is not an isomorphism of the total graphs";
    // phi2 o theta_tilde = theta o phi1
    for (int v = 0; v < c1.total.vertex_count(); ++v)
        if (c2.phi.v[w.theta_tilde.v[v]] != w.theta.v[c1.phi.v[v]])
            return "projections disagree at vertex '" + c1.total.vertex_id(v) + "'";
    for (int e = 0; e < c1.total.edge_count(); ++e)
        if (c2.phi.e[w.theta_tilde.e[e]] != w.theta.e[c1.phi.e[e]])
            return "projections disagree at edge '" + c1.total.edge_id(e) + "'";
    // theta_tilde(g.x) = tau(g).theta_tilde(x)
    for (int g = 0; g < c1.group->order(); ++g) {
        const GraphMap& a1 = *c1.action[g];
        const GraphMap& a2 = *c2.action[tau.apply(g)];
        for (int v = 0; v < c1.total.vertex_count(); ++v)
            if (w.theta_tilde.v[a1.v[v]] != a2.v[w.theta_tilde.v[v]])
                return "equivariance fails for " + c1.group->label(g) + " at vertex '" +
                       c1.total.vertex_id(v) + "'";
        for (int e = 0; e < c1.total.edge_count(); ++e)
            if (w.theta_tilde.e[a1.e[e]] != a2.e[w.theta_tilde.e[e]])
                return "equivariance fails for " + c1.group->label(g) + " at edge '" +
                       c1.total.edge_id(e) + "'";
    }
    return {};
}

namespace {

// Search for an equivariant lift theta_tilde over one fixed theta.  Vertex
// fibers are assigned one base vertex at a time (translating a choice for a
// fixed fiber representative), pruning against edges into already-assigned
// fibers; edge images are forced afterwards.
struct LiftSearch {
    const Cover& c1;
    const Cover& c2;
    const GroupAutomorphism& tau;
    const GraphMap& theta;

    std::vector<std::vector<int>> fiber1_v, fiber2_v;  // per base vertex
    std::vector<std::vector<int>> fiber1_e;            // per base edge
    std::vector<int> translator;  // total1 vertex u -> some g with g.rep = u
    std::vector<int> order;       // base1 vertices, components contiguous
    std::vector<int> tilde_v;     // total1 vertex -> total2 vertex or -1
    std::vector<bool> assigned;   // per base1 vertex

    explicit LiftSearch(const Cover& c1_, const Cover& c2_,
                        const GroupAutomorphism& tau_, const GraphMap& theta_)
        : c1(c1_), c2(c2_), tau(tau_), theta(theta_) {
        fiber1_v.resize(c1.base.vertex_count());
        for (int bv = 0; bv < c1.base.vertex_count(); ++bv)
            fiber1_v[bv] = fiber_vertices(c1, bv);
        fiber2_v.resize(c2.base.vertex_count());
        for (int bv = 0; bv < c2.base.vertex_count(); ++bv)
            fiber2_v[bv] = fiber_vertices(c2, bv);
        fiber1_e.resize(c1.base.edge_count());
        for (int be = 0; be < c1.base.edge_count(); ++be)
            fiber1_e[be] = fiber_edges(c1, be);

        translator.assign(c1.total.vertex_count(), -1);
        for (int bv = 0; bv < c1.base.vertex_count(); ++bv) {
            const int rep = fiber1_v[bv].front();
            for (int g = 0; g < c1.group->order(); ++g) {
                const int u = c1.action[g]->v[rep];
                if (translator[u] < 0) translator[u] = g;
            }
        }

        // BFS order over base1 so that edge pruning kicks in early
        std::vector<bool> seen(c1.base.vertex_count(), false);
        for (int root = 0; root < c1.base.vertex_count(); ++root) {
            if (seen[root]) continue;
            std::vector<int> queue{root};
            seen[root] = true;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const int v = queue[qi];
                order.push_back(v);
                for (int e = 0; e < c1.base.edge_count(); ++e) {
                    for (int w : {c1.base.edge_init(e), c1.base.edge_term(e)}) {
                        if ((c1.base.edge_init(e) == v || c1.base.edge_term(e) == v) &&
                            !seen[w]) {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        tilde_v.assign(c1.total.vertex_count(), -1);
        assigned.assign(c1.base.vertex_count(), false);
    }

    bool stabilizers_match(int rep1, int cand2) const {
        const auto s1 = tau.apply_subset(vertex_stabilizer(c1, rep1));
        const auto s2 = vertex_stabilizer(c2, cand2);
        return s1.members == s2.members;
    }

    // after base vertex bv got its fiber assigned, verify each base edge from
    // bv into an assigned fiber still has at least one candidate lift image
    bool edges_satisfiable(int bv) const {
        for (int be = 0; be < c1.base.edge_count(); ++be) {
            const int bi = c1.base.edge_init(be), bt = c1.base.edge_term(be);
            if (bi != bv && bt != bv) continue;
            if (!assigned[bi] || !assigned[bt]) continue;
            const int rep = fiber1_e[be].front();
            if (count_edge_candidates(be, rep) == 0) return false;
        }
        return true;
    }

    int count_edge_candidates(int be, int rep_edge) const {
        const int a = tilde_v[c1.total.edge_init(rep_edge)];
        const int b = tilde_v[c1.total.edge_term(rep_edge)];
        const int be2 = theta.e[be];
        int n = 0;
        for (int e2 = 0; e2 < c2.total.edge_count(); ++e2) {
            if (c2.phi.e[e2] != be2) continue;
            const int x = c2.total.edge_init(e2), y = c2.total.edge_term(e2);
            if ((x == a && y == b) || (x == b && y == a)) ++n;
        }
        return n;
    }

    int first_edge_candidate(int be, int rep_edge) const {
        const int a = tilde_v[c1.total.edge_init(rep_edge)];
        const int b = tilde_v[c1.total.edge_term(rep_edge)];
        const int be2 = theta.e[be];
        for (int e2 = 0; e2 < c2.total.edge_count(); ++e2) {
            if (c2.phi.e[e2] != be2) continue;
            const int x = c2.total.edge_init(e2), y = c2.total.edge_term(e2);
            if ((x == a && y == b) || (x == b && y == a)) return e2;
        }
        return -1;
    }

    // Forced edge images once all vertices are placed; nullopt when some base
    // edge has no candidate.
    std::optional<GraphMap> build_full_map() const {
        GraphMap m;
        m.v = tilde_v;
        m.e.assign(c1.total.edge_count(), -1);
        for (int be = 0; be < c1.base.edge_count(); ++be) {
            const int rep = fiber1_e[be].front();
            const int img = first_edge_candidate(be, rep);
            if (img < 0) return std::nullopt;
            for (int g = 0; g < c1.group->order(); ++g)
                m.e[c1.action[g]->e[rep]] = c2.action[tau.apply(g)]->e[img];
        }
        for (int x : m.e)
            if (x < 0) return std::nullopt;
        return m;
    }

    bool search(std::size_t pos, std::optional<GraphMap>& out) {
        if (pos == order.size()) {
            if (auto m = build_full_map()) {
                out = std::move(*m);
                return true;
            }
            return false;
        }
        const int bv = order[pos];
        const int rep = fiber1_v[bv].front();
        const auto& targets = fiber2_v[theta.v[bv]];
        if (targets.size() != fiber1_v[bv].size()) return false;
        for (int cand : targets) {
            if (!stabilizers_match(rep, cand)) continue;
            for (int u : fiber1_v[bv])
                tilde_v[u] = c2.action[tau.apply(translator[u])]->v[cand];
            assigned[bv] = true;
            if (edges_satisfiable(bv) && search(pos + 1, out)) return true;
            assigned[bv] = false;
            for (int u : fiber1_v[bv]) tilde_v[u] = -1;
        }
        return false;
    }
};

}  // namespace

Verdict exhaustive_equivalence(const Cover& c1, const Cover& c2,
                               const GroupAutomorphism& tau,
                               const SearchLimits& limits,
                               const std::optional<VertexClassConstraint>& classes) {
    if (!same_group(c1.group, c2.group))
        throw std::invalid_argument("exhaustive_equivalence: covers have different groups");
    if (!same_group(tau.group, c1.group))
        throw std::invalid_argument("exhaustive_equivalence: tau acts on a different group");
    if (c1.base.vertex_count() > limits.max_base_vertices ||
        c2.base.vertex_count() > limits.max_base_vertices)
        throw resource_limit_error("exhaustive_equivalence: base graph exceeds " +
                                   std::to_string(limits.max_base_vertices) + " vertices");
    if (c1.total.vertex_count() > limits.max_total_vertices ||
        c2.total.vertex_count() > limits.max_total_vertices)
        throw resource_limit_error("exhaustive_equivalence: total graph exceeds " +
                                   std::to_string(limits.max_total_vertices) + " vertices");

    Verdict result;
    result.kind = Verdict::Kind::Distinguished;
    result.detail = "no equivalence for this automorphism: all base isomorphisms exhausted";

    for_each_isomorphism(c1.base, c2.base, classes, [&](const GraphMap& theta) {
        LiftSearch ls(c1, c2, tau, theta);
        std::optional<GraphMap> tilde;
        if (!ls.search(0, tilde)) return true;  // next theta
        EquivalenceWitness w{theta, *tilde};
        const std::string err = check_equivalence_witness(c1, c2, tau, w);
        if (!err.empty())
            throw std::logic_error("exhaustive_equivalence: candidate failed verification: " + err);
        result.kind = Verdict::Kind::Equivalent;
        result.detail = "found equivalence witness";
        result.witness = std::move(w);
        return false;  // stop the theta stream
    });
    return result;
}

}  // namespace galcov
