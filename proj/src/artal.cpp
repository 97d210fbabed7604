#include "galcov/artal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galcov {

Partition Partition::of(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("Partition: no parts");
    for (int e : parts)
        if (e < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts.begin(), parts.end());
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::gcd() const {
    int g = 0;
    for (int e : parts_) g = std::gcd(g, e);
    return g;
}

int partition_compare(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum())
        throw std::invalid_argument("partition_compare: different sums");
    // Equal sums rule out one part list being a strict prefix of the other,
    // so the first differing position decides.
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    for (std::size_t j = 0; j < pa.size() && j < pb.size(); ++j) {
        if (pa[j] != pb[j]) return pa[j] < pb[j] ? -1 : 1;
    }
    return 0;
}

ArtalType ArtalType::of(int d, Partition p1, Partition p2, Partition p3) {
    if (d < 3) throw std::invalid_argument("ArtalType: degree must be >= 3");
    std::array<Partition, 3> ps{std::move(p1), std::move(p2), std::move(p3)};
    for (const auto& p : ps)
        if (p.sum() != d)
            throw std::invalid_argument("ArtalType: partition sum != degree");
    std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
        return partition_compare(a, b) < 0;
    });
    ArtalType t;
    t.d_ = d;
    t.p_ = std::move(ps);
    return t;
}

const Partition& ArtalType::partition(int i) const {
    if (i < 1 || i > 3) throw std::invalid_argument("ArtalType: index must be 1..3");
    return p_[i - 1];
}

int ArtalType::s(int i) const { return partition(i).gcd(); }

int ArtalType::s_all() const {
    return std::gcd(std::gcd(s(1), s(2)), s(3));
}

int ArtalType::mu(int i) const { return d_ / s(i); }

std::vector<int> ArtalType::mu_parts(int i) const {
    const int si = s(i);
    std::vector<int> out = partition(i).parts();
    for (int& e : out) e /= si;
    return out;
}

bool ArtalType::pairwise_distinct() const {
    return !(p_[0] == p_[1]) && !(p_[1] == p_[2]) && !(p_[0] == p_[2]);
}

ArtalClass classify(const ArtalType& type, int beta) {
    const int s = type.s_all();
    if (beta < 0 || beta >= s)
        throw std::invalid_argument("classify: beta must lie in [0, s)");
    ArtalClass c;
    c.type = type;
    c.beta = beta;
    c.alpha = beta <= s / 2 ? beta : s - beta;
    // The oriented components exist only when the partitions are pairwise
    // distinct and alpha is strictly between 0 and s/2 (so beta = alpha and
    // beta = s - alpha are genuinely different offsets).
    if (type.pairwise_distinct() && c.alpha > 0 && 2 * c.alpha < s)
        c.chirality = beta == c.alpha ? Chirality::Plus : Chirality::Minus;
    return c;
}

std::vector<ArtalClass> family_table(const ArtalType& type) {
    const int s = type.s_all();
    std::vector<ArtalClass> out;
    for (int alpha = 0; alpha <= s / 2; ++alpha) {
        ArtalClass c;
        c.type = type;
        c.beta = alpha;
        c.alpha = alpha;
        c.chirality = Chirality::None;
        out.push_back(std::move(c));
    }
    return out;
}

bool same_embedded_topology(const ArtalType& t1, int beta1,
                            const ArtalType& t2, int beta2) {
    if (!(t1 == t2))
        throw std::invalid_argument(
            "same_embedded_topology: types differ (incomparable combinatorics)");
    return classify(t1, beta1).alpha == classify(t2, beta2).alpha;
}

std::vector<GroupAutomorphism> allowed_automorphisms(int d) {
    if (d < 1) throw std::invalid_argument("allowed_automorphisms: d must be >= 1");
    auto g = make_cyclic(d);
    auto plus = GroupAutomorphism::identity(g);
    auto minus = GroupAutomorphism::inversion(g);
    std::vector<GroupAutomorphism> out{std::move(plus)};
    if (out.front().images != minus.images) out.push_back(std::move(minus));
    return out;
}

namespace {

// Hexagon walk edge ids in traversal order with their directions: branch
// edges are directed point -> component, so the walk alternates forward
// (point to line) and backward (line to next point).
constexpr std::array<std::pair<const char*, bool>, 6> kGammaPlusSteps{{
    {"P1#0", true},   // P1 -> L1
    {"P2#0", false},  // L1 -> P2
    {"P2#1", true},   // P2 -> L2
    {"P3#0", false},  // L2 -> P3
    {"P3#1", true},   // P3 -> L3
    {"P1#1", false},  // L3 -> P1
}};

}  // namespace

Walk ArtalSplittingGraph::gamma_plus() const {
    std::vector<WalkStep> steps;
    for (const auto& [id, fwd] : kGammaPlusSteps)
        steps.push_back({cover.base.require_edge(id), fwd});
    return Walk::make(cover.base, cover.base.require_vertex("P1"), std::move(steps));
}

Walk ArtalSplittingGraph::gamma_minus() const { return inverse_walk(gamma_plus()); }

ArtalSplittingGraph splitting_graph_of(const ArtalType& type, int beta) {
    const int s = type.s_all();
    if (beta < 0 || beta >= s)
        throw std::invalid_argument("splitting_graph_of: beta must lie in [0, s)");

    ArtalSplittingGraph out;
    out.type = type;
    out.beta = beta;

    // Corner points of the line triangle with their two local branches:
    // P1 on L3&L1, P2 on L1&L2, P3 on L2&L3.  Branch order fixes the edge
    // ids P1#0 = (P1, L1), P1#1 = (P1, L3), and so on.
    out.curve.components = {{"L1", 1}, {"L2", 1}, {"L3", 1}};
    out.curve.points = {
        {"P1", {{"L1"}, {"L3"}}},
        {"P2", {{"L1"}, {"L2"}}},
        {"P3", {{"L2"}, {"L3"}}},
    };
    out.curve.validate();

    out.data.m = type.degree();
    out.data.s = {{"L1", type.s(1)}, {"L2", type.s(2)}, {"L3", type.s(3)}};
    // The whole twist sits on the branch of L3 at P1; beta < s <= s(3), so
    // it is already a reduced offset.
    out.data.offsets = {{"P1", {0, beta}}, {"P2", {0, 0}}, {"P3", {0, 0}}};

    out.cover = build_splitting_cover(out.curve, out.data);

    const int lift = out.cover.total.require_vertex("P1@0");
    auto nv_of = [&](const Walk& w) {
        auto coset = coset_of(net_voltage_set(out.cover, w, lift));
        if (!coset)
            throw std::logic_error("splitting_graph_of: net voltage is not a coset");
        return *coset;
    };
    out.nv_plus = nv_of(out.gamma_plus());
    out.nv_minus = nv_of(out.gamma_minus());
    return out;
}

}  // namespace galcov
