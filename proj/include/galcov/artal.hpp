#pragma once

#include <array>
#include <vector>

#include "galcov/cover.hpp"
#include "galcov/curve.hpp"
#include "galcov/group.hpp"

namespace galcov {

// Partition of a positive integer, parts kept in ascending order.
class Partition {
public:
    // Sorts the parts; every part must be >= 1 and there must be at least one.
    static Partition of(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int count() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    int gcd() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// -1 / 0 / +1 by the first differing part.  Only partitions of the same
// integer are comparable; different sums throw invalid_argument.
int partition_compare(const Partition& a, const Partition& b);

// Combinatorial type of an arrangement: a smooth degree-d curve together
// with three non-concurrent tangent lines L1, L2, L3 whose tangency orders
// form three partitions of d.  The triple is normalized into ascending
// partition order, so types compare equal regardless of input order; the
// line labels below always refer to the normalized positions.
class ArtalType {
public:
    // Placeholder state (degree 0, empty partitions) so that structs holding
    // a type can be default-constructed; build real values with of().
    ArtalType() = default;

    static ArtalType of(int d, Partition p1, Partition p2, Partition p3);

    int degree() const { return d_; }
    const Partition& partition(int i) const;  // i in 1..3
    int s(int i) const;                       // gcd of partition i's parts
    int s_all() const;                        // gcd(s(1), s(2), s(3))
    int mu(int i) const;                      // degree / s(i)
    std::vector<int> mu_parts(int i) const;   // parts of partition i, divided by s(i)
    bool pairwise_distinct() const;           // the three partitions pairwise differ

    bool operator==(const ArtalType&) const = default;

private:
    int d_ = 0;
    std::array<Partition, 3> p_;
};

// Orientation marker inside a topological class: when the partitions are
// pairwise distinct and 0 < alpha < s/2, the arrangements with offset
// beta = alpha and beta = s - alpha form two moduli components that complex
// conjugation swaps.  Chirality never affects embedded topology.
enum class Chirality { None, Plus, Minus };

struct ArtalClass {
    ArtalType type;
    int beta = 0;   // the offset this class was computed from, in [0, s)
    int alpha = 0;  // class representative: min(beta, s - beta)
    Chirality chirality = Chirality::None;
};

// Reduces an offset beta in [0, s) to its class.  alpha = beta when
// beta <= floor(s/2), otherwise s - beta.
ArtalClass classify(const ArtalType& type, int beta);

// One class per alpha in {0..floor(s/2)}; these are the distinct embedded
// topologies realized by the type (chirality quotiented away).
std::vector<ArtalClass> family_table(const ArtalType& type);

// True iff both offsets reduce to the same alpha.  Types must be equal;
// different types have different combinatorics and are not comparable here.
bool same_embedded_topology(const ArtalType& t1, int beta1,
                            const ArtalType& t2, int beta2);

// The group automorphisms of Z_d compatible with meridians: [1] -> [1] and
// [1] -> [-1].  A single entry when the two coincide (d <= 2).
std::vector<GroupAutomorphism> allowed_automorphisms(int d);

// Splitting graph of an arrangement with given type and offset beta: the
// Z_d-cover of the hexagon incidence graph of L1 + L2 + L3, where the
// corner points are P1 = L3&L1, P2 = L1&L2, P3 = L2&L3 and the single
// twisted branch is the one of L3 at P1 (offset beta).  nv_plus / nv_minus
// hold the net voltage cosets of the two hexagon walks, computed from the
// cover by frontier propagation at construction time.
struct ArtalSplittingGraph {
    ArtalType type;
    int beta = 0;
    CurveCombinatorics curve;
    CyclicSplittingData data;
    Cover cover;
    CycloCoset nv_plus;   // net voltage of gamma_plus(): [beta] + s Z_d
    CycloCoset nv_minus;  // net voltage of gamma_minus(): [-beta] + s Z_d

    // Hexagon walk (P1, L1, P2, L2, P3, L3, P1) on cover.base.  Rebuilt per
    // call: the Walk borrows cover.base, so it must not outlive this struct.
    Walk gamma_plus() const;
    Walk gamma_minus() const;  // the inverse walk
};

ArtalSplittingGraph splitting_graph_of(const ArtalType& type, int beta);

}  // namespace galcov
