#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galcov {

// Finite group given by an explicit multiplication table.  Element "names" are
// plain indices into the table; user-facing labels are kept alongside.
//
// Composition convention: mul(a, b) is "apply b first, then a", i.e. for
// permutation groups (a*b)(x) = a(b(x)).  All other modules rely on this.
class FiniteGroup {
public:
    // Z_m with labels "[0]".."[m-1]" and table (i+j) mod m.
    static FiniteGroup cyclic(int m);

    // Symmetric group on {1..n}, n <= 6.  Elements are ordered
    // lexicographically by one-line notation; labels use cycle notation,
    // e.g. "id", "(1 2)", "(1 2 3)", "(1 2)(3 4)".
    static FiniteGroup symmetric(int n);

    // Arbitrary table.  Checks: unique labels, latin square, identity,
    // two-sided inverses, associativity (exhaustive for order <= 64,
    // seeded spot checks above that).
    static FiniteGroup from_table(std::vector<std::string> labels,
                                  std::vector<std::vector<int>> table,
                                  int identity);

    int order() const { return static_cast<int>(labels_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    // g x g^{-1}
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    const std::string& label(int i) const { return labels_[i]; }
    std::optional<int> index_of(std::string_view label) const;

    bool abelian() const { return abelian_; }
    // True when the table is literally addition mod order().  coset_of and
    // the splitting-cover builders require this form (make_cyclic produces it).
    bool standard_cyclic() const { return standard_cyclic_; }

    // Same labels, same table, same identity.
    bool same_structure(const FiniteGroup& other) const;

private:
    FiniteGroup() = default;
    void finish();

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    bool abelian_ = false;
    bool standard_cyclic_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_cyclic(int m);
GroupPtr make_symmetric(int n);
GroupPtr make_from_table(std::vector<std::string> labels,
                         std::vector<std::vector<int>> table, int identity);

// True when both pointers refer to structurally identical groups.
bool same_group(const GroupPtr& a, const GroupPtr& b);

// Subset of a group, kept sorted and duplicate-free.
struct GroupSubset {
    GroupPtr group;
    std::vector<int> members;

    static GroupSubset of(GroupPtr g, std::vector<int> members);

    bool contains(int x) const;
    std::size_t size() const { return members.size(); }

    GroupSubset conjugate(int g) const;        // g S g^{-1}
    GroupSubset inverses() const;              // { x^{-1} : x in S }
    GroupSubset product(const GroupSubset& rhs) const;  // { x y : x in S, y in rhs }

    bool same_members(const GroupSubset& rhs) const { return members == rhs.members; }
    std::vector<std::string> labels() const;
};

// Conjugacy class { g S g^{-1} : g in G } of a subset.  orbit holds the
// distinct conjugates as sorted member lists, ordered lexicographically;
// orbit.front() is the canonical representative.
struct SubsetClass {
    GroupPtr group;
    std::vector<std::vector<int>> orbit;

    const std::vector<int>& canonical() const { return orbit.front(); }
    bool same_class(const SubsetClass& rhs) const { return canonical() == rhs.canonical(); }
};

SubsetClass conjugacy_class_of_subset(const GroupSubset& s);

struct GroupAutomorphism {
    GroupPtr group;
    std::vector<int> images;   // images[x] = tau(x)

    // Validates bijectivity and tau(xy) = tau(x)tau(y).
    static GroupAutomorphism make(GroupPtr g, std::vector<int> images);
    static GroupAutomorphism identity(GroupPtr g);
    // x -> x^{-1}; an automorphism only for abelian groups (checked).
    static GroupAutomorphism inversion(GroupPtr g);

    int apply(int x) const { return images[x]; }
    GroupSubset apply_subset(const GroupSubset& s) const;
    bool is_identity() const;
};

// Class of tau(S); well defined since tau maps conjugates to conjugates.
SubsetClass apply_automorphism(const GroupAutomorphism& tau, const SubsetClass& cls);

// Arithmetic progression [offset] + step*Z_m inside Z_m, i.e. a coset of the
// subgroup generated by [step].  step divides m, 0 <= offset < step.
struct CycloCoset {
    int m = 1;
    int step = 1;
    int offset = 0;

    std::vector<int> members() const;
    bool operator==(const CycloCoset&) const = default;
};

// Normalizes offset mod step; step must be a positive divisor of m.
CycloCoset make_coset(int m, int step, int offset);

// Recognizes a subset of a standard cyclic group as a coset of a subgroup.
// Throws invalid_argument unless the group has standard cyclic form; returns
// nullopt when the subset is not a coset.
std::optional<CycloCoset> coset_of(const GroupSubset& s);

GroupSubset coset_to_subset(const CycloCoset& c, const GroupPtr& group);

}  // namespace galcov
