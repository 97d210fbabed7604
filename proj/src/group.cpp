#include "galcov/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace galcov {

namespace {

std::string cycle_label(const std::vector<int>& perm) {
    // perm is one-line notation on {0..n-1}; emit disjoint cycles on {1..n},
    // each starting at its smallest element, fixed points omitted.
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = perm[j];
        }
        out << ')';
    }
    return any ? out.str() : std::string("id");
}

}  // namespace

void FiniteGroup::finish() {
    const int n = order();
    if (n <= 0) throw std::invalid_argument("FiniteGroup: empty element list");
    if (identity_ < 0 || identity_ >= n)
        throw std::invalid_argument("FiniteGroup: identity index out of range");
    {
        std::set<std::string> uniq(labels_.begin(), labels_.end());
        if (static_cast<int>(uniq.size()) != n)
            throw std::invalid_argument("FiniteGroup: duplicate element labels");
        for (const auto& l : labels_)
            if (l.empty()) throw std::invalid_argument("FiniteGroup: empty element label");
    }
    if (static_cast<int>(table_.size()) != n)
        throw std::invalid_argument("FiniteGroup: table has wrong number of rows");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("FiniteGroup: table row has wrong length");
        for (int v : row)
            if (v < 0 || v >= n)
                throw std::invalid_argument("FiniteGroup: table entry out of range");
    }
    // Latin square: every row and column is a permutation.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (int j = 0; j < n; ++j) {
            if (row_seen[table_[i][j]])
                throw std::invalid_argument("FiniteGroup: row " + labels_[i] +
                                            " is not a permutation");
            row_seen[table_[i][j]] = true;
            if (col_seen[table_[j][i]])
                throw std::invalid_argument("FiniteGroup: column " + labels_[i] +
                                            " is not a permutation");
            col_seen[table_[j][i]] = true;
        }
    }
    for (int i = 0; i < n; ++i)
        if (table_[identity_][i] != i || table_[i][identity_] != i)
            throw std::invalid_argument("FiniteGroup: claimed identity is not neutral");
    // Associativity: exhaustive for small orders, seeded spot checks beyond
    // (n^3 gets expensive around S_6).
    auto assoc = [&](int a, int b, int c) {
        return table_[table_[a][b]][c] == table_[a][table_[b][c]];
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c))
                        throw std::invalid_argument(
                            "FiniteGroup: associativity fails at (" + labels_[a] + "," +
                            labels_[b] + "," + labels_[c] + ")");
    } else {
        std::mt19937 rng(0xa550cu);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (!assoc(a, b, c))
                throw std::invalid_argument(
                    "FiniteGroup: associativity fails at (" + labels_[a] + "," +
                    labels_[b] + "," + labels_[c] + ")");
        }
    }
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table_[a][b] == identity_) {
                if (table_[b][a] != identity_)
                    throw std::invalid_argument("FiniteGroup: one-sided inverse for " +
                                                labels_[a]);
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0)
            throw std::invalid_argument("FiniteGroup: no inverse for " + labels_[a]);
    }
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (table_[a][b] != table_[b][a]) { abelian_ = false; break; }
    standard_cyclic_ = true;
    for (int a = 0; a < n && standard_cyclic_; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] != (a + b) % n) { standard_cyclic_ = false; break; }
}

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw std::invalid_argument("FiniteGroup::cyclic: order must be >= 1");
    FiniteGroup g;
    g.labels_.reserve(m);
    for (int i = 0; i < m; ++i) g.labels_.push_back("[" + std::to_string(i) + "]");
    g.table_.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.table_[i][j] = (i + j) % m;
    g.identity_ = 0;
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("FiniteGroup::symmetric: n must be in 1..6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int order = static_cast<int>(perms.size());

    std::vector<std::vector<int>> sorted = perms;  // already lexicographic
    auto index_of_perm = [&](const std::vector<int>& q) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), q);
        return static_cast<int>(it - sorted.begin());
    };

    FiniteGroup g;
    g.labels_.reserve(order);
    for (const auto& q : perms) g.labels_.push_back(cycle_label(q));
    g.table_.assign(order, std::vector<int>(order));
    std::vector<int> comp(n);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            // (p_i * p_j)(x) = p_i(p_j(x))
            for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
            g.table_[i][j] = index_of_perm(comp);
        }
    }
    g.identity_ = 0;  // identity permutation is lexicographically first
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<int>> table,
                                    int identity) {
    FiniteGroup g;
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);
    g.identity_ = identity;
    g.finish();
    return g;
}

std::optional<int> FiniteGroup::index_of(std::string_view label) const {
    for (int i = 0; i < order(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool FiniteGroup::same_structure(const FiniteGroup& other) const {
    return labels_ == other.labels_ && table_ == other.table_ &&
           identity_ == other.identity_;
}

GroupPtr make_cyclic(int m) {
    return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(m));
}

GroupPtr make_symmetric(int n) {
    return std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
}

GroupPtr make_from_table(std::vector<std::string> labels,
                         std::vector<std::vector<int>> table, int identity) {
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table(std::move(labels), std::move(table), identity));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (!a || !b) return false;
    return a == b || a->same_structure(*b);
}

GroupSubset GroupSubset::of(GroupPtr g, std::vector<int> members) {
    if (!g) throw std::invalid_argument("GroupSubset: null group");
    for (int x : members)
        if (x < 0 || x >= g->order())
            throw std::invalid_argument("GroupSubset: element index out of range");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return GroupSubset{std::move(g), std::move(members)};
}

bool GroupSubset::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

GroupSubset GroupSubset::conjugate(int g) const {
    std::vector<int> out;
    out.reserve(members.size());
    for (int x : members) out.push_back(group->conj(g, x));
    return GroupSubset::of(group, std::move(out));
}

GroupSubset GroupSubset::inverses() const {
    std::vector<int> out;
    out.reserve(members.size());
    for (int x : members) out.push_back(group->inv(x));
    return GroupSubset::of(group, std::move(out));
}

GroupSubset GroupSubset::product(const GroupSubset& rhs) const {
    if (!same_group(group, rhs.group))
        throw std::invalid_argument("GroupSubset::product: group mismatch");
    std::vector<int> out;
    out.reserve(members.size() * rhs.members.size());
    for (int x : members)
        for (int y : rhs.members) out.push_back(group->mul(x, y));
    return GroupSubset::of(group, std::move(out));
}

std::vector<std::string> GroupSubset::labels() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (int x : members) out.push_back(group->label(x));
    return out;
}

SubsetClass conjugacy_class_of_subset(const GroupSubset& s) {
    std::set<std::vector<int>> seen;
    for (int g = 0; g < s.group->order(); ++g)
        seen.insert(s.conjugate(g).members);
    SubsetClass cls;
    cls.group = s.group;
    cls.orbit.assign(seen.begin(), seen.end());  // std::set iterates in sorted order
    return cls;
}

GroupAutomorphism GroupAutomorphism::make(GroupPtr g, std::vector<int> images) {
    if (!g) throw std::invalid_argument("GroupAutomorphism: null group");
    const int n = g->order();
    if (static_cast<int>(images.size()) != n)
        throw std::invalid_argument("GroupAutomorphism: image list has wrong length");
    std::vector<bool> hit(n, false);
    for (int v : images) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("GroupAutomorphism: image out of range");
        if (hit[v]) throw std::invalid_argument("GroupAutomorphism: images not injective");
        hit[v] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (images[g->mul(a, b)] != g->mul(images[a], images[b]))
                throw std::invalid_argument(
                    "GroupAutomorphism: not multiplicative at (" + g->label(a) + "," +
                    g->label(b) + ")");
    return GroupAutomorphism{std::move(g), std::move(images)};
}

GroupAutomorphism GroupAutomorphism::identity(GroupPtr g) {
    std::vector<int> im(g->order());
    std::iota(im.begin(), im.end(), 0);
    return GroupAutomorphism{std::move(g), std::move(im)};
}

GroupAutomorphism GroupAutomorphism::inversion(GroupPtr g) {
    if (!g->abelian())
        throw std::invalid_argument(
            "GroupAutomorphism::inversion: group is not abelian");
    std::vector<int> im(g->order());
    for (int x = 0; x < g->order(); ++x) im[x] = g->inv(x);
    return GroupAutomorphism{std::move(g), std::move(im)};
}

GroupSubset GroupAutomorphism::apply_subset(const GroupSubset& s) const {
    if (!same_group(group, s.group))
        throw std::invalid_argument("GroupAutomorphism: subset group mismatch");
    std::vector<int> out;
    out.reserve(s.members.size());
    for (int x : s.members) out.push_back(images[x]);
    return GroupSubset::of(group, std::move(out));
}

bool GroupAutomorphism::is_identity() const {
    for (int x = 0; x < static_cast<int>(images.size()); ++x)
        if (images[x] != x) return false;
    return true;
}

SubsetClass apply_automorphism(const GroupAutomorphism& tau, const SubsetClass& cls) {
    if (!same_group(tau.group, cls.group))
        throw std::invalid_argument("apply_automorphism: group mismatch");
    return conjugacy_class_of_subset(
        tau.apply_subset(GroupSubset::of(cls.group, cls.canonical())));
}

std::vector<int> CycloCoset::members() const {
    std::vector<int> out;
    for (int x = offset; x < m; x += step) out.push_back(x);
    return out;
}

CycloCoset make_coset(int m, int step, int offset) {
    if (m < 1) throw std::invalid_argument("CycloCoset: modulus must be >= 1");
    if (step < 1 || m % step != 0)
        throw std::invalid_argument("CycloCoset: step must be a positive divisor of m");
    offset %= step;
    if (offset < 0) offset += step;
    return CycloCoset{m, step, offset};
}

std::optional<CycloCoset> coset_of(const GroupSubset& s) {
    if (!s.group->standard_cyclic())
        throw std::invalid_argument("coset_of: group is not in standard cyclic form");
    const int m = s.group->order();
    const int k = static_cast<int>(s.members.size());
    if (k == 0 || m % k != 0) return std::nullopt;
    const int step = m / k;
    const int offset = s.members.front();
    for (int i = 0; i < k; ++i)
        if (s.members[i] != offset + i * step) return std::nullopt;
    if (offset >= step) return std::nullopt;  // members sorted, so offset = min
    return make_coset(m, step, offset);
}

GroupSubset coset_to_subset(const CycloCoset& c, const GroupPtr& group) {
    if (!group->standard_cyclic() || group->order() != c.m)
        throw std::invalid_argument("coset_to_subset: group/coset mismatch");
    return GroupSubset::of(group, c.members());
}

}  // namespace galcov
