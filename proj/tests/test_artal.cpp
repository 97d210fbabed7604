#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "galcov/artal.hpp"
#include "galcov/artal_numeric.hpp"
#include "galcov/curve.hpp"
#include "galcov/equivalence.hpp"
#include "support.hpp"

using namespace galcov;
using namespace galcov::testing;

namespace {

ArtalType cubic_type() {
    return ArtalType::of(3, Partition::of({3}), Partition::of({3}), Partition::of({3}));
}

ArtalType sextic_type() {
    return ArtalType::of(6, Partition::of({6}), Partition::of({6}), Partition::of({6}));
}

ArtalType mixed_sextic() {
    return ArtalType::of(6, Partition::of({2, 4}), Partition::of({2, 2, 2}),
                         Partition::of({6}));
}

}  // namespace

TEST_CASE("partitions sort and compare") {
    auto p = Partition::of({4, 2});
    CHECK(p.parts() == std::vector<int>{2, 4});
    CHECK(p.sum() == 6);
    CHECK(p.gcd() == 2);
    CHECK(p.count() == 2);
    CHECK_THROWS_AS(Partition::of({}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({3, 0}), std::invalid_argument);

    auto a = Partition::of({2, 2, 2});
    auto b = Partition::of({2, 4});
    auto c = Partition::of({6});
    CHECK(partition_compare(a, b) == -1);
    CHECK(partition_compare(b, a) == 1);
    CHECK(partition_compare(c, c) == 0);
    CHECK(partition_compare(a, c) == -1);
    CHECK_THROWS_AS(partition_compare(a, Partition::of({3})), std::invalid_argument);
}

TEST_CASE("arrangement types normalize the partition order") {
    auto t1 = ArtalType::of(6, Partition::of({6}), Partition::of({2, 4}),
                            Partition::of({2, 2, 2}));
    auto t2 = mixed_sextic();
    CHECK(t1 == t2);
    CHECK(t1.partition(1) == Partition::of({2, 2, 2}));
    CHECK(t1.partition(2) == Partition::of({2, 4}));
    CHECK(t1.partition(3) == Partition::of({6}));
    CHECK(t1.s(1) == 2);
    CHECK(t1.s(2) == 2);
    CHECK(t1.s(3) == 6);
    CHECK(t1.s_all() == 2);
    CHECK(t1.mu(1) == 3);
    CHECK(t1.mu(3) == 1);
    CHECK(t1.mu_parts(1) == std::vector<int>{1, 1, 1});
    CHECK(t1.mu_parts(2) == std::vector<int>{1, 2});
    CHECK(t1.pairwise_distinct());
    CHECK_FALSE(sextic_type().pairwise_distinct());
    CHECK_THROWS_AS(t1.partition(0), std::invalid_argument);
    CHECK_THROWS_AS(t1.partition(4), std::invalid_argument);
    CHECK_THROWS_AS(ArtalType::of(2, Partition::of({2}), Partition::of({2}),
                                  Partition::of({2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(ArtalType::of(6, Partition::of({5}), Partition::of({6}),
                                  Partition::of({6})),
                    std::invalid_argument);
}

TEST_CASE("offsets reduce to mirror-folded classes") {
    auto t = sextic_type();  // s = 6
    int expected_alpha[] = {0, 1, 2, 3, 2, 1};
    for (int beta = 0; beta < 6; ++beta) {
        auto cls = classify(t, beta);
        CHECK(cls.beta == beta);
        CHECK(cls.alpha == expected_alpha[beta]);
        CHECK(cls.chirality == Chirality::None);  // equal partitions: no orientation
    }
    CHECK_THROWS_AS(classify(t, -1), std::invalid_argument);
    CHECK_THROWS_AS(classify(t, 6), std::invalid_argument);

    // conjugation involution: beta and s - beta land in the same class
    for (int beta = 1; beta < 6; ++beta) {
        CHECK(classify(t, beta).alpha == classify(t, 6 - beta).alpha);
        CHECK(same_embedded_topology(t, beta, t, 6 - beta));
    }
}

TEST_CASE("chirality needs pairwise distinct partitions and an interior offset") {
    // three distinct partitions of 9 with part gcds 3, 3, 9
    auto t = ArtalType::of(9, Partition::of({9}), Partition::of({3, 3, 3}),
                           Partition::of({3, 6}));
    REQUIRE(t.pairwise_distinct());
    REQUIRE(t.s_all() == 3);
    CHECK(classify(t, 0).chirality == Chirality::None);
    CHECK(classify(t, 1).chirality == Chirality::Plus);
    CHECK(classify(t, 2).chirality == Chirality::Minus);
    CHECK(classify(t, 1).alpha == 1);
    CHECK(classify(t, 2).alpha == 1);

    // same interior alpha but equal partitions: never oriented
    CHECK(classify(sextic_type(), 1).chirality == Chirality::None);
}

TEST_CASE("family tables enumerate the folded offsets") {
    CHECK(family_table(cubic_type()).size() == 2);
    CHECK(family_table(sextic_type()).size() == 4);
    CHECK(family_table(mixed_sextic()).size() == 2);

    // gcd 1 collapses everything to a single class
    auto trivial = ArtalType::of(3, Partition::of({1, 2}), Partition::of({3}),
                                 Partition::of({3}));
    CHECK(trivial.s_all() == 1);
    CHECK(family_table(trivial).size() == 1);

    auto table = family_table(sextic_type());
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].alpha == static_cast<int>(i));
        CHECK(table[i].beta == static_cast<int>(i));
        CHECK(table[i].chirality == Chirality::None);
        CHECK(table[i].type == sextic_type());
    }
}

TEST_CASE("embedded topology comparison") {
    auto t = sextic_type();
    CHECK(same_embedded_topology(t, 1, t, 5));
    CHECK(same_embedded_topology(t, 2, t, 2));
    CHECK_FALSE(same_embedded_topology(t, 2, t, 3));
    CHECK_FALSE(same_embedded_topology(t, 0, t, 1));
    CHECK_THROWS_AS(same_embedded_topology(t, 0, cubic_type(), 0), std::invalid_argument);
}

TEST_CASE("meridian-compatible automorphisms") {
    CHECK(allowed_automorphisms(1).size() == 1);
    CHECK(allowed_automorphisms(2).size() == 1);
    CHECK_THROWS_AS(allowed_automorphisms(0), std::invalid_argument);

    auto auts = allowed_automorphisms(6);
    REQUIRE(auts.size() == 2);
    CHECK(auts[0].is_identity());
    CHECK_FALSE(auts[1].is_identity());
    for (int k = 0; k < 6; ++k) CHECK(auts[1].apply(k) == (6 - k) % 6);
}

TEST_CASE("splitting graphs carry the twist on one branch") {
    auto t = cubic_type();
    for (int beta = 0; beta < 3; ++beta) {
        CAPTURE(beta);
        auto g = splitting_graph_of(t, beta);
        auto rep = validate_cover(g.cover);
        REQUIRE(rep.ok());
        CHECK(g.cover.base.vertex_count() == 6);
        CHECK(g.cover.base.edge_count() == 6);
        CHECK(g.cover.total.vertex_count() == 18);
        CHECK(g.cover.total.edge_count() == 18);
        CHECK(g.nv_plus == make_coset(3, 3, beta));
        CHECK(g.nv_minus == make_coset(3, 3, (3 - beta) % 3));
        // untwisted: three disjoint hexagons; twisted: a single 18-cycle
        CHECK(connected_number(g.cover) == (beta == 0 ? 3 : 1));

        auto w = g.gamma_plus();
        CHECK(w.closed());
        CHECK(w.length() == 6);
        CHECK(g.cover.base.vertex_id(w.start()) == "P1");
        for (int i = 0; i < 6; ++i) CHECK(w.steps()[i].forward == (i % 2 == 0));

        auto wm = g.gamma_minus();
        CHECK(wm.length() == 6);
        CHECK(wm.steps().front() ==
              WalkStep{g.cover.base.require_edge("P1#1"), true});
        CHECK(inverse_walk(wm).steps() == w.steps());
    }
    CHECK_THROWS_AS(splitting_graph_of(t, 3), std::invalid_argument);
    CHECK_THROWS_AS(splitting_graph_of(t, -1), std::invalid_argument);
}

TEST_CASE("frontier cosets match the crossing formula") {
    for (const auto& t : {sextic_type(), mixed_sextic()}) {
        for (int beta = 0; beta < t.s_all(); ++beta) {
            CAPTURE(t.degree());
            CAPTURE(beta);
            auto g = splitting_graph_of(t, beta);
            auto predicted = theorem_net_voltage({t.s(1), t.s(2), t.s(3)},
                                                 {0, 0, beta}, t.degree());
            CHECK(g.nv_plus == predicted);
            CHECK(g.nv_plus == make_coset(t.degree(), t.s_all(), beta));
            CHECK(g.nv_minus ==
                  make_coset(t.degree(), t.s_all(), (t.s_all() - beta) % t.s_all()));
        }
    }
}

TEST_CASE("classification agrees with cover equivalence") {
    auto t = cubic_type();
    auto g0 = splitting_graph_of(t, 0);
    auto g1 = splitting_graph_of(t, 1);
    auto g2 = splitting_graph_of(t, 2);
    auto taus = allowed_automorphisms(3);
    REQUIRE(taus.size() == 2);

    // different classes: every allowed tau is ruled out by signatures alone,
    // and the exhaustive search concurs
    for (const auto& tau : taus) {
        auto v = distinguish(g0.cover, g1.cover, tau);
        CHECK(v.kind == Verdict::Kind::Distinguished);
        CHECK(v.mismatch.has_value());
        CHECK(exhaustive_equivalence(g0.cover, g1.cover, tau).kind ==
              Verdict::Kind::Distinguished);
    }
    CHECK_FALSE(same_embedded_topology(t, 0, t, 1));

    // mirror offsets: same class, and an equivalence indeed exists
    CHECK(same_embedded_topology(t, 1, t, 2));
    bool equivalent_somehow = false;
    for (const auto& tau : taus) {
        auto v = exhaustive_equivalence(g1.cover, g2.cover, tau);
        if (v.kind == Verdict::Kind::Equivalent) {
            REQUIRE(v.witness.has_value());
            CHECK(check_equivalence_witness(g1.cover, g2.cover, tau, *v.witness).empty());
            equivalent_somehow = true;
        }
    }
    CHECK(equivalent_somehow);

    // a cover is equivalent to itself under the identity
    auto self = exhaustive_equivalence(g1.cover, g1.cover, taus[0]);
    CHECK(self.kind == Verdict::Kind::Equivalent);
}

TEST_CASE("classification agrees with cover equivalence at degree six") {
    auto t = sextic_type();
    auto taus = allowed_automorphisms(6);

    auto g1 = splitting_graph_of(t, 1);
    auto g5 = splitting_graph_of(t, 5);
    bool found = false;
    for (const auto& tau : taus) {
        if (exhaustive_equivalence(g1.cover, g5.cover, tau).kind ==
            Verdict::Kind::Equivalent)
            found = true;
    }
    CHECK(found);
    CHECK(same_embedded_topology(t, 1, t, 5));

    auto g2 = splitting_graph_of(t, 2);
    for (const auto& tau : taus) {
        CHECK(distinguish(g1.cover, g2.cover, tau).kind ==
              Verdict::Kind::Distinguished);
        CHECK(exhaustive_equivalence(g1.cover, g2.cover, tau).kind ==
              Verdict::Kind::Distinguished);
    }
    CHECK_FALSE(same_embedded_topology(t, 1, t, 2));
}
