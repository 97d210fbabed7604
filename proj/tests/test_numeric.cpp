#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "galcov/artal_numeric.hpp"
#include "galcov/curve.hpp"
#include "galcov/json_io.hpp"
#include "galcov/polynomial.hpp"
#include "support.hpp"

using namespace galcov;
using namespace galcov::testing;
using cd = std::complex<double>;

namespace {

bool close(cd a, cd b, double eps = 1e-9) { return std::abs(a - b) <= eps; }

// factored-form evaluation of the defining polynomial, kept independent of
// the expansion in build_FP
cd FP_direct(const ArtalType& t, const std::vector<std::vector<cd>>& c,
             const CPolynomial& g0, cd x, cd y, cd z) {
    auto fam = [&](int i, cd u, cd v) {
        cd prod = 1.0;
        const auto& parts = t.partition(i).parts();
        for (std::size_t j = 0; j < parts.size(); ++j)
            prod *= std::pow(u + c[i - 1][j] * v, parts[j]);
        return prod;
    };
    const int d = t.degree();
    return fam(1, y, z) + fam(2, z, x) + fam(3, x, y) - std::pow(x, d) - std::pow(y, d) -
           std::pow(z, d) + x * y * z * g0.eval({x, y, z});
}

std::vector<HEvaluation> evals_for(const ArtalType& t, const ArtalHValues& h) {
    return {{h.hx_P2, principal_root(h.hx_P1, t.mu(1)), t.mu(1), t.s(1)},
            {h.hy_P3, principal_root(h.hy_P2, t.mu(2)), t.mu(2), t.s(2)},
            {h.hz_P1, principal_root(h.hz_P3, t.mu(3)), t.mu(3), t.s(3)}};
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
    auto x = CPolynomial::variable(3, 0);
    auto y = CPolynomial::variable(3, 1);
    auto one = CPolynomial::constant(3, 1.0);
    auto p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.total_degree() == 2);

    auto q = (x + one).pow(3);
    CHECK(q.terms().at({0, 0, 0}) == cd(1.0));
    CHECK(q.terms().at({1, 0, 0}) == cd(3.0));
    CHECK(q.terms().at({2, 0, 0}) == cd(3.0));
    CHECK(q.terms().at({3, 0, 0}) == cd(1.0));
    CHECK(q.pow(0) == CPolynomial::constant(3, 1.0));

    // exact cancellation drops the term
    auto z = x - x;
    CHECK(z.is_zero());
    CHECK(z.total_degree() == -1);
    CHECK(z.eval({cd(2), cd(3), cd(4)}) == cd(0.0));

    CHECK(close(q.eval({cd(0.5), cd(0), cd(0)}), cd(3.375)));

    CHECK_THROWS_AS(CPolynomial::variable(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(x + CPolynomial::variable(2, 0), std::invalid_argument);
    CPolynomial bad(2);
    CHECK_THROWS_AS(bad.add_term({1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bad.add_term({1, -1}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(x.eval({cd(1)}), std::invalid_argument);
}

TEST_CASE("projective points and roots of unity") {
    auto p = ProjectivePoint::of(cd(0), cd(-2), cd(1));
    CHECK(close(p.y, cd(1)));
    CHECK(close(p.z, cd(-0.5)));
    CHECK_THROWS_AS(ProjectivePoint::of(cd(0), cd(0), cd(0)), std::invalid_argument);

    CHECK(close(corner_P1().y, cd(1)));
    CHECK(close(corner_P2().z, cd(1)));
    CHECK(close(corner_P3().x, cd(1)));

    CHECK(close(root_of_unity(4, 1), cd(0, 1)));
    CHECK(close(root_of_unity(6, 6), cd(1)));
    CHECK(close(principal_root(cd(-1), 2), cd(0, 1)));
    CHECK(close(principal_root(cd(16), 4), cd(2)));
}

TEST_CASE("expanded triple tangent cubic matches the closed form") {
    auto t = ArtalType::of(3, Partition::of({3}), Partition::of({3}), Partition::of({3}));
    std::vector<std::vector<cd>> c{{cd(1)}, {cd(1)}, {cd(1)}};
    auto F = build_FP(t, 0, c, CPolynomial(3));
    // (y+z)^3 + (z+x)^3 + (x+y)^3 - x^3 - y^3 - z^3: no xyz term survives
    CHECK(F.total_degree() == 3);
    CHECK(F.terms().size() == 9);
    CHECK(F.terms().at({3, 0, 0}) == cd(1.0));
    CHECK(F.terms().at({0, 3, 0}) == cd(1.0));
    CHECK(F.terms().at({2, 1, 0}) == cd(3.0));
    CHECK(F.terms().at({0, 1, 2}) == cd(3.0));
    CHECK(F.terms().count({1, 1, 1}) == 0);
}

TEST_CASE("expansion agrees with factored evaluation on random data") {
    Rng rng(30717);
    std::vector<ArtalType> types = {
        ArtalType::of(3, Partition::of({3}), Partition::of({3}), Partition::of({3})),
        ArtalType::of(4, Partition::of({4}), Partition::of({4}), Partition::of({4})),
        ArtalType::of(4, Partition::of({2, 2}), Partition::of({4}), Partition::of({4})),
        ArtalType::of(6, Partition::of({2, 4}), Partition::of({2, 2, 2}), Partition::of({6})),
        ArtalType::of(6, Partition::of({6}), Partition::of({6}), Partition::of({6})),
    };
    for (const auto& t : types) {
        CAPTURE(t.degree());
        for (int trial = 0; trial < 4; ++trial) {
            int beta = pick_int(rng, 0, t.s_all() - 1);
            auto c = random_coefficients(rng, t, beta);
            auto g0 = random_g0(rng, t.degree());
            auto F = build_FP(t, beta, c, g0);
            CHECK(F.total_degree() <= t.degree());
            for (int pt = 0; pt < 5; ++pt) {
                cd x(pick_unit(rng) - 0.5, pick_unit(rng) - 0.5);
                cd y(pick_unit(rng) - 0.5, pick_unit(rng) - 0.5);
                cd z(pick_unit(rng) - 0.5, pick_unit(rng) - 0.5);
                CHECK(close(F.eval({x, y, z}), FP_direct(t, c, g0, x, y, z), 1e-8));
            }
        }
    }
}

TEST_CASE("coefficient constraints are enforced") {
    auto t = ArtalType::of(4, Partition::of({4}), Partition::of({4}), Partition::of({4}));
    // family 1 product must be 1
    std::vector<std::vector<cd>> c{{cd(0, 1)}, {cd(1)}, {cd(1)}};
    CHECK_THROWS_AS(build_FP(t, 0, c, CPolynomial(3)), std::invalid_argument);
    CHECK_THROWS_AS(h_values_for_artal(t, 0, c), std::invalid_argument);

    // family 3 must hit the twisted target
    c = {{cd(1)}, {cd(1)}, {cd(1)}};
    CHECK_THROWS_AS(build_FP(t, 1, c, CPolynomial(3)), std::invalid_argument);
    c[2][0] = root_of_unity(4, 1);
    build_FP(t, 1, c, CPolynomial(3));  // now consistent

    // coincident coefficients within a family are rejected
    auto t2 = ArtalType::of(4, Partition::of({2, 2}), Partition::of({4}), Partition::of({4}));
    std::vector<std::vector<cd>> c2{{cd(1), cd(1)}, {cd(1)}, {cd(1)}};
    CHECK_THROWS_AS(build_FP(t2, 0, c2, CPolynomial(3)), std::invalid_argument);

    // wrong family size
    std::vector<std::vector<cd>> c3{{cd(1)}, {cd(1)}};
    CHECK_THROWS_AS(build_FP(t, 0, c3, CPolynomial(3)), std::invalid_argument);

    // g0 must be homogeneous of degree d-3
    CPolynomial g0(3);
    g0.add_term({1, 0, 0}, 1.0);  // degree 1, but d-3 = 1 only for d = 4: ok
    build_FP(t, 0, {{cd(1)}, {cd(1)}, {cd(1)}}, g0);
    g0.add_term({0, 0, 0}, 1.0);  // now mixed degrees
    CHECK_THROWS_AS(build_FP(t, 0, {{cd(1)}, {cd(1)}, {cd(1)}}, g0),
                    std::invalid_argument);
}

TEST_CASE("corner h-values follow the twisted pattern") {
    Rng rng(99120);
    std::vector<ArtalType> types = {
        ArtalType::of(3, Partition::of({3}), Partition::of({3}), Partition::of({3})),
        ArtalType::of(4, Partition::of({2, 2}), Partition::of({4}), Partition::of({4})),
        ArtalType::of(6, Partition::of({2, 4}), Partition::of({2, 2, 2}), Partition::of({6})),
    };
    for (const auto& t : types) {
        for (int beta = 0; beta < t.s_all(); ++beta) {
            auto c = random_coefficients(rng, t, beta);
            auto h = h_values_for_artal(t, beta, c);
            CHECK(close(h.hx_P1, cd(1)));
            CHECK(close(h.hx_P2, cd(1)));
            CHECK(close(h.hy_P2, cd(1)));
            CHECK(close(h.hy_P3, cd(1)));
            CHECK(close(h.hz_P3, cd(1)));
            CHECK(close(h.hz_P1, root_of_unity(t.degree(), beta * t.mu(3))));
        }
    }
}

TEST_CASE("offset extraction recovers beta") {
    Rng rng(40933);
    std::vector<ArtalType> types = {
        ArtalType::of(3, Partition::of({3}), Partition::of({3}), Partition::of({3})),
        ArtalType::of(4, Partition::of({4}), Partition::of({4}), Partition::of({4})),
        ArtalType::of(6, Partition::of({6}), Partition::of({6}), Partition::of({6})),
        ArtalType::of(6, Partition::of({2, 4}), Partition::of({2, 2, 2}), Partition::of({6})),
    };
    for (const auto& t : types) {
        const int s = t.s_all();
        for (int beta = 0; beta < s; ++beta) {
            CAPTURE(t.degree());
            CAPTURE(beta);
            auto c = random_coefficients(rng, t, beta);
            auto h = h_values_for_artal(t, beta, c);
            auto ex = extract_offsets(evals_for(t, h), t.degree(), 1e-6);
            REQUIRE(ex.size() == 3);
            CHECK(ex[0].alpha == 0);
            CHECK(ex[1].alpha == 0);
            CHECK(ex[2].alpha == beta);
            int sum = 0;
            for (const auto& e : ex) {
                sum += e.alpha;
                CHECK(e.residual < 1e-6);
                CHECK(e.margin > 1e-5);
            }
            CHECK(sum % s == beta % s);
            auto coset = theorem_net_voltage({t.s(1), t.s(2), t.s(3)},
                                             {ex[0].alpha, ex[1].alpha, ex[2].alpha},
                                             t.degree());
            CHECK(coset == make_coset(t.degree(), s, beta));
        }
    }
}

TEST_CASE("extraction is independent of the chosen roots") {
    Rng rng(60111);
    auto t = ArtalType::of(6, Partition::of({2, 4}), Partition::of({2, 2, 2}),
                           Partition::of({6}));
    for (int beta = 0; beta < t.s_all(); ++beta) {
        auto c = random_coefficients(rng, t, beta);
        auto h = h_values_for_artal(t, beta, c);
        auto evals = evals_for(t, h);
        auto base = extract_offsets(evals, t.degree(), 1e-6);
        // replace each principal root by a different branch of the same root
        for (auto& ev : evals) ev.d *= root_of_unity(ev.mu, pick_int(rng, 0, ev.mu - 1));
        auto redone = extract_offsets(evals, t.degree(), 1e-6);
        for (int i = 0; i < 3; ++i) CHECK(base[i].alpha == redone[i].alpha);
    }
}

TEST_CASE("extraction failure modes") {
    // residual: ratio far from every root
    std::vector<HEvaluation> off{{std::polar(1.0, 0.3), cd(1), 1, 4}};
    CHECK_THROWS_AS(extract_offsets(off, 4, 0.05), extraction_error);

    // ambiguity: ratio halfway between adjacent roots with a loose tolerance
    std::vector<HEvaluation> mid{{std::polar(1.0, std::acos(-1.0) / 12), cd(1), 1, 12}};
    CHECK_THROWS_AS(extract_offsets(mid, 12, 0.3), extraction_error);

    // vanishing root value
    std::vector<HEvaluation> zero{{cd(1), cd(0), 2, 2}};
    CHECK_THROWS_AS(extract_offsets(zero, 4, 1e-6), extraction_error);

    // shape mismatch is a usage error, not a numeric one
    std::vector<HEvaluation> shape{{cd(1), cd(1), 2, 3}};
    CHECK_THROWS_AS(extract_offsets(shape, 4, 1e-6), std::invalid_argument);

    // s = 1 always matches with infinite margin
    std::vector<HEvaluation> s1{{cd(1), cd(1), 4, 1}};
    auto ex = extract_offsets(s1, 4, 1e-6);
    CHECK(ex[0].alpha == 0);
    CHECK(std::isinf(ex[0].margin));
}

TEST_CASE("predicted cosets") {
    CHECK(theorem_net_voltage({}, {}, 5) == make_coset(5, 5, 0));
    CHECK(theorem_net_voltage({2, 3}, {1, 1}, 6) == make_coset(6, 1, 2));
    CHECK(theorem_net_voltage({4}, {7}, 8) == make_coset(8, 4, 3));
    CHECK(theorem_net_voltage({4, 4}, {-1, 0}, 8) == make_coset(8, 4, 3));
    CHECK_THROWS_AS(theorem_net_voltage({3}, {0}, 8), std::invalid_argument);
    CHECK_THROWS_AS(theorem_net_voltage({2}, {0, 1}, 8), std::invalid_argument);
    CHECK_THROWS_AS(theorem_net_voltage({2}, {0}, 0), std::invalid_argument);
}

TEST_CASE("predicted cosets match frontier propagation") {
    Rng rng(81225);
    for (int trial = 0; trial < 30; ++trial) {
        CAPTURE(trial);
        auto inst = random_splitting_instance(rng, 12, 9);
        auto c = build_splitting_cover(inst.curve, inst.data);
        auto cw = random_crossing_walk(rng, c, inst.data, pick_int(rng, 0, 5));
        int v0 = c.total.require_vertex(c.base.vertex_id(cw.walk.start()) + "@0");
        auto nv = net_voltage_set(c, cw.walk, v0);
        auto coset = coset_of(nv);
        REQUIRE(coset.has_value());
        CHECK(*coset == theorem_net_voltage(cw.s_list, cw.alpha_list, inst.data.m));
    }
}
