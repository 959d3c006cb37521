#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dempoly/ideal.hpp"
#include "dempoly/verify.hpp"

using namespace dempoly;

TEST_CASE("theorem generators: worked examples") {
    SUBCASE("A3 at omega_2: the bare horizontal root gives s_{3,3} = 1") {
        System sys = build_system(LieType{Family::A, 3}, 1);
        const auto gs = theorem_generators(sys, {0, 1, 0});
        // order a[1,1] a[1,2] a[1,3] a[2,3] a[3,3]; q = m_3 = 0 on path (a_3)
        const MultiExponent g{0, 0, 0, 0, 1};
        REQUIRE(gs.generators.count(g) == 1);
        CHECK(gs.generators.at(g).weighted_sum == 1);
    }
    SUBCASE("lambda = 0: every unit vector appears") {
        for (const auto& sys :
             {build_system(LieType{Family::A, 2}, 1), build_system(LieType{Family::C, 2}, 1),
              build_system(LieType{Family::B, 3}, 1), build_system(LieType{Family::D, 4}, 1)}) {
            const Weight zero(static_cast<size_t>(sys.type.rank), 0);
            const auto gs = theorem_generators(sys, zero);
            for (size_t c = 0; c < sys.poset.elements.size(); ++c) {
                MultiExponent unit(sys.poset.elements.size(), 0);
                unit[c] = 1;
                CHECK(gs.generators.count(unit) == 1);
            }
        }
    }
    SUBCASE("C2 at omega_2: (0,1,1) arises from the coefficient path at q+1") {
        System sys = build_system(LieType{Family::C, 2}, 1);
        const auto gs = theorem_generators(sys, {0, 1});
        const MultiExponent g{0, 1, 1};
        REQUIRE(gs.generators.count(g) == 1);
        CHECK(gs.generators.at(g).kind == PathKind::coeff);
        CHECK(gs.generators.at(g).weighted_sum == 3);
        std::vector<Violation> viol;
        CHECK_FALSE(membership(g, sys, {0, 1}, &viol));
        REQUIRE(viol.size() == 1);
        CHECK(viol[0].path->kind == PathKind::coeff);
    }
}

TEST_CASE("generator soundness and minimal violation") {
    for (const auto& sys :
         {build_system(LieType{Family::A, 3}, 1), build_system(LieType{Family::C, 2}, 1),
          build_system(LieType{Family::B, 3}, 1), build_system(LieType{Family::D, 4}, 1)}) {
        for (const auto& lam : dominant_weights_up_to(sys.type.rank, 2)) {
            const auto gs = theorem_generators(sys, lam);
            const auto ineqs = instantiate(sys, lam);
            for (const auto& [g, info] : gs.generators) {
                CHECK_FALSE(membership(g, sys, lam));
                // the generator's own path inequality is violated, and
                // decreasing any supported coordinate restores it
                const Inequality* own = nullptr;
                for (const auto& iq : ineqs)
                    if (iq.source->id == info.path_id) own = &iq;
                REQUIRE(own != nullptr);
                long long lhs = 0;
                for (size_t c = 0; c < g.size(); ++c)
                    lhs += static_cast<long long>(own->coeffs[c]) * g[c];
                CHECK(lhs > own->rhs);
                for (size_t c = 0; c < g.size(); ++c) {
                    if (g[c] == 0) continue;
                    CHECK(lhs - own->coeffs[c] <= own->rhs);
                }
            }
        }
    }
}

TEST_CASE("complement minimal generators") {
    SUBCASE("lambda = 0: exactly the unit vectors") {
        System sys = build_system(LieType{Family::C, 2}, 1);
        const Weight zero{0, 0};
        const auto mins = complement_min_generators(sys, zero, default_box(sys, zero, 2));
        std::set<MultiExponent> expect{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        CHECK(mins == expect);
    }
    SUBCASE("C2 at omega_2 contains (0,1,1) and (0,3,0)") {
        System sys = build_system(LieType{Family::C, 2}, 1);
        const auto mins = complement_min_generators(sys, {0, 1}, default_box(sys, {0, 1}, 2));
        CHECK(mins.count({0, 1, 1}) == 1);
        CHECK(mins.count({0, 3, 0}) == 1);
        CHECK(mins.count({1, 0, 0}) == 1);
    }
    SUBCASE("box too small is rejected") {
        System sys = build_system(LieType{Family::A, 2}, 1);
        CHECK_THROWS_AS(complement_min_generators(sys, {1, 1}, std::vector<int>{1, 1, 1}),
                        std::invalid_argument);
    }
    SUBCASE("box independence (pad 2 vs pad 3)") {
        for (const auto& sys :
             {build_system(LieType{Family::A, 3}, 1), build_system(LieType{Family::C, 2}, 1),
              build_system(LieType{Family::B, 3}, 1)}) {
            for (const auto& lam : dominant_weights_up_to(sys.type.rank, 2)) {
                const auto m2 = complement_min_generators(sys, lam, default_box(sys, lam, 2));
                const auto m3 = complement_min_generators(sys, lam, default_box(sys, lam, 3));
                CHECK(m2 == m3);
            }
        }
    }
}

TEST_CASE("up-set equality") {
    SUBCASE("lambda = 0") {
        System sys = build_system(LieType{Family::B, 2}, 1);
        const Weight zero{0, 0};
        CHECK(upset_equality(sys, zero, default_box(sys, zero, 2)).equal);
    }
    SUBCASE("A3 omega_1 + omega_2 (Theorem (ii) verbatim)") {
        System sys = build_system(LieType{Family::A, 3}, 1);
        const Weight lam{1, 1, 0};
        const auto rep = upset_equality(sys, lam, default_box(sys, lam, 2));
        CHECK(rep.equal);
        CHECK(rep.uncovered.empty());
        CHECK(rep.unsound.empty());
    }
    SUBCASE("C3 omega_2 under the weighted-sum reading") {
        System sys = build_system(LieType{Family::C, 3}, 1);
        const Weight lam{0, 1, 0};
        CHECK(upset_equality(sys, lam, default_box(sys, lam, 2)).equal);
    }
}

TEST_CASE("canonical monomial key") {
    // degree-0 key
    CHECK(canonical_monomial_key({0, 0, 0}) == std::vector<long long>{0, 0, 0, 0});
    // C3 chain order: a[1,1] a[1,2] a[1,3] a[1,-2] a[1,-1]; the reverse-chain
    // reading puts f_{1,-1} first, so its unit sorts above f_{1,-2}'s.
    const MultiExponent u_bar1{0, 0, 0, 0, 1};
    const MultiExponent u_bar2{0, 0, 0, 1, 0};
    CHECK(canonical_monomial_key(u_bar1) > canonical_monomial_key(u_bar2));
    // equal degree compares by first differing exponent in the reverse order
    CHECK(canonical_monomial_key({1, 0, 0, 0, 1}) > canonical_monomial_key({0, 1, 1, 0, 0}));
    // degree dominates
    CHECK(canonical_monomial_key({2, 0, 0, 0, 0}) > canonical_monomial_key({0, 0, 0, 0, 1}));
}
