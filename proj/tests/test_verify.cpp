#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spexlab/constructions.hpp"
#include "spexlab/forbid.hpp"
#include "spexlab/spectral.hpp"
#include "spexlab/verify.hpp"

#include <cmath>

using namespace spexlab;

TEST_CASE("bounded order lemma at the first feasible sizes") {
    BoundedOrderReport r9 = verify_bounded_order(3, 9);
    CHECK(r9.nearly_regular_connected > 0);
    CHECK(r9.clique_neighborhood > 0);
    CHECK(r9.all_contain_path);
    CHECK(r9.counterexamples.empty());

    BoundedOrderReport r11 = verify_bounded_order(3, 11);
    CHECK(r11.clique_neighborhood > 0);
    CHECK(r11.all_contain_path);

    // the boundary is sharp: at order 2k+1 the competitor itself is
    // clique-neighborhood nearly regular yet path-free
    CHECK_FALSE(has_path(q_star(3), 9));
    CHECK_THROWS_AS(verify_bounded_order(3, 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_bounded_order(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_bounded_order(2, 9), std::invalid_argument);
}

TEST_CASE("lower bound rows across parities") {
    // all six rows, two instances per row
    for (auto [k, n] : std::vector<std::pair<int, int>>{
             {1, 12}, {3, 20},    // odd k, n = 0 (mod 4)
             {3, 14}, {7, 30},    // odd k, n = 2 (mod 4)
             {1, 9}, {3, 21},     // odd k, n = 1 (mod 4)
             {1, 7}, {3, 19},     // odd k, n = 3 (mod 4)
             {2, 12}, {4, 20},    // even k, even n
             {2, 13}, {4, 19},    // even k, odd n
         }) {
        LowerBoundReport r = verify_lower_bounds(k, n);
        CHECK(r.pass);
        CHECK(r.fan_free);
        CHECK(r.observation_holds);
        CHECK(r.quotient_poly_matches);
        CHECK(r.diff <= 1e-9);
        long long expected_shift =
            k % 2 == 1
                ? (n % 4 == 0 ? 0 : n % 4 == 2 ? 4 : 1)
                : (n % 2 == 0 ? 0 : 1);
        CHECK(r.shift == expected_shift);
    }
}

TEST_CASE("turan-with-member comparison at the first odd sizes") {
    SpecCompareReport r = verify_spec_compare(3, 30);
    CHECK(r.feasible);
    CHECK(r.pass);
    CHECK(r.below_bound_exact);
    CHECK(r.margin > 0);
    CHECK(r.quotient_float_gap <= 1e-8);
    CHECK(r.quotient_matches_reference);

    // infeasible size: the half-order leaves no room for a regular rest
    SpecCompareReport bad = verify_spec_compare(7, 34);
    CHECK_FALSE(bad.feasible);
    CHECK_FALSE(bad.pass);
    CHECK(!bad.reason.empty());

    CHECK_THROWS_AS(verify_spec_compare(3, 32), std::invalid_argument);
    CHECK_THROWS_AS(verify_spec_compare(4, 30), std::invalid_argument);
}

TEST_CASE("side sizes beat the middle at order 30") {
    // every |L| = 15 nearly-3-regular member embedded in a complete
    // bipartite shell stays strictly below the 3-regular |L| = 16 and
    // |L| = 14 constructions, whose radius is (3 + sqrt(905)) / 2
    double side = (3.0 + std::sqrt(905.0)) / 2.0;
    auto members = nearly_regular_family_members(3, 15);
    CHECK(members.size() > 10);
    for (const Graph& m : members) {
        double rho = spectral_radius(join(m, Graph(15))).rho;
        CHECK(rho < side - 1e-9);
    }
    for (int left : {14, 16}) {
        Graph g = join(regular_spread(left, 3), Graph(30 - left));
        CHECK(spectral_radius(g).rho == doctest::Approx(side).epsilon(1e-12));
    }
}

TEST_CASE("walk lemma fixed point at the smallest size") {
    WalkLemmaReport r = verify_walk_lemma(3, 15);
    CHECK(r.family_size > r.expected_count);
    CHECK(r.expected_count > 0);
    CHECK(r.survivor_count == r.expected_count);
    CHECK(r.survivors_equal_v_family);
    CHECK(r.stable_after_level >= 5);
    CHECK_THROWS_AS(verify_walk_lemma(5, 15), std::invalid_argument);
    CHECK_THROWS_AS(verify_walk_lemma(3, 14), std::invalid_argument);
}
