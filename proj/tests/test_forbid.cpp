#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spexlab/constructions.hpp"
#include "spexlab/forbid.hpp"
#include "test_util.hpp"

using namespace spexlab;

TEST_CASE("path containment basics") {
    CHECK(has_path(cycle(6), 6));
    CHECK_FALSE(has_path(star(6), 4));
    CHECK(has_path(star(6), 3));
    CHECK_FALSE(has_path(q_star(3), 9));
    CHECK(has_path(Graph(3), 1));
    CHECK_FALSE(has_path(Graph(3), 2));
    CHECK_THROWS_AS(has_path(Graph(3), 0), std::invalid_argument);
}

TEST_CASE("longest path orders") {
    CHECK(longest_path_order(path(7)) == 7);
    CHECK(longest_path_order(complete(4)) == 4);
    CHECK(longest_path_order(Graph(5)) == 1);
    CHECK(longest_path_order(disjoint_union(path(3), complete(4))) == 4);
    int q = longest_path_order(q_double_star());
    CHECK(q == 15);   // traceable, yet P_17-free by order
    CHECK(q < 17);
    CHECK(longest_path_order(q_star(5)) <= 12);  // order 11, P_13-free
}

TEST_CASE("longest path agrees with brute force on random graphs") {
    testutil::Rng rng(23);
    auto brute = [](const Graph& g) {
        int n = g.order(), best = n > 0 ? 1 : 0;
        std::vector<int> perm;
        auto rec = [&](auto&& self, int last, uint64_t used, int len) -> void {
            best = std::max(best, len);
            for (int v = 0; v < n; ++v) {
                if ((used >> v) & 1u) continue;
                if (last >= 0 && !g.adjacent(last, v)) continue;
                self(self, v, used | (1ull << v), len + 1);
            }
        };
        rec(rec, -1, 0, 0);
        return best;
    };
    for (int i = 0; i < 120; ++i) {
        int n = 1 + static_cast<int>(rng.below(7));
        Graph g = testutil::random_graph(rng, n, 15 + rng.below(70));
        CHECK(longest_path_order(g) == brute(g));
    }
}

TEST_CASE("fan containment") {
    CHECK(has_fan(complete(6), 4));
    CHECK_FALSE(has_fan(turan(6, 2), 4));
    CHECK_FALSE(has_fan(spex_candidate(8, 5)[0], 5));
    CHECK_THROWS_AS(has_fan(complete(6), 3), std::invalid_argument);
    // twin reduction must not break hub neighborhoods inside large joins
    Graph big = join(regular_spread(16, 3), Graph(16));
    CHECK_FALSE(has_fan(big, 9));
    Graph bad = join(star(5), Graph(9));
    CHECK(has_fan(bad, 5));   // hub of the star has degree 4 + 9 > limit
}

TEST_CASE("naive subgraph oracle") {
    CHECK(naive_subgraph_oracle(path(3), complete(3)));
    CHECK_FALSE(naive_subgraph_oracle(complete(3), turan(4, 2)));
    CHECK(naive_subgraph_oracle(cycle(4), complete(4)));
    CHECK_THROWS_AS(naive_subgraph_oracle(complete(3), complete(11)), std::invalid_argument);
}

TEST_CASE("fan detector equals oracle exhaustively on 6 vertices") {
    Graph h4 = fan(4);
    for (unsigned m = 0; m < (1u << 15); ++m) {
        Graph g(6);
        int bit = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v, ++bit)
                if ((m >> bit) & 1u) g.add_edge(u, v);
        CHECK(has_fan(g, 4) == naive_subgraph_oracle(h4, g));
    }
}

TEST_CASE("fan detector equals oracle on random graphs") {
    testutil::Rng rng(29);
    for (int i = 0; i < 500; ++i) {
        int n = 5 + static_cast<int>(rng.below(5));
        Graph g = testutil::random_graph(rng, n, 20 + rng.below(70));
        for (int ell : {4, 5, 7}) {
            if (ell > n - 1) continue;
            CHECK(has_fan(g, ell) == naive_subgraph_oracle(fan(ell), g));
        }
    }
}

TEST_CASE("monotone under edge addition") {
    testutil::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        int n = 5 + static_cast<int>(rng.below(4));
        Graph g = testutil::random_graph(rng, n, 40);
        Graph more = g;
        bool added = false;
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v)
                if (!more.adjacent(u, v)) { more.add_edge(u, v); added = true; }
        if (!added) continue;
        for (int ell = 2; ell <= n; ++ell)
            if (has_path(g, ell)) CHECK(has_path(more, ell));
        if (n >= 5 && has_fan(g, 4)) CHECK(has_fan(more, 4));
    }
}

TEST_CASE("observation biconditional on instances") {
    CHECK(check_observation1(matching(6), 1, 5));
    CHECK(check_observation1(star(4), 2, 7));   // max degree k+1 forces the fan
    CHECK(check_observation1(path(9), 3, 9));   // path present forces the fan
    CHECK(check_observation1(regular_spread(8, 3), 3, 9));
    CHECK_THROWS_AS(check_observation1(path(3), 2, 5), std::invalid_argument);
}
