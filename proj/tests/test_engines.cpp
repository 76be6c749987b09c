#include <doctest.h>

#include <random>

#include "psum/bigint.hpp"
#include "psum/families.hpp"
#include "psum/graph.hpp"
#include "psum/recursive.hpp"
#include "psum/ryser.hpp"
#include "psum/sachs.hpp"

#include "oracle.hpp"

using namespace psum;

TEST_CASE("sachs weights on small graphs") {
    Graph c3 = make_cycle(3);
    CHECK(sachs_weight(c3, 0) == 1);
    CHECK(sachs_weight(c3, 1) == 0);
    CHECK(sachs_weight(c3, 2) == 3);
    CHECK(sachs_weight(c3, 3) == 2); // the triangle itself, weight 2^1
    CHECK(sachs_weight(make_cycle(4), 4) == 4); // two perfect matchings + the 4-cycle

    std::vector<Int> w = sachs_weights(make_path(4));
    CHECK(w == std::vector<Int>{1, 0, 3, 0, 1});
}

TEST_CASE("coefficients") {
    CHECK(coefficients_sachs(make_cycle(3)).coeff == std::vector<Int>{1, 0, 3, -2});
    CHECK(coefficients_sachs(make_path(2)).coeff == std::vector<Int>{1, 0, 1});
    CHECK(coefficients_sachs(make_empty(3)).coeff == std::vector<Int>{1, 0, 0, 0});
    CHECK(coefficients_sachs(Graph(0)).coeff == std::vector<Int>{1});

    Polynomial c4 = coefficients_permanent(make_cycle(4));
    CHECK(c4.coeff.size() == 5);
    CHECK(abs(c4.coeff[4]) == 4);
    CHECK(c4 == coefficients_sachs(make_cycle(4)));

    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        Graph g = testing::random_connected(rng, 2 + rng() % 7, rng() % 5);
        CHECK(coefficients_sachs(g) == coefficients_permanent(g));
    }
}

TEST_CASE("permanent on fixed matrices") {
    IntMatrix id(4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(permanent(id) == 1);

    IntMatrix ones(5);
    for (Int& x : ones.data) x = 1;
    CHECK(permanent(ones) == 120); // 5!

    IntMatrix swap2(3); // permutation matrix
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    swap2.at(2, 2) = 1;
    CHECK(permanent(swap2) == 1);

    CHECK(permanent(IntMatrix(0)) == 1);

    // permanent is invariant under transposition
    std::mt19937 rng(17);
    for (int it = 0; it < 50; ++it) {
        int d = 1 + static_cast<int>(rng() % 6);
        IntMatrix m(d), mt(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                m.at(i, j) = static_cast<int>(rng() % 4) - 1;
                mt.at(j, i) = m.at(i, j);
            }
        Int p = permanent(m);
        CHECK(p == permanent(mt));
        std::vector<std::vector<Int>> rows(static_cast<std::size_t>(d),
                                           std::vector<Int>(static_cast<std::size_t>(d)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
        CHECK(p == testing::permanent_bruteforce(rows));
    }
}

TEST_CASE("fixed permanental sums, all engines") {
    struct Row {
        Graph g;
        long long ps;
    };
    std::vector<Row> table = {
        {make_cycle(3), 6},
        {make_cycle(4), 9},
        {make_path(5), 8},
        {make_D(3, 2), 14},
        {make_B1(3, 3), 20},
        {make_B1(3, 4), 30},
        {make_B1A(3, 3, 1, B1Attach::Rim), 28},
        {make_B1A(3, 3, 1, B1Attach::Hub), 24},
        {make_B2(3, 3, 2), 100},
        {make_B2P(2), 156},
        {make_B2P(4), 408},
        {make_B3(1, 1, 0), 14},
        {make_B3(1, 1, 1), 19},
        {make_B3(1, 1, 2), 29},
        {make_B3(2, 1, 0), 21},
        {make_B3(2, 2, 0), 32},
        {make_B3(1, 3, 0), 31},
        {make_B3P(1), 20},
        {make_B3P(2), 34},
    };
    for (const Row& row : table) {
        CHECK(ps_sachs(row.g) == row.ps);
        CHECK(ps_permanent(row.g) == row.ps);
        CHECK(ps_recursive(row.g) == row.ps);
    }
}

TEST_CASE("engine agreement vs the brute-force oracle") {
    std::mt19937 rng(101);
    for (int it = 0; it < 150; ++it) {
        Graph g = testing::random_connected(rng, 2 + rng() % 7, rng() % 6);
        Int want = testing::ps_bruteforce(g);
        CHECK(ps_sachs(g) == want);
        CHECK(ps_permanent(g) == want);
        CHECK(ps_recursive(g) == want);
    }
}

TEST_CASE("paths are Fibonacci") {
    // PS(P_n) = F(n+1) under F(0)=0, F(1)=F(2)=1
    long long fibs[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610};
    for (int n = 1; n <= 14; ++n) {
        CHECK(ps_recursive(make_path(n)) == fibs[n + 1]);
        CHECK(forest_ps(make_path(n)) == fibs[n + 1]);
    }
}

TEST_CASE("multiplicativity over components") {
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        Graph a = testing::random_connected(rng, 1 + rng() % 6, rng() % 3);
        Graph b = testing::random_connected(rng, 1 + rng() % 6, rng() % 3);
        Graph u = disjoint_union(a, b);
        CHECK(ps_recursive(u) == ps_recursive(a) * ps_recursive(b));
        CHECK(ps_sachs(u) == ps_sachs(a) * ps_sachs(b));
    }
}

TEST_CASE("edge deletion identity") {
    std::mt19937 rng(13);
    int done = 0;
    while (done < 100) {
        Graph g = testing::random_connected(rng, 4 + rng() % 5, 1 + rng() % 4);
        auto edges = g.edges();
        auto [u, v] = edges[rng() % edges.size()];
        Int rhs = ps_permanent(remove_edge_copy(g, u, v));
        rhs += ps_permanent(remove_vertices(g, {u, v}));
        for (const auto& cyc : cycles_through_edge(g, u, v))
            rhs += 2 * ps_permanent(remove_vertices(g, cyc));
        CHECK(ps_permanent(g) == rhs);
        ++done;
    }
}

TEST_CASE("vertex deletion identity") {
    std::mt19937 rng(19);
    for (int it = 0; it < 100; ++it) {
        Graph g = testing::random_connected(rng, 3 + rng() % 6, rng() % 5);
        int v = static_cast<int>(rng() % static_cast<unsigned>(g.order()));
        CHECK(ps_vertex_rule(g, v) == ps_permanent(g));
    }
}

TEST_CASE("recursion is selector-independent") {
    std::mt19937 rng(29);
    for (int it = 0; it < 60; ++it) {
        Graph g = testing::random_connected(rng, 5 + rng() % 4, 1 + rng() % 3);
        Int want = ps_recursive(g);

        // pick a random cycle edge instead of the default lexicographic one
        std::mt19937 pick(rng());
        EdgeSelector sel = [&pick](const Graph& h) {
            std::vector<std::pair<int, int>> on_cycle;
            for (auto [u, v] : h.edges())
                if (!cycles_through_edge(h, u, v).empty()) on_cycle.emplace_back(u, v);
            return on_cycle[pick() % on_cycle.size()];
        };
        PsCache cache;
        CHECK(ps_recursive(g, &cache, sel) == want);

        // cache on/off agree, and a warm cache returns the same value
        PsCache warm;
        CHECK(ps_recursive(g, &warm) == want);
        CHECK(ps_recursive(g, &warm) == want);
        CHECK(cache.size() > 0);
    }
}

TEST_CASE("forest matching DP") {
    std::mt19937 rng(31);
    for (int it = 0; it < 100; ++it) {
        Graph t = testing::random_tree(rng, 1 + rng() % 12);
        if (rng() % 2) t = disjoint_union(t, testing::random_tree(rng, 1 + rng() % 4));
        CHECK(forest_ps(t) == ps_permanent(t));
    }
    CHECK_THROWS_AS(forest_ps(make_cycle(3)), std::invalid_argument);
}

TEST_CASE("order limits are enforced") {
    Graph big(kSachsOrderLimit + 1);
    for (int i = 0; i + 1 < big.order(); ++i) big.add_edge(i, i + 1);
    CHECK_THROWS_AS(sachs_weights(big), LimitError);
    CHECK_THROWS_AS(coefficients_permanent(big), LimitError);

    Graph wide(kPermanentDimLimit + 1);
    for (int i = 0; i + 1 < wide.order(); ++i) wide.add_edge(i, i + 1);
    CHECK_THROWS_AS(ps_permanent(wide), LimitError);

    // the recursive engine has no such limit on a path
    CHECK(ps_recursive(wide) > 0);
}
