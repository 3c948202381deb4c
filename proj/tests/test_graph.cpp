#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "errgraph/errgraph.hpp"
#include "oracles.hpp"

using namespace errgraph;

namespace {

ExplicitGraph cycle_graph(int n) {
    auto g = ExplicitGraph::empty(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

ExplicitGraph complete_graph(int n) {
    auto g = ExplicitGraph::empty(n);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
    return g;
}

ExplicitGraph hypercube(int n) { return materialize(HammingView(n, 2), 0); }

// Kneser graph on the 2-subsets of {1..5}: disjointness adjacency.
ExplicitGraph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    auto g = ExplicitGraph::empty(10);
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i != k && i != l && j != k && j != l)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

}  // namespace

TEST_CASE("spheres and balls by breadth-first search") {
    SymnTView s4(4);
    auto sp = spheres_up_to(s4, s4.identity(), 3);
    REQUIRE(sp.size() == 4);
    CHECK(sp[0].size() == 1);
    CHECK(sp[1].size() == 6);
    CHECK(sp[2].size() == 11);
    CHECK(sp[3].size() == 6);
    CHECK(ball(s4, s4.identity(), 2).size() == 18);
    // r past the diameter saturates
    CHECK(spheres_up_to(s4, s4.identity(), 10).size() == 4);

    for (auto& sphere : sp)
        for (auto& v : sphere)
            CHECK(distance(s4, s4.identity(), v) ==
                  cayley_distance_from_identity(v));
}

TEST_CASE("distance is a metric on small graphs") {
    auto g = hypercube(4);
    for (int x = 0; x < g.size(); ++x) {
        auto dx = bfs_distances(g, x);
        for (int y = 0; y < g.size(); ++y) {
            CHECK(dx[y] == bfs_distances(g, y)[x]);
            for (int z = 0; z < g.size(); ++z)
                CHECK(dx[z] <= dx[y] + bfs_distances(g, y)[z]);
        }
    }
    CHECK_THROWS_AS(distance(cycle_graph(4), 0, 2, 1), UnreachableError);
}

TEST_CASE("ball intersections") {
    SymnTView s4(4);
    auto e = s4.identity();
    CHECK(intersection_size(s4, e, parse_cycles("(1 2 3)", 4), 1) == 3);
    CHECK(intersection_size(s4, e, parse_cycles("(1 2)", 4), 1) == 2);
    // distance beyond 2r: empty intersection
    CHECK(intersection_size(s4, e, parse_cycles("(1 2 3 4)", 4), 1) == 0);
    CHECK_THROWS_AS(intersection_size(s4, e, e, 1), std::invalid_argument);
}

TEST_CASE("ball decomposition holds on random triples") {
    std::mt19937_64 rng(5);
    auto check_graph = [&](const ExplicitGraph& g, int rmax) {
        for (int t = 0; t < 200; ++t) {
            int x = static_cast<int>(rng() % g.size());
            int y = static_cast<int>(rng() % g.size());
            if (x == y) continue;
            int r = static_cast<int>(rng() % (rmax + 1));
            CHECK(ball_decomposition_check(g, x, y, r));
        }
    };
    check_graph(hypercube(4), 4);
    check_graph(petersen(), 2);
    check_graph(materialize(SymnTView(4), Permutation::identity(4)), 3);
    check_graph(cycle_graph(9), 4);
}

TEST_CASE("materialize round-trips through adjacency text") {
    auto g = petersen();
    auto h = ExplicitGraph::from_adjacency_text(g.to_adjacency_text());
    REQUIRE(h.size() == g.size());
    for (int v = 0; v < g.size(); ++v)
        for (int w = 0; w < g.size(); ++w) CHECK(g.adjacent(v, w) == h.adjacent(v, w));
    CHECK_THROWS_AS(ExplicitGraph::from_adjacency_text("0 1 2\n"), std::invalid_argument);
}

TEST_CASE("lambda and mu") {
    auto [l1, m1] = lambda_mu(hypercube(4));
    CHECK(l1 == 0);
    CHECK(m1 == 2);
    auto [l2, m2] = lambda_mu(materialize(SymnTView(5), Permutation::identity(5)));
    CHECK(l2 == 0);
    CHECK(m2 == 3);
    auto [l3, m3] = lambda_mu(petersen());
    CHECK(l3 == 0);
    CHECK(m3 == 1);
    CHECK_THROWS_AS(lambda_mu(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("pairwise ball intersection maximum vs plain double loop") {
    for (int n = 3; n <= 5; ++n) {
        auto g = materialize(SymnTView(n), Permutation::identity(n));
        for (int r = 1; r <= std::min(3, n - 1); ++r) {
            auto fast = n_of_gamma(g, r);
            auto slow = oracle::brute_n(g, r);
            CHECK(fast.value == slow.value);
            CHECK(fast.per_distance == slow.per_distance);
            // vertex-transitive shortcut agrees
            CHECK(n_of_gamma(g, r, true).value == slow.value);
        }
    }
    for (int n = 2; n <= 4; ++n) {
        auto g = hypercube(n);
        for (int r = 1; r <= n; ++r)
            CHECK(n_of_gamma(g, r).value == oracle::brute_n(g, r).value);
    }
}

TEST_CASE("radius-one maximum is max(lambda+2, mu)") {
    auto check = [](const ExplicitGraph& g) {
        auto [lambda, mu] = lambda_mu(g);
        CHECK(n_of_gamma(g, 1).value == std::max(ExactInt(lambda + 2), mu));
    };
    for (int n = 3; n <= 5; ++n) check(materialize(SymnTView(n), Permutation::identity(n)));
    for (int n = 2; n <= 5; ++n) check(hypercube(n));
    for (int n = 4; n <= 6; ++n)
        for (int w = 1; w < n; ++w) {
            auto g = materialize(JohnsonView(n, w), JohnsonView(n, w).base_vertex());
            auto d0 = bfs_distances(g, 0);
            if (*std::max_element(d0.begin(), d0.end()) >= 2) check(g);
        }
    check(petersen());
    check(cycle_graph(8));
}

TEST_CASE("doubling the radius does not shrink the adjacent-pair maximum") {
    // N_2(Gamma, r) >= N_1(Gamma, r) = 2 sum_{i<r, i = r-1 mod 2} |S_i| on
    // bipartite distance-regular examples: the hypercubes
    for (int n = 3; n <= 5; ++n) {
        auto g = hypercube(n);
        auto res = n_of_gamma(g, 2);
        CHECK(res.per_distance.at(2) >= res.per_distance.at(1));
        CHECK(res.per_distance.at(1) == 2 * n);  // 2k for triangle-free
    }
}

TEST_CASE("regularity bound (v+lambda)/2 and its equality class") {
    auto o23 = multipartite_graph(3, 2);  // octahedron
    auto bound = regular_upper_bound(6, 2, 4);
    CHECK(bound.bound == Rational(4));
    REQUIRE(bound.equality_class.has_value());
    CHECK(bound.equality_class->m == 2);
    CHECK(bound.equality_class->t == 3);
    CHECK(n_of_gamma(o23.graph, 1).value == 4);

    // Petersen: bound 5, actual 2
    auto pb = regular_upper_bound(10, 0, 3);
    CHECK(pb.bound == Rational(5));
    CHECK(!pb.equality_class.has_value());
    CHECK(n_of_gamma(petersen(), 1).value == 2);

    // Paley(13): bound 15/2, actual well below
    auto p13 = paley_graph(13);
    auto qb = regular_upper_bound(13, 2, 6);
    CHECK(qb.bound == Rational(15, 2));
    CHECK(!qb.equality_class.has_value());
    CHECK(n_of_gamma(p13.graph, 1).value == 4);

    CHECK_THROWS_AS(regular_upper_bound(5, 3, 4), std::invalid_argument);
}

TEST_CASE("second-radius lower bound from local parameters") {
    CHECK(lp_lower_bound(5, 1, 2).exact == Rational(6));   // mu = 1: k + 1
    CHECK(lp_lower_bound(5, 1, 2).floored == 6);
    CHECK(lp_lower_bound(6, 2, 2).exact == Rational(12));  // mu = 2, n1 = 2: 2k
    CHECK(lp_lower_bound(6, 3, 3).exact == Rational(14));  // 3k - 4
    CHECK(lp_lower_bound(4, 3, 4).exact == Rational(5));
    CHECK(lp_lower_bound(4, 2, 3).exact == Rational(7));
    CHECK(lp_lower_bound(5, 2, 3).exact == Rational(9));
    CHECK(lp_lower_bound(5, 2, 3).floored == 9);
    CHECK_THROWS_AS(lp_lower_bound(1, 1, 2), std::invalid_argument);
}

TEST_CASE("automorphism group orders of small graphs") {
    CHECK(brute_automorphism_count(cycle_graph(4)) == 8);
    CHECK(brute_automorphism_count(cycle_graph(7)) == 14);
    CHECK(brute_automorphism_count(complete_graph(4)) == 24);
    CHECK(brute_automorphism_count(petersen()) == 120);
    CHECK(brute_automorphism_count(materialize(SymnTView(3), Permutation::identity(3))) == 72);
    CHECK_THROWS_AS(brute_automorphism_count(cycle_graph(50)), InfeasibleError);
}
