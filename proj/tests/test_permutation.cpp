#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "errgraph/errgraph.hpp"
#include "oracles.hpp"

using namespace errgraph;

TEST_CASE("composition is right-to-left") {
    auto x = parse_cycles("(1 2)", 3);
    auto y = parse_cycles("(2 3)", 3);
    // (x*y)(j) = x(y(j)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    CHECK(format_images(x * y) == "2 3 1");
    CHECK(format_images(y * x) == "3 1 2");
}

TEST_CASE("group laws on random triples") {
    std::mt19937_64 rng(1);
    for (int n : {1, 2, 5, 9}) {
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[j] = j;
        auto rand_perm = [&] {
            std::shuffle(img.begin(), img.end(), rng);
            return Permutation::from_images(img);
        };
        for (int t = 0; t < 200; ++t) {
            auto p = rand_perm(), q = rand_perm(), r = rand_perm();
            CHECK((p * q) * r == p * (q * r));
            CHECK((p * p.inverse()).is_identity());
            CHECK(p.inverse().inverse() == p);
        }
    }
}

TEST_CASE("text formats round-trip") {
    auto p = parse_cycles("(1 2 3)(4 5)", 6);
    CHECK(format_images(p) == "2 3 1 5 4 6");
    CHECK(format_cycles(p) == "(1 2 3)(4 5)");
    CHECK(parse_images(format_images(p)) == p);
    CHECK(format_cycles(Permutation::identity(4)) == "()");
    CHECK(parse_cycles("()", 4) == Permutation::identity(4));
    CHECK(parse_cycles("(1, 2, 3)", 3) == parse_cycles("(1 2 3)", 3));
    CHECK_THROWS_AS(parse_cycles("(1 7)", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 1)", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_images("1 1 2"), std::invalid_argument);

    std::mt19937_64 rng(7);
    std::vector<int> img(8);
    for (int j = 0; j < 8; ++j) img[j] = j;
    for (int t = 0; t < 100; ++t) {
        std::shuffle(img.begin(), img.end(), rng);
        auto q = Permutation::from_images(img);
        CHECK(parse_images(format_images(q)) == q);
        CHECK(parse_cycles(format_cycles(q), 8) == q);
    }
}

TEST_CASE("cycle types and class sizes") {
    CHECK(cycle_type(parse_cycles("(1 2 3)(4 5)", 6)) == CycleType(6, {{1, 1}, {2, 1}, {3, 1}}));
    CHECK(cycle_type(Permutation::identity(4)) == CycleType(4, {{1, 4}}));
    CHECK(CycleType(5, {{1, 2}, {3, 1}}).sphere_index() == 2);
    CHECK(class_size(CycleType(4, {{4, 1}})) == 6);
    CHECK(class_size(CycleType(4, {{2, 2}})) == 3);

    for (int n : {4, 5}) {
        std::map<CycleType, long long> counted;
        for (const auto& p : oracle::all_permutations(n)) ++counted[cycle_type(p)];
        for (const auto& [ct, cnt] : counted) CHECK(class_size(ct) == cnt);
    }
}

TEST_CASE("multiplying by a transposition shifts the cycle count by one") {
    auto p = parse_cycles("(1 2)(3 4)", 4);
    CHECK(format_cycles(apply_transposition(p, Transposition(0, 2))) == "(1 4 3 2)");
    auto q = parse_cycles("(1 2 3)", 3);
    CHECK(format_cycles(apply_transposition(q, Transposition(0, 1))) == "(1 3)");

    std::mt19937_64 rng(3);
    for (int t = 0; t < 10000; ++t) {
        int n = 2 + static_cast<int>(rng() % 19);
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[j] = j;
        std::shuffle(img.begin(), img.end(), rng);
        auto p2 = Permutation::from_images(img);
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a == b) b = (b + 1) % n;
        int diff = apply_transposition(p2, Transposition(a, b)).cycle_count() - p2.cycle_count();
        CHECK((diff == 1 || diff == -1));
    }
}

TEST_CASE("cayley distance equals the sphere index, exhaustively") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& p : oracle::all_permutations(n)) {
            int d = cayley_distance(Permutation::identity(n), p);
            CHECK(d == n - p.cycle_count());
            CHECK(d == cayley_distance_from_identity(p));
        }
        // invariance: d(p,q) = d(e, p^{-1} q), spot-checked
        std::mt19937_64 rng(11);
        auto all = oracle::all_permutations(n);
        for (int t = 0; t < 500; ++t) {
            const auto& p = all[rng() % all.size()];
            const auto& q = all[rng() % all.size()];
            CHECK(cayley_distance(p, q) ==
                  cayley_distance_from_identity(p.inverse() * q));
            CHECK(cayley_distance(p, q) == cayley_distance(q, p));
        }
    }
}

TEST_CASE("class representatives per sphere") {
    auto reps = class_reps(5, 2);
    REQUIRE(reps.size() == 2);
    std::set<std::string> names;
    for (auto& ct : reps) {
        CHECK(ct.sphere_index() == 2);
        names.insert(ct.to_string());
    }
    CHECK(names == std::set<std::string>{"1^2 3^1", "1^1 2^2"});

    CHECK(class_reps(4, 0).size() == 1);
    CHECK(class_reps(4, 0)[0] == CycleType(4, {{1, 4}}));
    // i = n-1: a single n-cycle is the only type
    CHECK(class_reps(6, 5).size() == 1);
    CHECK(class_reps(6, 5)[0] == CycleType(6, {{6, 1}}));

    for (int n = 2; n <= 7; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            std::set<CycleType> expect;
            for (const auto& p : oracle::all_permutations(n))
                if (n - p.cycle_count() == i) expect.insert(cycle_type(p));
            auto got = class_reps(n, i);
            CHECK(got.size() == expect.size());
            for (auto& ct : got) CHECK(expect.count(ct) == 1);
        }
}

TEST_CASE("sphere enumeration matches filtering all permutations") {
    CHECK(enumerate_sphere(4, 2).size() == 11);
    CHECK(enumerate_sphere(5, 0).size() == 1);
    CHECK(enumerate_sphere(5, 1).size() == 10);

    for (int n = 2; n <= 7; ++n) {
        std::set<Permutation> seen;
        std::size_t total = 0;
        for (int i = 0; i <= n - 1; ++i) {
            auto sphere = enumerate_sphere(n, i);
            total += sphere.size();
            for (const auto& p : sphere) {
                CHECK(n - p.cycle_count() == i);
                CHECK(seen.insert(p).second);  // no duplicates anywhere
            }
        }
        CHECK(total == oracle::all_permutations(n).size());
    }
}

TEST_CASE("class representative lies in its class") {
    for (int n = 2; n <= 9; ++n)
        for (int i = 0; i <= n - 1; ++i)
            for (const auto& ct : class_reps(n, i)) {
                auto p = ct.representative();
                CHECK(cycle_type(p) == ct);
            }
}
