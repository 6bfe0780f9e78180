#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "beikit/graph.hpp"

using namespace beikit;

namespace {

OrderedGraph path3() { return OrderedGraph(3, {{1, 2}, {2, 3}}); }
OrderedGraph star213() { return OrderedGraph(3, {{1, 2}, {1, 3}}); }
OrderedGraph cycle4() { return OrderedGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

OrderedGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            edges.emplace_back(x, y);
    return OrderedGraph(n, std::move(edges));
}

std::vector<int> vec(std::initializer_list<int> xs) { return std::vector<int>(xs); }

} // namespace

TEST_CASE("graph construction validates its invariants") {
    CHECK_THROWS_AS(OrderedGraph(2, {{1, 1}}), input_error);
    CHECK_THROWS_AS(OrderedGraph(2, {{1, 3}}), input_error);
    CHECK_THROWS_AS(OrderedGraph(2, {{0, 1}}), input_error);
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 2}, {2, 1}}), input_error);
    CHECK_THROWS_AS(OrderedGraph(-1, {}), input_error);
    OrderedGraph g(3, {{3, 1}, {2, 3}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("connected components of induced subgraphs") {
    auto g = path3();
    CHECK(connected_components(g, vec({1, 3})) ==
          std::vector<std::vector<int>>{{1}, {3}});
    CHECK(connected_components(g, vec({1, 2, 3})) ==
          std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(connected_components(cycle4(), vec({1, 3})) ==
          std::vector<std::vector<int>>{{1}, {3}});
    CHECK(connected_components(g, vec({})).empty());
    CHECK_THROWS_AS(connected_components(g, vec({4})), input_error);
}

TEST_CASE("admissible path enumeration on the named small graphs") {
    CHECK(enumerate_admissible_paths(OrderedGraph(2, {{1, 2}})) ==
          std::vector<std::vector<int>>{{1, 2}});
    // path graph: 1,2,3 fails (ii) through its interior vertex
    CHECK(enumerate_admissible_paths(path3()) ==
          std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    // star: the length-two path through the low center survives
    CHECK(enumerate_admissible_paths(star213()) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 1, 3}});
    CHECK(enumerate_admissible_paths(OrderedGraph(3, {})).empty());
}

TEST_CASE("complete graphs admit exactly their edges") {
    for (int n = 2; n <= 6; ++n) {
        auto paths = enumerate_admissible_paths(complete(n));
        CHECK(paths.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto& p : paths)
            CHECK(p.size() == 2);
    }
}

TEST_CASE("is_admissible matches the three conditions") {
    auto k3 = complete(3);
    // interior 3 > 2 is fine, but the empty shortcut 1,2 is an edge
    CHECK_FALSE(is_admissible(k3, vec({1, 3, 2})));
    CHECK(is_admissible(star213(), vec({2, 1, 3})));
    CHECK(is_admissible(k3, vec({1, 2})));
    CHECK_FALSE(is_admissible(k3, vec({2, 1})));        // endpoints reversed
    CHECK_FALSE(is_admissible(path3(), vec({1, 2, 3}))); // (ii) fails
    CHECK_FALSE(is_admissible(path3(), vec({1})));       // r = 0
    CHECK_FALSE(is_admissible(cycle4(), vec({1, 2, 1, 2}))); // not injective
    CHECK_THROWS_AS(is_admissible(path3(), vec({1, 3})), input_error); // not a walk
    CHECK_THROWS_AS(is_admissible(path3(), std::vector<int>{}), input_error);
}

TEST_CASE("every enumerated path passes the admissibility re-check") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (rng() % 2)
                    edges.emplace_back(x, y);
        OrderedGraph g(n, std::move(edges));
        auto paths = enumerate_admissible_paths(g);
        std::set<std::vector<int>> unique(paths.begin(), paths.end());
        CHECK(unique.size() == paths.size()); // duplicate-free
        for (const auto& p : paths)
            CHECK(is_admissible(g, p));
    }
}

TEST_CASE("strictly antitone labelings of an edge") {
    auto edge = vec({1, 2});
    CHECK(enumerate_strict_antitone(edge, 2) == std::vector<std::vector<int>>{{2, 1}});
    CHECK(enumerate_strict_antitone(edge, 3) ==
          std::vector<std::vector<int>>{{2, 1}, {3, 1}, {3, 2}});
    for (int d0 = 2; d0 <= 7; ++d0)
        CHECK(enumerate_strict_antitone(edge, d0).size() ==
              static_cast<std::size_t>(d0 * (d0 - 1) / 2));
    CHECK(enumerate_strict_antitone(edge, 1).empty());
    CHECK_THROWS_AS(enumerate_strict_antitone(edge, 0), input_error);
}

TEST_CASE("strictly antitone labelings through a low interior vertex") {
    // interior vertex 1 sits below both endpoints, so its label dominates
    auto path = vec({2, 1, 3});
    auto maps = enumerate_strict_antitone(path, 2);
    CHECK(maps == std::vector<std::vector<int>>{{2, 2, 1}});
    for (const auto& kappa : maps)
        CHECK(is_strictly_pi_antitone(path, kappa));
}

TEST_CASE("antitonicity is direction-independent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int len = 2 + static_cast<int>(rng() % 4);
        std::vector<int> verts(10);
        std::iota(verts.begin(), verts.end(), 1);
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(len));
        std::vector<int> kappa(static_cast<std::size_t>(len));
        for (auto& k : kappa)
            k = 1 + static_cast<int>(rng() % 3);
        std::vector<int> rverts(verts.rbegin(), verts.rend());
        std::vector<int> rkappa(kappa.rbegin(), kappa.rend());
        CHECK(is_pi_antitone(verts, kappa) == is_pi_antitone(rverts, rkappa));
    }
}

TEST_CASE("enumerated labelings are exactly the strict antitone maps") {
    // exhaustive cross-check against the definition on a length-2 path
    auto path = vec({3, 1, 4});
    for (int d0 = 2; d0 <= 4; ++d0) {
        auto maps = enumerate_strict_antitone(path, d0);
        std::set<std::vector<int>> got(maps.begin(), maps.end());
        CHECK(got.size() == maps.size());
        std::size_t expect = 0;
        for (int a = 1; a <= d0; ++a)
            for (int b = 1; b <= d0; ++b)
                for (int c = 1; c <= d0; ++c) {
                    std::vector<int> kappa{a, b, c};
                    if (is_strictly_pi_antitone(path, kappa)) {
                        ++expect;
                        CHECK(got.count(kappa) == 1);
                    }
                }
        CHECK(maps.size() == expect);
    }
}
