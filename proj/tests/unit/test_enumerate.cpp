#include <homex/canonical.hpp>
#include <homex/enumerate.hpp>
#include <homex/families.hpp>

#include <catch_amalgamated.hpp>

#include <set>

using namespace homex;

TEST_CASE("unrestricted enumeration matches the classical graph counts")
{
    // Isomorphism classes of simple graphs on 1..8 vertices.
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) {
        INFO("n = " << n);
        REQUIRE(enumerate_graphs(n, 0, false).size() == all[static_cast<std::size_t>(n) - 1]);
    }
}

TEST_CASE("connected enumeration matches the classical connected counts")
{
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        INFO("n = " << n);
        auto classes = enumerate_graphs(n, 0, true).size();
        REQUIRE(classes == connected[static_cast<std::size_t>(n) - 1]);
    }
}

TEST_CASE("minimum degree filters")
{
    REQUIRE(enumerate_graphs(3, 2, true).size() == 1);    // just the triangle

    // On four vertices: the cycle, the diamond, and the complete graph.
    auto quads = enumerate_graphs(4, 2, true);
    REQUIRE(quads.size() == 3);
    std::set<std::string> keys;
    for (const Graph & g : quads) {
        REQUIRE(degree_profile(g).min_degree >= 2);
        REQUIRE(is_connected(g));
        keys.insert(canonical_form(g).key);
    }
    REQUIRE(keys.count(canonical_form(families::cycle(4)).key) == 1);
    REQUIRE(keys.count(canonical_form(families::complete(4, false)).key) == 1);
    Graph diamond = families::add_edge(families::cycle(4), 0, 2);
    REQUIRE(keys.count(canonical_form(diamond).key) == 1);
    REQUIRE(keys.size() == 3);

    REQUIRE(enumerate_graphs(6, 2, true).size() == 61);
    REQUIRE(enumerate_graphs(7, 2, true).size() == 507);
}

TEST_CASE("results arrive deduplicated, canonical, and deterministically ordered")
{
    auto first = enumerate_graphs(6, 2, true);
    auto second = enumerate_graphs(6, 2, true);
    REQUIRE(first.size() == second.size());
    std::set<std::string> keys;
    for (std::size_t i = 0; i < first.size(); ++i) {
        REQUIRE(first[i] == second[i]);
        REQUIRE(canonical_graph(first[i]) == first[i]);   // stored as canonical representatives
        keys.insert(canonical_form(first[i]).key);
    }
    REQUIRE(keys.size() == first.size());
}

TEST_CASE("connectivity-level filter matches the classical 2-connected counts")
{
    // 2-connected graphs on 3..6 vertices: 1, 3, 10, 56.
    REQUIRE(enumerate_graphs(3, 2, true, 2).size() == 1);
    REQUIRE(enumerate_graphs(4, 2, true, 2).size() == 3);
    REQUIRE(enumerate_graphs(5, 2, true, 2).size() == 10);
    REQUIRE(enumerate_graphs(6, 2, true, 2).size() == 56);
}

TEST_CASE("a high minimum degree forces a tiny family")
{
    // Min degree 7 on 9 vertices: the complement is a matching, so exactly
    // one class per matching size 0..4, and all of them are connected.
    auto dense = enumerate_graphs(9, 7, true);
    REQUIRE(dense.size() == 5);
    for (const Graph & g : dense)
        REQUIRE(degree_profile(g).min_degree >= 7);
    REQUIRE(enumerate_graphs(9, 7, false).size() == 5);
}

TEST_CASE("enumeration caps and argument checks")
{
    REQUIRE_THROWS_AS(enumerate_graphs(10, 2, true), cap_error);
    REQUIRE_THROWS_AS(enumerate_graphs(0, 0, true), usage_error);
    REQUIRE_THROWS_AS(enumerate_graphs(5, -1, true), usage_error);
}

TEST_CASE("target enumeration counts graphs with loops")
{
    // Classes of graphs with loops allowed on 1..5 vertices: 2, 6, 20, 90, 544.
    const std::vector<std::size_t> loopy = {2, 6, 20, 90, 544};
    for (int n = 1; n <= 5; ++n) {
        INFO("n = " << n);
        auto targets = enumerate_targets(n);
        REQUIRE(targets.size() == loopy[static_cast<std::size_t>(n) - 1]);
        std::set<std::string> keys;
        for (const Graph & h : targets) {
            REQUIRE(h.loops_allowed());
            keys.insert(canonical_form(h).key);
        }
        REQUIRE(keys.size() == targets.size());
    }
    REQUIRE_THROWS_AS(enumerate_targets(6), cap_error);
    REQUIRE_THROWS_AS(enumerate_targets(0), usage_error);
}
