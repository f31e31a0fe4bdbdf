#include <homex/extremal.hpp>
#include <homex/families.hpp>
#include <homex/graph_io.hpp>

#include <catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace homex;

TEST_CASE("maximizer scan over the degree-two family")
{
    Graph hind = families::h_ind();
    SearchReport report = find_maximizers(6, 2, hind, true, "Hind");
    REQUIRE(report.n == 6);
    REQUIRE(report.delta == 2);
    REQUIRE(report.h_description == "Hind");
    REQUIRE(report.family_size == 61);
    REQUIRE(report.rows.size() == 61);
    REQUIRE(report.maximizers.size() == 1);
    REQUIRE(report.max_count() == 19);
    REQUIRE(report.maximizers.front().first ==
            to_graph6(canonicalize(families::complete_bipartite(2, 4)).graph));

    // Every row's count must be within the max, and the maximizers must be rows.
    for (const auto & [g6, count] : report.rows)
        REQUIRE(count <= report.max_count());
}

TEST_CASE("maximizer scans are thread-count invariant")
{
    Graph k3 = families::as_target(families::complete(3, false));
    SearchReport one = find_maximizers(6, 2, k3, true, "Kq:3", 1);
    SearchReport four = find_maximizers(6, 2, k3, true, "Kq:3", 4);
    REQUIRE(one.rows == four.rows);
    REQUIRE(one.maximizers == four.maximizers);
}

TEST_CASE("the four-clique target prefers the cycle over complete bipartite")
{
    Graph k4 = families::as_target(families::complete(4, false));
    SearchReport report = find_maximizers(8, 2, k4, true, "Kq:4");
    REQUIRE(report.max_count() == 6564);
    std::string kab = to_graph6(canonicalize(families::complete_bipartite(2, 6)).graph);
    std::string c8 = to_graph6(canonicalize(families::cycle(8)).graph);
    bool saw_cycle = false;
    for (const auto & [g6, count] : report.maximizers) {
        REQUIRE(g6 != kab);
        saw_cycle = saw_cycle || g6 == c8;
    }
    REQUIRE(saw_cycle);
}

TEST_CASE("disconnected scans extend the family")
{
    Graph hind = families::h_ind();
    SearchReport connected = find_maximizers(6, 2, hind, true);
    SearchReport all = find_maximizers(6, 2, hind, false);
    REQUIRE(all.family_size > connected.family_size);
    // Two triangles have 4^2 = 16 independent sets, still below 19.
    REQUIRE(all.max_count() == 19);
}

TEST_CASE("connectivity-filtered scans")
{
    Graph hind = families::h_ind();
    SearchReport biconnected = find_maximizers(6, 2, hind, true, "Hind", 1, 2);
    REQUIRE(biconnected.family_size == 56);
    REQUIRE(biconnected.max_count() == 19);   // K_{2,4} is 2-connected
}

TEST_CASE("structural upper bound certifies counts")
{
    Graph k3 = families::as_target(families::complete(3, false));
    REQUIRE(structural_upper_bound(families::cycle(6), k3) == 72);
    REQUIRE(count_hom(families::cycle(6), k3) == 66);

    for (const Graph & g : testsupport::corpus_200()) {
        if (degree_profile(g).min_degree < 2 || ! is_connected(g) || g.vertex_count() > 7)
            continue;
        for (const auto & [name, h] : testsupport::standard_targets()) {
            INFO(to_graph6(g) << " into " << name);
            REQUIRE(count_hom(g, h) <= structural_upper_bound(g, h));
        }
    }
}

TEST_CASE("structural upper bound is exact for the fully looped clique")
{
    // Every map is admissible there, so the bound must close to equality.
    Graph looped2 = families::complete(2, true);
    REQUIRE(structural_upper_bound(families::cycle(6), looped2) == 64);
    REQUIRE(count_hom(families::cycle(6), looped2) == 64);
    REQUIRE(structural_upper_bound(families::complete(4, false), looped2) == 16);
}

TEST_CASE("structural upper bound input validation")
{
    Graph k3 = families::as_target(families::complete(3, false));
    REQUIRE_THROWS_AS(structural_upper_bound(families::path(4), k3), usage_error);      // degree-1 ends
    Graph split = families::disjoint_union(families::cycle(3), families::cycle(3));
    REQUIRE_THROWS_AS(structural_upper_bound(split, k3), usage_error);                  // disconnected
    Graph tiny = Graph::target(1);
    tiny.add_edge(0, 0);
    REQUIRE_THROWS_AS(structural_upper_bound(families::cycle(3), tiny), usage_error);   // Delta < 2
}

TEST_CASE("largest common neighborhood cores")
{
    CommonCore kab = max_common_core(families::complete_bipartite(2, 4), 2);
    REQUIRE(kab.common_count == 4);
    REQUIRE(kab.subset == std::vector<int>{0, 1});

    CommonCore cyc = max_common_core(families::cycle(6), 2);
    REQUIRE(cyc.common_count == 1);
    REQUIRE(cyc.subset == std::vector<int>{0, 2});

    REQUIRE(max_common_core(families::g1(6, 2), 2).common_count == 1);

    REQUIRE_THROWS_AS(max_common_core(families::cycle(6), 5), cap_error);
    REQUIRE_THROWS_AS(max_common_core(Graph::simple(21), 2), cap_error);
    REQUIRE_THROWS_AS(max_common_core(families::path(3), 4), usage_error);
}

TEST_CASE("adding any edge to the balanced star family strictly lowers the count")
{
    Graph hind = families::h_ind();
    EdgeAdditionResult r = edge_addition_test(2, 6, hind);
    REQUIRE(r.all_strict);
    REQUIRE(r.base_count == 19);
    REQUIRE(r.additions.size() == 2);
    REQUIRE(r.additions[0].second == 18);   // edge inside the small class
    REQUIRE(r.additions[1].second == 15);   // edge inside the large class
    REQUIRE_FALSE(r.counterexample.has_value());

    Graph p3t = families::as_target(families::path(3));
    EdgeAdditionResult second = edge_addition_test(2, 6, p3t);
    REQUIRE(second.all_strict);
    REQUIRE(second.base_count == 20);
    for (const auto & [label, count] : second.additions)
        REQUIRE(count < second.base_count);

    // The small class of K_{1,n-1} has no room for an edge.
    EdgeAdditionResult star = edge_addition_test(1, 5, hind);
    REQUIRE(star.additions.size() == 1);
    REQUIRE(star.all_strict);

    // Regular targets are refused: the decrease genuinely fails there.
    Graph k3 = families::as_target(families::complete(3, false));
    REQUIRE_THROWS_AS(edge_addition_test(2, 6, k3), usage_error);
}
