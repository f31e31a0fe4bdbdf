#include <homex/canonical.hpp>
#include <homex/families.hpp>

#include <catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace homex;

namespace {

Graph petersen_standard()
{
    Graph g = Graph::simple(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);              // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);      // inner pentagram
        g.add_edge(i, 5 + i);                    // spokes
    }
    return g;
}

Graph petersen_kneser()
{
    // Vertices are the 2-subsets of {0..4} in lexicographic order, adjacent
    // exactly when disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            subsets.emplace_back(a, b);
    Graph g = Graph::simple(10);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

}

TEST_CASE("canonical form is invariant under relabeling")
{
    const auto & corpus = testsupport::corpus_200();
    for (std::size_t i = 0; i < corpus.size(); i += 7) {
        const Graph & g = corpus[i];
        std::string key = canonical_form(g).key;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Graph shuffled = testsupport::permuted_copy(g, seed * 977 + i);
            REQUIRE(canonical_form(shuffled).key == key);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs with equal degree sequences")
{
    // K_{3,3} and the triangular prism are both connected and 3-regular on 6
    // vertices but are not isomorphic.
    Graph k33 = families::complete_bipartite(3, 3);
    Graph prism = Graph::simple(6);
    for (int i = 0; i < 3; ++i) {
        prism.add_edge(i, (i + 1) % 3);
        prism.add_edge(3 + i, 3 + (i + 1) % 3);
        prism.add_edge(i, 3 + i);
    }
    REQUIRE_FALSE(are_isomorphic(k33, prism));

    // C_6 and two disjoint triangles are both 2-regular on 6 vertices.
    REQUIRE_FALSE(are_isomorphic(families::cycle(6),
                                 families::disjoint_union(families::cycle(3), families::cycle(3))));
}

TEST_CASE("canonical form distinguishes loop placement on targets")
{
    Graph end_loop = families::as_target(families::path(3));
    end_loop.add_edge(0, 0);
    Graph center_loop = families::as_target(families::path(3));
    center_loop.add_edge(1, 1);
    REQUIRE_FALSE(are_isomorphic(end_loop, center_loop));

    Graph other_end = families::as_target(families::path(3));
    other_end.add_edge(2, 2);
    REQUIRE(are_isomorphic(end_loop, other_end));
}

TEST_CASE("two classical constructions of the Petersen graph are identified")
{
    Graph a = petersen_standard();
    Graph b = petersen_kneser();
    REQUIRE(are_isomorphic(a, b));
    REQUIRE(canonical_graph(a) == canonical_graph(b));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        REQUIRE(canonical_form(testsupport::permuted_copy(a, seed)).key == canonical_form(b).key);
}

TEST_CASE("canonical graph is a fixed point and matches the labeling route")
{
    for (std::size_t i = 0; i < testsupport::corpus_200().size(); i += 13) {
        const Graph & g = testsupport::corpus_200()[i];
        Graph canon = canonical_graph(g);
        REQUIRE(canonical_graph(canon) == canon);
        REQUIRE(relabel(g, canonical_labeling(g)) == canon);
        Canonicalized both = canonicalize(g);
        REQUIRE(both.graph == canon);
        REQUIRE(both.form == canonical_form(g));
        REQUIRE(are_isomorphic(g, canon));
    }
}

TEST_CASE("isomorphism checks require matching vertex counts and loop structure")
{
    REQUIRE_FALSE(are_isomorphic(families::path(3), families::path(4)));
    Graph plain = families::as_target(families::complete(2, false));
    REQUIRE_FALSE(are_isomorphic(plain, families::h_ind()));
    REQUIRE(are_isomorphic(families::complete(4, false), families::complete(4, false)));
}
