#pragma once

// Independent reference implementations used only by tests.  Everything here
// favors obviousness over speed: plain odometer walks over the whole map
// space, 2^n subset scans, and one-subset-at-a-time labeled-graph censuses.
// None of it shares pruning or ordering logic with the library under test.

#include <homex/bigint.hpp>
#include <homex/canonical.hpp>
#include <homex/graph.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

using homex::BigInt;
using homex::Graph;

// Number of adjacency-preserving maps from g into h, by trying every one of
// the |V(h)|^|V(g)| assignments and checking every edge.
inline BigInt brute_hom(const Graph & g, const Graph & h)
{
    const int n = g.vertex_count();
    const int m = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v))
                edges.emplace_back(u, v);

    std::vector<int> map(n, 0);
    BigInt total = 0;
    while (true) {
        bool ok = true;
        for (const auto & [u, v] : edges)
            if (! h.adjacent(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok)
            total += 1;
        int i = n - 1;
        while (i >= 0 && map[i] == m - 1)
            map[i--] = 0;
        if (i < 0)
            return total;
        ++map[i];
    }
}

// Independent-set count by scanning all 2^n vertex subsets.
inline BigInt naive_independent_sets(const Graph & g)
{
    const int n = g.vertex_count();
    BigInt count = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if ((subset >> v) & 1u)
                independent = (g.row(v) & subset) == 0;
        if (independent)
            count += 1;
    }
    return count;
}

// Deterministic vertex relabeling driven by a tiny fixed LCG, so canonical
// invariance properties do not depend on any library's shuffle internals.
inline Graph permuted_copy(const Graph & g, std::uint64_t seed)
{
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    for (int i = n - 1; i > 0; --i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        int j = static_cast<int>((state >> 33) % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    Graph out = g.loops_allowed() ? Graph::target(n) : Graph::simple(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (g.adjacent(u, v))
                out.add_edge(perm[u], perm[v]);
    return out;
}

// Isomorphism-class counts obtained the slow way: walk all 2^C(n,2) labeled
// simple graphs on n vertices once, and for each (minimum degree, connected)
// filter combination collect the distinct canonical keys.  The generation
// route shares nothing with the library's vertex-augmentation enumerator.
struct EdgeSubsetCensus {
    // key: (delta, connected_only) -> number of isomorphism classes
    std::map<std::pair<int, bool>, std::size_t> classes;
};

inline EdgeSubsetCensus edge_subset_census(int n, const std::vector<int> & deltas)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);

    int min_delta = deltas.empty() ? 0 : deltas.front();
    for (int d : deltas)
        min_delta = std::min(min_delta, d);

    std::map<std::pair<int, bool>, std::set<std::string>> keys;
    for (int d : deltas) {
        keys[{d, false}];
        keys[{d, true}];
    }

    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs.size()); ++subset) {
        Graph g = Graph::simple(n);
        for (std::size_t bit = 0; bit < pairs.size(); ++bit)
            if ((subset >> bit) & 1u)
                g.add_edge(pairs[bit].first, pairs[bit].second);
        int min_degree = homex::degree_profile(g).min_degree;
        if (min_degree < min_delta)
            continue;
        std::string key = homex::canonical_form(g).key;
        bool connected = homex::is_connected(g);
        for (int d : deltas)
            if (min_degree >= d) {
                keys[{d, false}].insert(key);
                if (connected)
                    keys[{d, true}].insert(key);
            }
    }

    EdgeSubsetCensus census;
    for (const auto & [combo, set] : keys)
        census.classes[combo] = set.size();
    return census;
}

}
