#pragma once

#include <homex/canonical.hpp>
#include <homex/errors.hpp>
#include <homex/graph.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace homex {

// Isomorph-free enumeration of n-vertex graphs with minimum degree >= delta,
// by vertex augmentation with canonical-form deduplication per level and a
// remaining-degree feasibility cut: a vertex at level k can still gain at
// most n-k neighbors, so deg(v) >= delta - (n-k) must already hold.  The cut
// is lossless because deleting one vertex from any feasible level-(k+1)
// graph lowers each remaining degree by at most one.  Output order is the
// canonical-key order, so runs are deterministic; every returned graph is
// its class's canonical representative.
inline std::vector<Graph> enumerate_graphs(int n, int delta, bool connected_only,
                                           std::optional<int> k_connected = std::nullopt)
{
    if (n < 1)
        throw usage_error("vertex count must be positive");
    if (n > 9)
        throw cap_error("graph enumeration capped at 9 vertices");
    if (delta < 0)
        throw usage_error("delta must be nonnegative");
    if (k_connected && *k_connected < 1)
        throw usage_error("connectivity order must be positive");

    std::map<std::string, Graph> level;
    if (0 >= delta - (n - 1))
        level.emplace(canonical_form(Graph::simple(1)).key, Graph::simple(1));

    for (int k = 1; k < n; ++k) {
        const int slack = n - (k + 1);
        std::map<std::string, Graph> next;
        for (const auto & [key, g] : level) {
            for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
                if (std::popcount(subset) < delta - slack)
                    continue;
                bool feasible = true;
                for (int v = 0; v < k && feasible; ++v) {
                    int gain = (subset >> v) & 1u;
                    if (g.degree(v) + gain < delta - slack)
                        feasible = false;
                }
                if (! feasible)
                    continue;
                Graph candidate = Graph::simple(k + 1);
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v)
                        if (g.adjacent(u, v))
                            candidate.add_edge(u, v);
                std::uint64_t rest = subset;
                while (rest != 0) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    candidate.add_edge(v, k);
                }
                Canonicalized canon = canonicalize(candidate);
                next.emplace(std::move(canon.form.key), std::move(canon.graph));
            }
        }
        level = std::move(next);
    }

    std::vector<Graph> out;
    for (const auto & [key, g] : level) {
        if (connected_only && ! is_connected(g))
            continue;
        if (k_connected && ! is_k_connected(g, *k_connected))
            continue;
        out.push_back(g);
    }
    return out;
}

// Isomorph-free enumeration of loop-permitting target graphs on n vertices,
// by brute force over all loop and edge subsets with canonical
// deduplication.  The subset space is 2^(n + n(n-1)/2), so the cap is tight.
inline std::vector<Graph> enumerate_targets(int n)
{
    if (n < 1)
        throw usage_error("vertex count must be positive");
    if (n > 5)
        throw cap_error("target enumeration capped at 5 vertices");
    std::vector<std::pair<int, int>> slots;
    for (int v = 0; v < n; ++v)
        slots.emplace_back(v, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::map<std::string, Graph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph candidate = Graph::target(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u)
                candidate.add_edge(slots[i].first, slots[i].second);
        Canonicalized canon = canonicalize(candidate);
        classes.emplace(std::move(canon.form.key), std::move(canon.graph));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto & [key, g] : classes)
        out.push_back(g);
    return out;
}

}
