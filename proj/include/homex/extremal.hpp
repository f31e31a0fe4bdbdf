#pragma once

#include <homex/bigint.hpp>
#include <homex/enumerate.hpp>
#include <homex/errors.hpp>
#include <homex/families.hpp>
#include <homex/graph.hpp>
#include <homex/graph_io.hpp>
#include <homex/homcount.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace homex {

struct SearchReport {
    int n = 0;
    int delta = 0;
    std::string h_description;
    std::size_t family_size = 0;
    std::vector<std::pair<std::string, BigInt>> rows;         // (graph6, count) for every scanned class
    std::vector<std::pair<std::string, BigInt>> maximizers;   // (graph6, count), all tied argmax classes
    long long runtime_millis = 0;

    const BigInt & max_count() const { return maximizers.front().second; }
};

// Scans every isomorphism class of the (n, delta) family and reports all
// tied maximizers of hom(., h).  Uniqueness matters, so ties are never
// collapsed.  Counting is split over deterministic index chunks when
// threads > 1; the report is identical for every thread count.
inline SearchReport find_maximizers(int n, int delta, const Graph & h, bool connected_only,
                                    const std::string & h_description = "", int threads = 1,
                                    std::optional<int> k_connected = std::nullopt)
{
    if (threads < 1)
        throw usage_error("thread count must be positive");
    auto started = std::chrono::steady_clock::now();
    std::vector<Graph> family = enumerate_graphs(n, delta, connected_only, k_connected);
    std::vector<BigInt> counts(family.size());
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(family.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < family.size(); ++i)
            counts[i] = count_hom(family[i], h);
    }
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < family.size(); i += workers)
                    counts[i] = count_hom(family[i], h);
            });
        for (auto & worker : pool)
            worker.join();
    }

    SearchReport report;
    report.n = n;
    report.delta = delta;
    report.h_description = h_description;
    report.family_size = family.size();
    BigInt best = -1;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (counts[i] > best)
            best = counts[i];
    for (std::size_t i = 0; i < family.size(); ++i) {
        report.rows.emplace_back(to_graph6(family[i]), counts[i]);
        if (counts[i] == best)
            report.maximizers.emplace_back(to_graph6(family[i]), counts[i]);
    }
    report.runtime_millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return report;
}

namespace detail {

// Shortest cycle inside one component mask, as an ordered vertex list.  BFS
// from every component vertex; the minimal cross-edge closure
// dist(x)+dist(y)+1 over all roots is realized by a genuine shortest cycle,
// whose two root paths share only the root.
inline std::vector<int> shortest_cycle_within(const Graph & g, std::uint64_t comp)
{
    const int n = g.vertex_count();
    int best_length = n + 1;
    std::vector<int> best_cycle;
    std::uint64_t roots = comp;
    while (roots != 0) {
        int root = std::countr_zero(roots);
        roots &= roots - 1;
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<int> queue{root};
        dist[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            std::uint64_t row = g.row(x) & comp;
            while (row != 0) {
                int y = std::countr_zero(row);
                row &= row - 1;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
                else if (y != parent[x] && y != x && dist[x] + dist[y] + 1 < best_length) {
                    best_length = dist[x] + dist[y] + 1;
                    std::vector<int> left, right;
                    for (int w = x; w != -1; w = parent[w])
                        left.push_back(w);
                    for (int w = y; w != -1; w = parent[w])
                        right.push_back(w);
                    best_cycle.assign(left.rbegin(), left.rend());      // root .. x
                    best_cycle.insert(best_cycle.end(), right.begin(), right.end() - 1);   // y .. (excl. root)
                }
            }
        }
    }
    return best_cycle;
}

// Shortest attachment path from the colored set to a cycle, inside one
// component: multi-source BFS from the vertices with a colored neighbor,
// ending at the first cycle vertex dequeued.  Returns source..attachment.
inline std::vector<int> attachment_path(const Graph & g, std::uint64_t comp, std::uint64_t colored, std::uint64_t cycle)
{
    const int n = g.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<int> queue;
    std::uint64_t seen = 0;
    for (int v = 0; v < n; ++v)
        if (((comp >> v) & 1u) && (g.row(v) & colored) != 0) {
            queue.push_back(v);
            seen |= std::uint64_t{1} << v;
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        if ((cycle >> x) & 1u) {
            std::vector<int> path;
            for (int w = x; w != -1; w = parent[w])
                path.push_back(w);
            std::reverse(path.begin(), path.end());
            return path;
        }
        std::uint64_t row = g.row(x) & comp & ~seen;
        seen |= row;
        while (row != 0) {
            int y = std::countr_zero(row);
            row &= row - 1;
            parent[y] = x;
            queue.push_back(y);
        }
    }
    return {};   // unreachable for connected g
}

}

// Certified upper bound on hom(g, h) from the iterative coloring procedure:
// a seed vertex contributes |V(h)|; a maximal path of k1 new vertices in a
// tree component contributes (D^2-1)D^{k1-2}; a cycle of k2 vertices reached
// by a t-vertex attachment path contributes D^t (D^2-1) D^{k2-3}; leftover
// isolated vertices contribute D each (D = max degree of h).  The improved
// path/cycle factors rest on the endpoint-fixed path bound, which excludes
// the fully looped complete graph and the balanced complete bipartite graph;
// for those targets every step falls back to D per vertex, which stays valid
// (every vertex colored after the seed has a colored neighbor) and is tight
// for the fully looped complete graph.  All choices are deterministic:
// smallest-vertex component, smallest leaf pair, smallest BFS tie wins.
inline BigInt structural_upper_bound(const Graph & g, const Graph & h)
{
    if (! is_connected(g))
        throw usage_error("structural bound requires a connected source");
    if (degree_profile(g).min_degree < 2)
        throw usage_error("structural bound requires minimum degree at least 2");
    const int dmax = degree_profile(h).max_degree;
    if (dmax < 2)
        throw usage_error("structural bound requires a target with maximum degree at least 2");
    const bool improved = ! is_complete_looped(h) && ! is_balanced_complete_bipartite(h);
    const BigInt step_pair = BigInt(dmax) * dmax - 1;

    BigInt bound = h.vertex_count();
    std::uint64_t colored = 1;                      // seed vertex 0
    std::uint64_t remaining = g.full_mask() & ~colored;

    while (remaining != 0) {
        std::uint64_t chosen = 0;
        for (std::uint64_t comp : connected_components_within(g, remaining))
            if (std::popcount(comp) >= 2) {
                chosen = comp;
                break;
            }
        if (chosen == 0) {
            bound *= big_pow(dmax, static_cast<unsigned>(std::popcount(remaining)));
            break;
        }

        int comp_edges = 0;
        std::uint64_t rest = chosen;
        while (rest != 0) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            comp_edges += std::popcount(g.row(v) & chosen);
        }
        comp_edges /= 2;

        if (comp_edges == std::popcount(chosen) - 1) {
            // Tree component: walk the path between the two smallest leaves.
            std::vector<int> leaves;
            rest = chosen;
            while (rest != 0) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(g.row(v) & chosen) == 1)
                    leaves.push_back(v);
            }
            int from = leaves[0], to = leaves[1];
            std::vector<int> parent(g.vertex_count(), -1);
            std::vector<int> queue{from};
            std::uint64_t seen = std::uint64_t{1} << from;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                std::uint64_t row = g.row(queue[head]) & chosen & ~seen;
                seen |= row;
                while (row != 0) {
                    int y = std::countr_zero(row);
                    row &= row - 1;
                    parent[y] = queue[head];
                    queue.push_back(y);
                }
            }
            std::uint64_t path = 0;
            int k1 = 0;
            for (int w = to; w != -1; w = parent[w]) {
                path |= std::uint64_t{1} << w;
                ++k1;
            }
            bound *= improved ? step_pair * big_pow(dmax, static_cast<unsigned>(k1 - 2))
                              : big_pow(dmax, static_cast<unsigned>(k1));
            colored |= path;
            remaining &= ~path;
        }
        else {
            // Cyclic component: attachment path at D per vertex, then the
            // one-vertex-precolored cycle factor for the rest of the cycle.
            std::vector<int> cycle = detail::shortest_cycle_within(g, chosen);
            std::uint64_t cycle_mask = 0;
            for (int v : cycle)
                cycle_mask |= std::uint64_t{1} << v;
            std::vector<int> path = detail::attachment_path(g, chosen, colored, cycle_mask);
            std::uint64_t path_mask = 0;
            for (int v : path)
                path_mask |= std::uint64_t{1} << v;
            const int k2 = static_cast<int>(cycle.size());
            BigInt factor = big_pow(dmax, static_cast<unsigned>(path.size()));
            factor *= improved ? step_pair * big_pow(dmax, static_cast<unsigned>(k2 - 3))
                               : big_pow(dmax, static_cast<unsigned>(k2 - 1));
            bound *= factor;
            colored |= path_mask | cycle_mask;
            remaining &= ~(path_mask | cycle_mask);
        }
    }
    return bound;
}

struct CommonCore {
    std::vector<int> subset;    // the delta-subset with the most common neighbors outside itself
    int common_count = 0;
};

// Exhaustive scan over delta-subsets of V(g) for the one whose members share
// the most neighbors outside the subset; this exposes the K_{delta,m}
// subgraph structure forced in dense extremal candidates.  First subset in
// lexicographic order wins ties.
inline CommonCore max_common_core(const Graph & g, int delta)
{
    if (delta < 1)
        throw usage_error("delta must be positive");
    if (delta > 4)
        throw cap_error("common core scan capped at delta 4");
    if (g.vertex_count() > 20)
        throw cap_error("common core scan capped at 20 vertices");
    if (delta > g.vertex_count())
        throw usage_error("delta exceeds the vertex count");

    CommonCore best;
    best.common_count = -1;
    std::vector<int> subset(delta);
    for (int i = 0; i < delta; ++i)
        subset[i] = i;
    while (true) {
        std::uint64_t mask = g.full_mask();
        std::uint64_t subset_mask = 0;
        for (int v : subset) {
            mask &= g.row(v);
            subset_mask |= std::uint64_t{1} << v;
        }
        int common = std::popcount(mask & ~subset_mask);
        if (common > best.common_count) {
            best.common_count = common;
            best.subset = subset;
        }
        int i = delta - 1;
        while (i >= 0 && subset[i] == g.vertex_count() - delta + i)
            --i;
        if (i < 0)
            break;
        ++subset[i];
        for (int j = i + 1; j < delta; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return best;
}

struct EdgeAdditionResult {
    bool all_strict = false;
    BigInt base_count;
    std::vector<std::pair<std::string, BigInt>> additions;   // label, count after adding that edge
    std::optional<std::string> counterexample;               // first addition that failed to decrease strictly
};

// Adds one edge to K_{delta,n-delta} in each of the two non-isomorphic ways
// (inside the small class when delta >= 2, inside the large class) and
// checks that the count strictly decreases.  Regular targets are refused:
// the decrease genuinely fails there (fully looped complete targets give
// equality).
inline EdgeAdditionResult edge_addition_test(int delta, int n, const Graph & h)
{
    if (delta < 1)
        throw usage_error("delta must be positive");
    if (n < 2 * delta)
        throw usage_error("n must be at least 2*delta");
    if (! is_connected(h))
        throw usage_error("edge addition test requires a connected target");
    if (is_regular(h))
        throw usage_error("edge addition test requires a non-regular target");

    Graph base = families::complete_bipartite(delta, n - delta);
    EdgeAdditionResult result;
    result.base_count = count_hom(base, h);
    result.all_strict = true;

    std::vector<std::pair<std::string, Graph>> candidates;
    if (delta >= 2)
        candidates.emplace_back("small-class", families::add_edge(base, 0, 1));
    if (n - delta >= 2)
        candidates.emplace_back("large-class", families::add_edge(base, delta, delta + 1));
    for (const auto & [label, graph] : candidates) {
        BigInt count = count_hom(graph, h);
        result.additions.emplace_back(label, count);
        if (! (count < result.base_count)) {
            result.all_strict = false;
            if (! result.counterexample)
                result.counterexample = label;
        }
    }
    return result;
}

}
