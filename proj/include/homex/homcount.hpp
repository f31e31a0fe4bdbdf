#pragma once

#include <homex/bigint.hpp>
#include <homex/canonical.hpp>
#include <homex/errors.hpp>
#include <homex/families.hpp>
#include <homex/graph.hpp>
#include <homex/transfer.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace homex {

namespace detail {

// Traversal order for backtracking: breadth-first from a maximum-degree
// vertex of the component, so every vertex after the first is constrained by
// at least one already-colored neighbor.
inline std::vector<int> bfs_order(const Graph & g, std::uint64_t component)
{
    int start = -1, best_degree = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((component >> v) & 1u && g.degree(v) > best_degree) {
            best_degree = g.degree(v);
            start = v;
        }
    std::vector<int> order{start};
    std::uint64_t seen = std::uint64_t{1} << start;
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::uint64_t fresh = g.row(order[head]) & component & ~seen;
        seen |= fresh;
        while (fresh != 0) {
            order.push_back(std::countr_zero(fresh));
            fresh &= fresh - 1;
        }
    }
    return order;
}

struct BacktrackPlan {
    std::vector<int> order;
    // earlier_neighbors[i] lists positions j < i with order[j] adjacent to
    // order[i] in the source graph.
    std::vector<std::vector<int>> earlier_neighbors;
};

inline BacktrackPlan make_plan(const Graph & g, std::uint64_t component)
{
    BacktrackPlan plan;
    plan.order = bfs_order(g, component);
    plan.earlier_neighbors.resize(plan.order.size());
    for (std::size_t i = 0; i < plan.order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(plan.order[j], plan.order[i]))
                plan.earlier_neighbors[i].push_back(static_cast<int>(j));
    return plan;
}

inline BigInt backtrack(const Graph & h, const BacktrackPlan & plan, std::size_t pos, std::vector<int> & color)
{
    std::uint64_t mask = h.full_mask();
    for (int j : plan.earlier_neighbors[pos])
        mask &= h.row(color[j]);
    if (pos + 1 == plan.order.size())
        return std::popcount(mask);
    BigInt total = 0;
    while (mask != 0) {
        int c = std::countr_zero(mask);
        mask &= mask - 1;
        color[pos] = c;
        total += backtrack(h, plan, pos + 1, color);
    }
    return total;
}

// Counts maps of one component, with the root color restricted to
// [root_lo, root_hi) so callers can split the work deterministically.
inline BigInt count_component(const Graph & h, const BacktrackPlan & plan, int root_lo, int root_hi)
{
    std::vector<int> color(plan.order.size(), -1);
    if (plan.order.size() == 1)
        return root_hi - root_lo;
    BigInt total = 0;
    for (int c = root_lo; c < root_hi; ++c) {
        color[0] = c;
        total += backtrack(h, plan, 1, color);
    }
    return total;
}

}

// Exact number of adjacency-preserving maps from g into h.  Disconnected
// sources multiply per-component counts.  When threads > 1 the root colors
// of each component are split into contiguous blocks; exact integer addition
// makes the result independent of the split.
inline BigInt count_hom(const Graph & g, const Graph & h, int threads = 1)
{
    if (g.has_any_loop())
        throw usage_error("source graph must be loopless");
    if (threads < 1)
        throw usage_error("thread count must be positive");
    const int m = h.vertex_count();
    BigInt product = 1;
    for (std::uint64_t component : connected_components(g)) {
        detail::BacktrackPlan plan = detail::make_plan(g, component);
        BigInt component_count = 0;
        int workers = std::min(threads, m);
        if (workers == 1) {
            component_count = detail::count_component(h, plan, 0, m);
        }
        else {
            std::vector<BigInt> partial(workers, 0);
            std::vector<std::thread> pool;
            int chunk = (m + workers - 1) / workers;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    int lo = std::min(t * chunk, m);
                    int hi = std::min(lo + chunk, m);
                    partial[t] = detail::count_component(h, plan, lo, hi);
                });
            for (auto & worker : pool)
                worker.join();
            for (const auto & p : partial)
                component_count += p;
        }
        if (component_count == 0)
            return 0;
        product *= component_count;
    }
    return product;
}

// Path and cycle specializations through the transfer matrix.
inline BigInt count_hom_path(int k, const Graph & h)
{
    if (k < 1)
        throw usage_error("path vertex count must be at least 1");
    return count_walks(h, k - 1);
}

inline BigInt count_hom_cycle(int k, const Graph & h)
{
    if (k < 3)
        throw usage_error("cycle length must be at least 3");
    return count_closed_walks(h, k);
}

namespace detail {

inline std::uint64_t factorial_table(int i)
{
    static constexpr std::uint64_t table[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
    return table[i];
}

// Visits every nondecreasing tuple of the given size over [0, m) together
// with the number of ordered tuples it represents (multinomial weight).
template <typename Visit>
void for_each_multiset(int m, int size, Visit && visit)
{
    std::vector<int> tuple(size, 0);
    while (true) {
        std::uint64_t weight = factorial_table(size);
        int run = 1;
        for (int i = 1; i < size; ++i)
            if (tuple[i] == tuple[i - 1])
                ++run;
            else {
                weight /= factorial_table(run);
                run = 1;
            }
        weight /= factorial_table(run);
        visit(tuple, weight);
        int i = size - 1;
        while (i >= 0 && tuple[i] == m - 1)
            --i;
        if (i < 0)
            return;
        int next = tuple[i] + 1;
        for (int j = i; j < size; ++j)
            tuple[j] = next;
    }
}

}

// Closed form hom(K_{a,b}, h) = sum over a-tuples of h-vertices of
// (size of the tuple's common neighborhood)^b.  Summation runs over the
// smaller class; tuples are grouped by sorted multiset with multinomial
// weights to cut the |V(h)|^a factor.
inline BigInt count_hom_complete_bipartite(int a, int b, const Graph & h)
{
    if (a < 1 || b < 1)
        throw usage_error("complete bipartite class sizes must be positive");
    if (a > b)
        std::swap(a, b);
    if (a > 6)
        throw cap_error("complete bipartite closed form capped at small class size 6");
    BigInt total = 0;
    detail::for_each_multiset(h.vertex_count(), a, [&](const std::vector<int> & tuple, std::uint64_t weight) {
        std::uint64_t mask = h.full_mask();
        for (int v : tuple)
            mask &= h.row(v);
        int common = std::popcount(mask);
        if (common > 0)
            total += BigInt(weight) * big_pow(common, static_cast<unsigned>(b));
    });
    return total;
}

struct SdeltaResult {
    BigInt s;                                          // ordered tuples whose common neighborhood has size exactly Δ
    int delta_max = 0;                                 // Δ of the target
    std::optional<std::vector<std::vector<int>>> witnesses;
};

// Counts the ordered delta-tuples of h-vertices whose common neighborhood
// has size exactly Δ.  Witness materialization walks the full ordered tuple
// space and is capped; the count alone uses the grouped multiset walk.
inline SdeltaResult s_delta(const Graph & h, int delta, bool with_witnesses = false)
{
    if (delta < 1)
        throw usage_error("delta must be positive");
    const int m = h.vertex_count();
    const int dmax = degree_profile(h).max_degree;
    SdeltaResult result;
    result.delta_max = dmax;
    if (with_witnesses) {
        double tuples = std::pow(static_cast<double>(m), delta);
        if (tuples > 2e7)
            throw cap_error("witness materialization capped at 2e7 ordered tuples");
        result.witnesses = std::vector<std::vector<int>>{};
        std::vector<int> tuple(delta, 0);
        while (true) {
            std::uint64_t mask = h.full_mask();
            for (int v : tuple)
                mask &= h.row(v);
            if (std::popcount(mask) == dmax) {
                result.s += 1;
                result.witnesses->push_back(tuple);
            }
            int i = delta - 1;
            while (i >= 0 && tuple[i] == m - 1)
                --i;
            if (i < 0)
                break;
            ++tuple[i];
            for (int j = i + 1; j < delta; ++j)
                tuple[j] = 0;
        }
        return result;
    }
    if (delta > 8)
        throw cap_error("s_delta capped at delta 8");
    detail::for_each_multiset(m, delta, [&](const std::vector<int> & tuple, std::uint64_t weight) {
        std::uint64_t mask = h.full_mask();
        for (int v : tuple)
            mask &= h.row(v);
        if (std::popcount(mask) == dmax)
            result.s += weight;
    });
    return result;
}

// The guaranteed floor s(δ,h)·Δ^{n−δ} on hom(K_{δ,n−δ}, h): color the small
// class with a tuple whose common neighborhood is a full Δ-set, then color
// each large-class vertex independently inside that neighborhood.
inline BigInt lower_bound_eq1(int delta, int n, const Graph & h)
{
    if (delta < 1)
        throw usage_error("delta must be positive");
    if (n < 2 * delta)
        throw usage_error("n must be at least 2*delta");
    const int dmax = degree_profile(h).max_degree;
    if (dmax < 1)
        throw usage_error("target must have maximum degree at least 1");
    return s_delta(h, delta).s * big_pow(dmax, static_cast<unsigned>(n - delta));
}

// Smallest ell such that hom(P_k, h) < Δ^{k−δ} for every k in [ell, k_max].
// The comparison is hom·Δ^δ < Δ^k so no negative exponents arise.  Absent
// when the strict inequality still fails at k_max itself.
inline std::optional<int> find_ell(const Graph & h, int delta, int k_max)
{
    if (! is_connected(h))
        throw usage_error("find_ell requires a connected target");
    if (is_regular(h))
        throw usage_error("find_ell requires a non-regular target");
    if (delta < 1)
        throw usage_error("delta must be positive");
    if (k_max < 1)
        throw usage_error("k_max must be positive");
    const int m = h.vertex_count();
    const int dmax = degree_profile(h).max_degree;
    TransferMatrix matrix(h);
    std::vector<BigInt> walks(m, 1);           // column sums of A^{k-1}, starting at k = 1
    BigInt scale = big_pow(dmax, static_cast<unsigned>(delta));
    BigInt power = dmax;                       // Δ^k, starting at k = 1
    int last_failure = 0;
    for (int k = 1; k <= k_max; ++k) {
        BigInt hom_pk = 0;
        for (const auto & w : walks)
            hom_pk += w;
        if (! (hom_pk * scale < power))
            last_failure = k;
        if (k < k_max) {
            walks = matrix.apply(walks);
            power *= dmax;
        }
    }
    if (last_failure == k_max)
        return std::nullopt;
    return last_failure + 1;
}

struct SpectralMargin {
    double rho = 0.0;      // adjacency spectral radius, certified enclosure width <= 1e-9
    int delta_max = 0;
};

// Power iteration with a Collatz-Wielandt enclosure on A+I; the identity
// shift makes the iteration matrix primitive for any connected target, so
// the min/max Rayleigh-style ratios converge to the same limit.  This is the
// only floating-point surface in the library and is diagnostic only.
inline SpectralMargin spectral_margin(const Graph & h)
{
    if (! is_connected(h))
        throw usage_error("spectral_margin requires a connected target");
    const int m = h.vertex_count();
    SpectralMargin result;
    result.delta_max = degree_profile(h).max_degree;
    if (m == 1) {
        result.rho = h.has_loop(0) ? 1.0 : 0.0;
        return result;
    }
    std::vector<double> v(m, 1.0), w(m, 0.0);
    for (int iteration = 0; iteration < 500000; ++iteration) {
        for (int i = 0; i < m; ++i) {
            double sum = v[i];
            std::uint64_t row = h.row(i);
            while (row != 0) {
                int j = std::countr_zero(row);
                row &= row - 1;
                sum += v[j];
            }
            w[i] = sum;
        }
        double lo = w[0] / v[0], hi = lo;
        for (int i = 1; i < m; ++i) {
            double ratio = w[i] / v[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo <= 1e-9) {
            result.rho = (lo + hi) / 2.0 - 1.0;
            return result;
        }
        double norm = 0.0;
        for (double x : w)
            norm = std::max(norm, x);
        for (int i = 0; i < m; ++i)
            v[i] = w[i] / norm;
    }
    throw std::runtime_error("spectral_margin failed to converge within the iteration cap");
}

// The two target families for which the endpoint-fixed path bound fails.
inline bool is_complete_looped(const Graph & h)
{
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u; v < h.vertex_count(); ++v)
            if (! h.adjacent(u, v))
                return false;
    return true;
}

inline bool is_balanced_complete_bipartite(const Graph & h)
{
    const int m = h.vertex_count();
    if (m % 2 != 0 || h.has_any_loop())
        return false;
    Graph reference = families::as_target(families::complete_bipartite(m / 2, m / 2));
    return are_isomorphic(h, reference);
}

struct EndpointBoundResult {
    bool ok = false;             // every endpoint-fixed path count within the bound
    bool cycle_ok = false;       // one-vertex-precolored cycle counts (diagonal) within the bound
    BigInt max_entry;
    BigInt max_diagonal;
    BigInt bound;                // (Δ²−1)·Δ^{k−4}
};

// Verifies that the number of h-colorings of the k-vertex path with both
// endpoints fixed never exceeds (Δ²−1)Δ^{k−4}, i.e. that every entry of the
// (k−1)-th adjacency power is within the bound.  The diagonal doubles as the
// count of colorings of the (k−1)-cycle with one vertex pre-colored.  The
// bound genuinely fails for the fully looped complete graph and for the
// balanced complete bipartite graph, so those targets are refused.
inline EndpointBoundResult endpoint_bound_check(const Graph & h, int k)
{
    if (k < 4)
        throw usage_error("endpoint bound requires a path on at least 4 vertices");
    if (is_complete_looped(h))
        throw usage_error("endpoint bound excludes the fully looped complete graph");
    if (is_balanced_complete_bipartite(h))
        throw usage_error("endpoint bound excludes the balanced complete bipartite graph");
    const int dmax = degree_profile(h).max_degree;
    EndpointBoundResult result;
    result.bound = BigInt(dmax) * dmax - 1;
    result.bound *= big_pow(dmax, static_cast<unsigned>(k - 4));
    TransferMatrix power = TransferMatrix(h).power(static_cast<unsigned long long>(k) - 1);
    for (int i = 0; i < h.vertex_count(); ++i)
        for (int j = 0; j < h.vertex_count(); ++j) {
            result.max_entry = std::max(result.max_entry, power.at(i, j));
            if (i == j)
                result.max_diagonal = std::max(result.max_diagonal, power.at(i, j));
        }
    result.ok = result.max_entry <= result.bound;
    result.cycle_ok = result.max_diagonal <= result.bound;
    return result;
}

}
