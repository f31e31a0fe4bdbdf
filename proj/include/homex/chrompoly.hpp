#pragma once

#include <homex/bigint.hpp>
#include <homex/canonical.hpp>
#include <homex/errors.hpp>
#include <homex/graph.hpp>
#include <homex/polynomial.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homex {

namespace detail {

// An edge lying on a shortest cycle, found by the BFS cross-edge sweep: for
// every root, the first non-tree edge closing the smallest dist(x)+dist(y)+1
// is a candidate; the global minimum is realized by an edge on a shortest
// cycle.  Returns nothing for forests.
inline std::optional<std::pair<int, int>> shortest_cycle_edge(const Graph & g)
{
    const int n = g.vertex_count();
    int best_length = n + 1;
    std::optional<std::pair<int, int>> best_edge;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<int> queue{root};
        dist[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            std::uint64_t row = g.row(x);
            while (row != 0) {
                int y = std::countr_zero(row);
                row &= row - 1;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
                else if (y != parent[x] && y != x) {
                    int length = dist[x] + dist[y] + 1;
                    if (length < best_length) {
                        best_length = length;
                        best_edge = {std::min(x, y), std::max(x, y)};
                    }
                }
            }
        }
    }
    return best_edge;
}

inline bool is_tree(const Graph & g)
{
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

inline bool is_complete_loopless(const Graph & g)
{
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (! g.adjacent(u, v))
                return false;
    return ! g.has_any_loop();
}

// Complete multipartite detection: the complement must split into disjoint
// cliques (the parts).  Returns the part sizes, or nothing.
inline std::optional<std::vector<int>> complete_multipartite_parts(const Graph & g)
{
    const int n = g.vertex_count();
    Graph complement = Graph::simple(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (! g.adjacent(u, v))
                complement.add_edge(u, v);
    std::vector<int> sizes;
    for (std::uint64_t comp : connected_components(complement)) {
        std::uint64_t rest = comp;
        while (rest != 0) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t others = comp & ~(std::uint64_t{1} << u);
            if ((complement.row(u) & comp) != others)
                return std::nullopt;
        }
        sizes.push_back(std::popcount(comp));
    }
    return sizes;
}

// Chromatic polynomial of a complete multipartite graph: color classes never
// cross parts, so partition each part independently and then inject the
// combined blocks into the palette.  Block-count generating vectors convolve
// across parts with Stirling subset numbers per part.
inline IntPolynomial chromatic_complete_multipartite(const std::vector<int> & parts)
{
    std::vector<BigInt> blocks{1};          // blocks[t] = ways to split processed parts into t color classes
    for (int p : parts) {
        std::vector<BigInt> next(blocks.size() + p, 0);
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            if (blocks[t] == 0)
                continue;
            for (int j = 1; j <= p; ++j)
                next[t + j] += blocks[t] * stirling_subset(p, j);
        }
        blocks = std::move(next);
    }
    IntPolynomial result;
    for (std::size_t t = 1; t < blocks.size(); ++t)
        if (blocks[t] != 0)
            result += IntPolynomial::constant(blocks[t]) * falling_factorial(static_cast<int>(t));
    return result;
}

inline IntPolynomial chromatic_recursive(const Graph & g, std::map<std::string, IntPolynomial> & memo);

inline IntPolynomial chromatic_connected(const Graph & g, std::map<std::string, IntPolynomial> & memo)
{
    const int n = g.vertex_count();
    if (is_tree(g)) {
        return IntPolynomial::linear(0) * IntPolynomial::linear(-1).pow(static_cast<unsigned>(n - 1));
    }
    if (is_complete_loopless(g))
        return falling_factorial(n);
    if (auto parts = complete_multipartite_parts(g))
        return chromatic_complete_multipartite(*parts);

    std::string key = canonical_form(g).key;
    if (auto found = memo.find(key); found != memo.end())
        return found->second;

    auto edge = shortest_cycle_edge(g);
    // A connected non-tree graph always has a cycle, hence an edge to split on.
    auto [u, v] = *edge;

    Graph deleted = g;
    deleted.remove_edge(u, v);

    // Contract v into u: drop v, reattach its other neighbors to u.
    Graph contracted = Graph::simple(n - 1);
    auto relabel = [&](int w) { return w < v ? w : w - 1; };
    for (int a = 0; a < n; ++a) {
        if (a == v)
            continue;
        std::uint64_t row = g.row(a);
        while (row != 0) {
            int b = std::countr_zero(row);
            row &= row - 1;
            if (b <= a || b == v)
                continue;
            if (! contracted.adjacent(relabel(a), relabel(b)))
                contracted.add_edge(relabel(a), relabel(b));
        }
    }
    {
        std::uint64_t row = g.row(v) & ~(std::uint64_t{1} << u);
        while (row != 0) {
            int b = std::countr_zero(row);
            row &= row - 1;
            if (! contracted.adjacent(relabel(u), relabel(b)))
                contracted.add_edge(relabel(u), relabel(b));
        }
    }

    IntPolynomial result = chromatic_recursive(deleted, memo) - chromatic_recursive(contracted, memo);
    memo.emplace(std::move(key), result);
    return result;
}

inline IntPolynomial chromatic_recursive(const Graph & g, std::map<std::string, IntPolynomial> & memo)
{
    IntPolynomial product = IntPolynomial::constant(1);
    for (std::uint64_t comp : connected_components(g))
        product *= chromatic_connected(induced_subgraph(g, comp), memo);
    return product;
}

}

// Exact chromatic polynomial by deletion-contraction: split on an edge of a
// shortest cycle so tree and complete(-multipartite) base cases terminate
// quickly, memoize on canonical forms to collapse isomorphic sub-instances.
inline IntPolynomial chromatic_polynomial(const Graph & g)
{
    if (g.has_any_loop())
        throw usage_error("chromatic polynomial requires a loopless graph");
    if (g.vertex_count() > 20)
        throw cap_error("chromatic polynomial capped at 20 vertices");
    std::map<std::string, IntPolynomial> memo;
    return detail::chromatic_recursive(g, memo);
}

// Exact chromatic polynomial of K_{a,b} in closed form: partition the a-side
// into j color groups (Stirling subset numbers), inject the groups into the
// palette, then color the b-side avoiding the j used colors.
inline IntPolynomial kab_kq_exact(int a, int b)
{
    if (a < 1 || b < 1)
        throw usage_error("complete bipartite class sizes must be positive");
    if (a > 8)
        throw cap_error("kab_kq_exact capped at small class size 8");
    IntPolynomial result;
    for (int j = 1; j <= a; ++j)
        result += IntPolynomial::constant(stirling_subset(a, j)) * falling_factorial(j)
            * IntPolynomial::linear(BigInt(-j)).pow(static_cast<unsigned>(b));
    return result;
}

// The proper-coloring upper bound q(q-1)...(q-delta+1)(q-delta)^{n-delta} +
// delta^2 q^{n-1} for connected n-vertex graphs with minimum degree delta.
inline IntPolynomial kab_kq_upper_bound(int delta, int n)
{
    if (delta < 1)
        throw usage_error("delta must be positive");
    if (n < 2 * delta)
        throw usage_error("n must be at least 2*delta");
    IntPolynomial head = falling_factorial(delta) * IntPolynomial::linear(BigInt(-delta)).pow(static_cast<unsigned>(n - delta));
    std::vector<BigInt> monomial(n, 0);
    monomial[n - 1] = BigInt(delta) * delta;
    return head + IntPolynomial(std::move(monomial));
}

// Exact proper-coloring count of the joined-cliques construction:
// q(q-1)...(q-delta) choices for the copy holding the star center, then each
// remaining copy contributes (q-1)(q-1)(q-2)...(q-delta) (its specified
// vertex must avoid the center's color).
inline IntPolynomial g1_kq_formula(int delta, int n)
{
    if (delta < 2)
        throw usage_error("delta must be at least 2");
    if (n < 1 || n % (delta + 1) != 0)
        throw usage_error("n must be a positive multiple of delta+1");
    IntPolynomial outer = falling_factorial(delta + 1);
    IntPolynomial bracket = IntPolynomial::linear(-1);
    for (int i = 1; i <= delta; ++i)
        bracket *= IntPolynomial::linear(BigInt(-i));
    return outer * bracket.pow(static_cast<unsigned>(n / (delta + 1) - 1));
}

// The q^{n-1} coefficient of (g1_kq_formula - kab_kq_upper_bound), exact.
// Both polynomials are monic of degree n, so this is the leading coefficient
// of the difference; it turns positive once n is large relative to delta.
inline BigRat thm2_difference_leading(int delta, int n)
{
    IntPolynomial difference = g1_kq_formula(delta, n) - kab_kq_upper_bound(delta, n);
    return BigRat(difference.coefficient(n - 1));
}

// Smallest q <= q_max where the joined-cliques construction strictly beats
// the exact K_{delta,n-delta} proper-coloring count (a stronger statement
// than beating the upper bound).  Absent when no crossover occurs in range.
inline std::optional<int> find_crossover_q(int delta, int n, int q_max)
{
    if (q_max < 1)
        throw usage_error("q_max must be positive");
    IntPolynomial joined = g1_kq_formula(delta, n);
    IntPolynomial bipartite = kab_kq_exact(delta, n - delta);
    for (int q = 1; q <= q_max; ++q)
        if (joined.eval(q) > bipartite.eval(q))
            return q;
    return std::nullopt;
}

}
