#pragma once

#include <homex/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace homex {

// Undirected graph on dense vertex indices 0..n-1, adjacency stored as one
// 64-bit mask per vertex (bit v of row u set iff u ~ v).  The 64-vertex cap
// is a deliberate trade: neighbor-set intersection, the hot operation in
// homomorphism counting, becomes a single word AND.
//
// Loops live on the diagonal and are only legal on target graphs (H); source
// graphs (G) are simple and loopless.  A loop contributes exactly one to the
// degree, which is why degree(v) is a plain popcount of the row.
class Graph {
public:
    static constexpr int max_vertices = 64;

    static Graph simple(int n) { return Graph(n, false); }
    static Graph target(int n) { return Graph(n, true); }

    int vertex_count() const { return n_; }
    bool loops_allowed() const { return loops_allowed_; }

    std::uint64_t row(int v) const
    {
        check_vertex(v);
        return rows_[v];
    }

    // Mask with one bit per vertex of the graph.
    std::uint64_t full_mask() const
    {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    bool adjacent(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        return (rows_[u] >> v) & 1u;
    }

    bool has_loop(int v) const
    {
        check_vertex(v);
        return (rows_[v] >> v) & 1u;
    }

    bool has_any_loop() const
    {
        for (int v = 0; v < n_; ++v)
            if ((rows_[v] >> v) & 1u)
                return true;
        return false;
    }

    // Idempotent on repeated insertion; u == v adds a loop and is rejected on
    // loopless graphs.  Strict duplicate checking belongs to the callers that
    // need it (H-format parsing, the families::add_edge constructor).
    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v && ! loops_allowed_)
            throw usage_error("loop on a source graph (vertex " + std::to_string(u) + ")");
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }

    int degree(int v) const
    {
        check_vertex(v);
        return std::popcount(rows_[v]);
    }

    int edge_count() const
    {
        int twice_nonloop = 0, loops = 0;
        for (int v = 0; v < n_; ++v) {
            loops += (rows_[v] >> v) & 1u;
            twice_nonloop += std::popcount(rows_[v] & ~(std::uint64_t{1} << v));
        }
        return twice_nonloop / 2 + loops;
    }

    int loop_count() const
    {
        int loops = 0;
        for (int v = 0; v < n_; ++v)
            loops += (rows_[v] >> v) & 1u;
        return loops;
    }

    bool operator==(const Graph & other) const
    {
        return n_ == other.n_ && loops_allowed_ == other.loops_allowed_ &&
            std::equal(rows_.begin(), rows_.end(), other.rows_.begin());
    }

private:
    Graph(int n, bool loops_allowed) : n_(n), loops_allowed_(loops_allowed), rows_(static_cast<std::size_t>(n), 0)
    {
        if (n < 1)
            throw usage_error("empty graph rejected");
        if (n > max_vertices)
            throw cap_error("graph has " + std::to_string(n) + " vertices, cap is " + std::to_string(max_vertices));
    }

    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw usage_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    int n_;
    bool loops_allowed_;
    std::vector<std::uint64_t> rows_;
};

struct DegreeProfile {
    std::vector<int> degrees;
    int max_degree;
    int min_degree;
};

inline DegreeProfile degree_profile(const Graph & g)
{
    DegreeProfile p;
    p.degrees.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        p.degrees.push_back(g.degree(v));
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
    return p;
}

inline bool is_regular(const Graph & g)
{
    auto p = degree_profile(g);
    return p.max_degree == p.min_degree;
}

// Common neighborhood of a tuple of vertices of h (a loop at v puts v into
// its own neighborhood).  Returned as a mask over V(h).
inline std::uint64_t common_neighbors_mask(const Graph & h, const std::vector<int> & tuple)
{
    if (tuple.empty())
        throw usage_error("common_neighbors: empty tuple");
    std::uint64_t mask = h.full_mask();
    for (int v : tuple)
        mask &= h.row(v);
    return mask;
}

inline std::vector<int> common_neighbors(const Graph & h, const std::vector<int> & tuple)
{
    std::uint64_t mask = common_neighbors_mask(h, tuple);
    std::vector<int> result;
    for (int v = 0; v < h.vertex_count(); ++v)
        if ((mask >> v) & 1u)
            result.push_back(v);
    return result;
}

// Vertex set of the component containing start, as a mask.  Loops never
// affect connectivity.
inline std::uint64_t component_mask(const Graph & g, int start)
{
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen & g.full_mask();
}

inline bool is_connected(const Graph & g)
{
    return component_mask(g, 0) == g.full_mask();
}

inline std::vector<std::uint64_t> connected_components(const Graph & g)
{
    std::vector<std::uint64_t> components;
    std::uint64_t remaining = g.full_mask();
    while (remaining != 0) {
        int start = std::countr_zero(remaining);
        std::uint64_t comp = component_mask(g, start);
        components.push_back(comp);
        remaining &= ~comp;
    }
    return components;
}

// Component helpers restricted to an allowed vertex mask (traversal never
// leaves the mask), for procedures that work on induced subgraphs in place.
inline std::uint64_t component_mask_within(const Graph & g, int start, std::uint64_t allowed)
{
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v) & allowed;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen & allowed;
}

inline std::vector<std::uint64_t> connected_components_within(const Graph & g, std::uint64_t allowed)
{
    std::vector<std::uint64_t> components;
    std::uint64_t remaining = allowed;
    while (remaining != 0) {
        int start = std::countr_zero(remaining);
        std::uint64_t comp = component_mask_within(g, start, allowed);
        components.push_back(comp);
        remaining &= ~comp;
    }
    return components;
}

// Induced subgraph on the mask's vertices, relabeled densely in ascending
// original order.  old_labels, when given, receives the original index of
// each new vertex.
inline Graph induced_subgraph(const Graph & g, std::uint64_t mask, std::vector<int> * old_labels = nullptr)
{
    std::vector<int> vertices;
    std::uint64_t rest = mask;
    while (rest != 0) {
        vertices.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    Graph out = g.loops_allowed() ? Graph::target(static_cast<int>(vertices.size()))
                                  : Graph::simple(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_labels != nullptr)
        *old_labels = std::move(vertices);
    return out;
}

namespace detail {

// Max number of internally vertex-disjoint s-t paths, capped at `want`.
// Standard vertex-split unit-capacity flow; s and t themselves are uncapped.
inline int vertex_disjoint_paths(const Graph & g, int s, int t, int want)
{
    const int n = g.vertex_count();
    const int nodes = 2 * n;  // 2v = in, 2v+1 = out
    std::vector<signed char> cap(static_cast<std::size_t>(nodes) * nodes, 0);
    auto at = [&](int a, int b) -> signed char & { return cap[static_cast<std::size_t>(a) * nodes + b]; };
    for (int v = 0; v < n; ++v)
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? 2 : 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                at(2 * u + 1, 2 * v) = 1;
                at(2 * v + 1, 2 * u) = 1;
            }
    // s/t internal capacity must not bind; `want` paths suffice.
    at(2 * s, 2 * s + 1) = static_cast<signed char>(std::min(want + 1, 127));
    at(2 * t, 2 * t + 1) = static_cast<signed char>(std::min(want + 1, 127));

    int flow = 0;
    std::vector<int> parent(nodes);
    while (flow < want) {
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<int> queue{2 * s + 1};
        parent[2 * s + 1] = 2 * s + 1;
        for (std::size_t qi = 0; qi < queue.size() && parent[2 * t] == -1; ++qi) {
            int a = queue[qi];
            for (int b = 0; b < nodes; ++b)
                if (parent[b] == -1 && at(a, b) > 0) {
                    parent[b] = a;
                    queue.push_back(b);
                }
        }
        if (parent[2 * t] == -1)
            break;
        for (int b = 2 * t; b != 2 * s + 1; b = parent[b]) {
            --at(parent[b], b);
            ++at(b, parent[b]);
        }
        ++flow;
    }
    return flow;
}

}

// True iff g has more than k vertices and no vertex cut of size < k
// (Menger: min over nonadjacent pairs of the max vertex-disjoint path
// count; complete graphs have no such pair and connectivity n-1).
inline bool is_k_connected(const Graph & g, int k)
{
    if (k < 1)
        throw usage_error("is_k_connected: k must be positive");
    if (g.has_any_loop())
        throw usage_error("is_k_connected: source graph must be loopless");
    const int n = g.vertex_count();
    if (n <= k)
        return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (! g.adjacent(u, v) && detail::vertex_disjoint_paths(g, u, v, k) < k)
                return false;
    return true;
}

}
