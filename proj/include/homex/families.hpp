#pragma once

#include <homex/graph.hpp>
#include <homex/graph_io.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace homex {
namespace families {

inline Graph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw usage_error("complete_bipartite: both class sizes must be >= 1");
    Graph g = Graph::simple(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

// P_k has k vertices and k-1 edges.  Bounds of the form Delta^(k-delta)
// combined with Delta^(n-k) for the remaining vertices of an n-vertex graph
// are only consistent when k is the vertex count, so the whole library
// indexes paths by vertices, never edges.
inline Graph path(int k)
{
    if (k < 1)
        throw usage_error("path: need k >= 1");
    Graph g = Graph::simple(k);
    for (int v = 0; v + 1 < k; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int k)
{
    if (k < 3)
        throw usage_error("cycle: need k >= 3");
    Graph g = Graph::simple(k);
    for (int v = 0; v < k; ++v)
        g.add_edge(v, (v + 1) % k);
    return g;
}

inline Graph complete(int q, bool looped)
{
    if (q < 1)
        throw usage_error("complete: need q >= 1");
    Graph g = looped ? Graph::target(q) : Graph::simple(q);
    for (int u = 0; u < q; ++u)
        for (int v = looped ? u : u + 1; v < q; ++v)
            g.add_edge(u, v);
    return g;
}

// One edge with a loop on one endvertex; hom(G, h_ind) counts the
// independent sets of G.
inline Graph h_ind()
{
    Graph h = Graph::target(2);
    h.add_edge(0, 1);
    h.add_edge(0, 0);
    return h;
}

// A target version of a simple graph (same edges, loops permitted), so
// that family-built paths and cycles can be used as H.
inline Graph as_target(const Graph & g)
{
    Graph h = Graph::target(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v))
                h.add_edge(u, v);
    return h;
}

// n/(delta+1) disjoint copies of K_{delta+1} with the specified vertex of
// copy 0 joined by an edge to the specified vertex of every other copy.
// Vertex c*(delta+1) is the specified vertex of copy c, so the star center
// is vertex 0.  All choices of center among the specified vertices are
// isomorphic; picking a specified vertex is forced by the exact coloring
// count of this construction.
inline Graph g1(int n, int delta)
{
    if (delta < 2)
        throw usage_error("g1: need delta >= 2");
    if (n < 1 || n % (delta + 1) != 0)
        throw usage_error("g1: need (delta+1) | n");
    const int copies = n / (delta + 1);
    Graph g = Graph::simple(n);
    for (int c = 0; c < copies; ++c) {
        const int base = c * (delta + 1);
        for (int u = 0; u < delta + 1; ++u)
            for (int v = u + 1; v < delta + 1; ++v)
                g.add_edge(base + u, base + v);
    }
    for (int c = 1; c < copies; ++c)
        g.add_edge(0, c * (delta + 1));
    return g;
}

inline Graph disjoint_union(const Graph & g1, const Graph & g2)
{
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    bool loops = g1.loops_allowed() || g2.loops_allowed();
    Graph g = loops ? Graph::target(n1 + n2) : Graph::simple(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = u; v < n1; ++v)
            if (g1.adjacent(u, v))
                g.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v = u; v < n2; ++v)
            if (g2.adjacent(u, v))
                g.add_edge(n1 + u, n1 + v);
    return g;
}

// Returns a copy with the edge added; rejects loops and already-present
// edges so that "adding an edge" always means a strict supergraph.
inline Graph add_edge(const Graph & g, int u, int v)
{
    if (u == v)
        throw usage_error("add_edge: loops are not allowed on source graphs");
    if (g.adjacent(u, v))
        throw usage_error("add_edge: edge already present");
    Graph copy = g;
    copy.add_edge(u, v);
    return copy;
}

}

// CLI family syntax: "Kab:2,4", "P:7", "C:8", "Kq:5", "KqLooped:3", "Hind",
// "G1:12,3".  This is the single source of truth for constructor specs.
inline Graph parse_family_spec(const std::string & spec)
{
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::istringstream in(rest);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                int value = std::stoi(item, &used);
                if (used != item.size())
                    throw usage_error("bad family argument: " + item);
                args.push_back(value);
            }
            catch (const std::exception &) {
                throw usage_error("bad family argument in spec: " + spec);
            }
        }
    }

    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw usage_error("family " + name + " expects " + std::to_string(k) + " argument(s): " + spec);
    };

    if (name == "Kab") {
        want(2);
        return families::complete_bipartite(args[0], args[1]);
    }
    if (name == "P") {
        want(1);
        return families::path(args[0]);
    }
    if (name == "C") {
        want(1);
        return families::cycle(args[0]);
    }
    if (name == "Kq") {
        want(1);
        return families::complete(args[0], false);
    }
    if (name == "KqLooped") {
        want(1);
        return families::complete(args[0], true);
    }
    if (name == "Hind") {
        want(0);
        return families::h_ind();
    }
    if (name == "G1") {
        want(2);
        return families::g1(args[0], args[1]);
    }
    throw usage_error("unknown family: " + spec);
}

inline bool looks_like_family_spec(const std::string & spec)
{
    std::string name = spec.substr(0, spec.find(':'));
    return name == "Kab" || name == "P" || name == "C" || name == "Kq" ||
        name == "KqLooped" || name == "Hind" || name == "G1";
}

namespace detail {

inline bool read_file(const std::string & path, std::string & out)
{
    std::ifstream in(path);
    if (! in)
        return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

}

// Source graph spec: family syntax, a file containing a graph6 line, or a
// graph6 literal.
inline Graph parse_source_spec(const std::string & spec)
{
    if (looks_like_family_spec(spec)) {
        Graph g = parse_family_spec(spec);
        if (g.loops_allowed())
            g = from_graph6(to_graph6(g));  // re-read as a simple graph; throws if it has loops
        return g;
    }
    std::string contents;
    if (detail::read_file(spec, contents)) {
        std::istringstream in(contents);
        std::string line;
        if (! std::getline(in, line) || line.empty())
            throw usage_error("source graph file is empty: " + spec);
        return from_graph6(line);
    }
    return from_graph6(spec);
}

// Target graph spec: family syntax or a path to an H-format file.
inline Graph parse_target_spec(const std::string & spec)
{
    if (looks_like_family_spec(spec)) {
        Graph g = parse_family_spec(spec);
        // Families built as targets (Hind, KqLooped) keep their loops;
        // simple families get re-typed so loops become representable.
        return g.loops_allowed() ? g : families::as_target(g);
    }
    std::string contents;
    if (detail::read_file(spec, contents))
        return from_h_format(contents);
    throw usage_error("target spec is neither a family nor a readable H-format file: " + spec);
}

}
