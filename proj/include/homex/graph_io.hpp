#pragma once

#include <homex/graph.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace homex {

// graph6 (McKay's format) for simple loopless graphs.  Only the short form
// (n <= 62) and the 4-byte long form are needed under the 64-vertex cap.

inline std::string to_graph6(const Graph & g)
{
    if (g.has_any_loop())
        throw usage_error("graph6 cannot encode loops");
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    }
    else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled != 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

inline Graph from_graph6(const std::string & text)
{
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw usage_error("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126)
            throw usage_error("graph6: invalid byte at position " + std::to_string(pos - 1));
        return c - 63;
    };

    int n;
    int first = next();
    if (first < 63) {
        n = first;
    }
    else {
        if (pos < text.size() && text[pos] == 126)
            throw usage_error("graph6: vertex count beyond the 64-vertex cap");
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n == 0)
        throw usage_error("graph6: empty graph rejected");
    if (n > Graph::max_vertices)
        throw cap_error("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex cap");

    Graph g = Graph::simple(n);
    int group = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                group = next();
                avail = 6;
            }
            if ((group >> (avail - 1)) & 1)
                g.add_edge(i, j);
            --avail;
        }
    if (avail > 0 && (group & ((1 << avail) - 1)) != 0)
        throw usage_error("graph6: nonzero padding bits");
    if (pos != text.size())
        throw usage_error("graph6: trailing characters");
    return g;
}

// H-format for target graphs: first line is the vertex count, then one
// "u v" line per edge with 0 <= u <= v < n; "u u" is a loop.  Duplicate
// lines are rejected.

inline Graph from_h_format(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    if (! std::getline(in, line))
        throw usage_error("H-format: missing vertex count line");
    int n;
    {
        std::istringstream head(line);
        if (! (head >> n))
            throw usage_error("H-format: bad vertex count line: " + line);
        std::string rest;
        if (head >> rest)
            throw usage_error("H-format: trailing tokens on vertex count line");
    }
    if (n < 1)
        throw usage_error("H-format: empty graph rejected");
    if (n > Graph::max_vertices)
        throw cap_error("H-format: " + std::to_string(n) + " vertices exceeds the 64-vertex cap");

    Graph h = Graph::target(n);
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream edge(line);
        int u, v;
        if (! (edge >> u)) {
            std::istringstream blank(line);
            std::string token;
            if (blank >> token)
                throw usage_error("H-format: bad edge line " + std::to_string(line_no));
            continue;  // blank line
        }
        if (! (edge >> v))
            throw usage_error("H-format: bad edge line " + std::to_string(line_no));
        std::string rest;
        if (edge >> rest)
            throw usage_error("H-format: trailing tokens on line " + std::to_string(line_no));
        if (u < 0 || v < 0 || u > v || v >= n)
            throw usage_error("H-format: edge out of range on line " + std::to_string(line_no) +
                " (need 0 <= u <= v < n)");
        if (h.adjacent(u, v))
            throw usage_error("H-format: duplicate edge on line " + std::to_string(line_no));
        h.add_edge(u, v);
    }
    return h;
}

inline std::string to_h_format(const Graph & h)
{
    std::ostringstream out;
    out << h.vertex_count() << '\n';
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u; v < h.vertex_count(); ++v)
            if (h.adjacent(u, v))
                out << u << ' ' << v << '\n';
    return out.str();
}

}
