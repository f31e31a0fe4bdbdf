#pragma once

#include <homex/graph.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace homex {

// Total-order key on isomorphism classes: one byte for the vertex count,
// then the upper-triangle-with-diagonal adjacency bits of the canonical
// labeling.  Equal keys decode to equal graphs, so key equality is exact
// isomorphism, never a hash.
struct CanonicalForm {
    std::string key;

    bool operator==(const CanonicalForm & other) const { return key == other.key; }
    auto operator<=>(const CanonicalForm & other) const { return key <=> other.key; }
};

namespace detail {

// Individualization-refinement canonical labeling.  The canonical labeling
// is the one maximizing the packed adjacency bit string over all leaves of
// the refinement tree; automorphisms discovered at equal leaves prune
// sibling branches (orbit pruning restricted to permutations that fix the
// current individualization prefix, which is the sound restriction).
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph & g) : g_(g), n_(g.vertex_count())
    {
        words_ = (static_cast<std::size_t>(n_) * (n_ + 1) / 2 + 63) / 64;
    }

    std::vector<int> run()
    {
        // Initial cells grouped by (loop, degree), ascending; this is an
        // isomorphism invariant, so the whole search tree is.
        std::vector<std::pair<int, int>> invariants(n_);
        for (int v = 0; v < n_; ++v)
            invariants[v] = {g_.has_loop(v) ? 1 : 0, g_.degree(v)};
        std::vector<std::pair<int, int>> distinct = invariants;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        std::vector<std::uint64_t> cells;
        for (const auto & inv : distinct) {
            std::uint64_t cell = 0;
            for (int v = 0; v < n_; ++v)
                if (invariants[v] == inv)
                    cell |= std::uint64_t{1} << v;
            cells.push_back(cell);
        }
        refine(cells, cells);

        best_bits_.clear();
        search(cells, {});
        return best_labeling_;
    }

    const std::vector<std::uint64_t> & best_bits() const { return best_bits_; }

private:
    // Equitable refinement: split every cell by the number of neighbors its
    // vertices have inside each splitter until stable.  Grouping is by count
    // ascending, so the procedure commutes with relabeling.
    void refine(std::vector<std::uint64_t> & cells, std::vector<std::uint64_t> worklist) const
    {
        while (! worklist.empty()) {
            std::uint64_t splitter = worklist.back();
            worklist.pop_back();
            std::vector<std::uint64_t> next;
            next.reserve(cells.size());
            for (std::uint64_t cell : cells) {
                if (std::popcount(cell) <= 1) {
                    next.push_back(cell);
                    continue;
                }
                std::array<std::uint64_t, Graph::max_vertices + 1> buckets{};
                int max_count = 0;
                std::uint64_t rest = cell;
                while (rest != 0) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    int c = std::popcount(g_.row(v) & splitter);
                    buckets[c] |= std::uint64_t{1} << v;
                    max_count = std::max(max_count, c);
                }
                bool split = false;
                for (int c = 0; c <= max_count; ++c)
                    if (buckets[c] != 0 && buckets[c] != cell)
                        split = true;
                if (! split) {
                    next.push_back(cell);
                    continue;
                }
                for (int c = 0; c <= max_count; ++c)
                    if (buckets[c] != 0) {
                        next.push_back(buckets[c]);
                        worklist.push_back(buckets[c]);
                    }
            }
            cells = std::move(next);
        }
    }

    void search(const std::vector<std::uint64_t> & cells, std::vector<int> prefix)
    {
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (std::popcount(cells[i]) > 1) {
                target = static_cast<int>(i);
                break;
            }

        if (target == -1) {
            std::vector<int> labeling(n_);
            for (std::size_t i = 0; i < cells.size(); ++i)
                labeling[i] = std::countr_zero(cells[i]);
            consider_leaf(labeling);
            return;
        }

        std::vector<int> candidates;
        std::uint64_t cell = cells[target];
        while (cell != 0) {
            candidates.push_back(std::countr_zero(cell));
            cell &= cell - 1;
        }

        std::vector<int> explored;
        for (int v : candidates) {
            if (! explored.empty() && in_explored_orbit(v, explored, prefix))
                continue;
            std::vector<std::uint64_t> child = cells;
            std::uint64_t v_mask = std::uint64_t{1} << v;
            child[target] &= ~v_mask;
            child.insert(child.begin() + target, v_mask);
            refine(child, {v_mask, child[target + 1]});
            prefix.push_back(v);
            search(child, prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    void consider_leaf(const std::vector<int> & labeling)
    {
        std::vector<std::uint64_t> bits(words_, 0);
        std::size_t index = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = g_.row(labeling[i]);
            for (int j = i; j < n_; ++j) {
                if ((row >> labeling[j]) & 1u)
                    bits[index / 64] |= std::uint64_t{1} << (63 - index % 64);
                ++index;
            }
        }
        if (best_bits_.empty() || bits > best_bits_) {
            best_bits_ = bits;
            best_labeling_ = labeling;
        }
        else if (bits == best_bits_ && automorphisms_.size() < 512) {
            // labeling and best_labeling_ induce the same matrix, so
            // labeling[i] -> best_labeling_[i] is an automorphism.
            std::array<std::uint8_t, Graph::max_vertices> perm{};
            for (int i = 0; i < n_; ++i)
                perm[labeling[i]] = static_cast<std::uint8_t>(best_labeling_[i]);
            automorphisms_.push_back(perm);
        }
    }

    bool in_explored_orbit(int v, const std::vector<int> & explored, const std::vector<int> & prefix) const
    {
        std::array<int, Graph::max_vertices> parent;
        for (int i = 0; i < n_; ++i)
            parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto & perm : automorphisms_) {
            bool fixes_prefix = true;
            for (int p : prefix)
                if (perm[p] != p) {
                    fixes_prefix = false;
                    break;
                }
            if (! fixes_prefix)
                continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(perm[x]);
                if (a != b)
                    parent[a] = b;
            }
        }
        int rv = find(v);
        for (int u : explored)
            if (find(u) == rv)
                return true;
        return false;
    }

    const Graph & g_;
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> best_bits_;
    std::vector<int> best_labeling_;
    std::vector<std::array<std::uint8_t, Graph::max_vertices>> automorphisms_;
};

}

// Canonical labeling as a list: position i holds the original vertex that
// receives canonical label i.
inline std::vector<int> canonical_labeling(const Graph & g)
{
    detail::CanonicalSearch search(g);
    return search.run();
}

inline Graph relabel(const Graph & g, const std::vector<int> & labeling)
{
    std::vector<int> new_label(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        new_label[labeling[i]] = i;
    Graph out = g.loops_allowed() ? Graph::target(g.vertex_count()) : Graph::simple(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v))
                out.add_edge(new_label[u], new_label[v]);
    return out;
}

inline Graph canonical_graph(const Graph & g)
{
    return relabel(g, canonical_labeling(g));
}

// Canonical form plus the relabeled representative, from one search pass.
struct Canonicalized {
    CanonicalForm form;
    Graph graph;
};

inline Canonicalized canonicalize(const Graph & g)
{
    detail::CanonicalSearch search(g);
    std::vector<int> labeling = search.run();
    const auto & bits = search.best_bits();
    std::string key;
    key.reserve(1 + bits.size() * 8);
    key.push_back(static_cast<char>(g.vertex_count()));
    std::size_t bytes = (static_cast<std::size_t>(g.vertex_count()) * (g.vertex_count() + 1) / 2 + 7) / 8;
    for (std::size_t b = 0; b < bytes; ++b)
        key.push_back(static_cast<char>((bits[b / 8] >> (56 - 8 * (b % 8))) & 0xff));
    return Canonicalized{CanonicalForm{std::move(key)}, relabel(g, labeling)};
}

inline CanonicalForm canonical_form(const Graph & g)
{
    return canonicalize(g).form;
}

inline bool are_isomorphic(const Graph & a, const Graph & b)
{
    if (a.vertex_count() != b.vertex_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}
