#pragma once

// The fixed 200-graph source corpus shared by the unit and acceptance
// suites: every named family instance on at most 8 vertices, topped up in a
// deterministic order from the small-graph enumerator.  The content is a
// function of the library's deterministic enumeration order only, so every
// build sees the same 200 isomorphism classes.

#include <homex/canonical.hpp>
#include <homex/enumerate.hpp>
#include <homex/families.hpp>
#include <homex/graph.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

inline const std::vector<homex::Graph> & corpus_200()
{
    static const std::vector<homex::Graph> corpus = [] {
        using namespace homex;
        std::vector<Graph> list;
        std::set<std::string> seen;
        auto push = [&](const Graph & g) {
            if (list.size() >= 200)
                return;
            if (seen.insert(canonical_form(g).key).second)
                list.push_back(g);
        };

        for (int k = 1; k <= 8; ++k)
            push(families::path(k));
        for (int k = 3; k <= 8; ++k)
            push(families::cycle(k));
        for (int q = 1; q <= 8; ++q)
            push(families::complete(q, false));
        for (int a = 1; a <= 4; ++a)
            for (int b = a; a + b <= 8; ++b)
                push(families::complete_bipartite(a, b));
        push(families::g1(6, 2));
        push(families::g1(8, 3));

        for (auto [n, delta] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 2}})
            for (const Graph & g : enumerate_graphs(n, delta, true))
                push(g);

        if (list.size() != 200)
            throw std::logic_error("corpus construction produced " + std::to_string(list.size()) +
                                   " graphs instead of 200");
        return list;
    }();
    return corpus;
}

// The six standing target graphs used by the oracle and bound sweeps.
inline const std::vector<std::pair<std::string, homex::Graph>> & standard_targets()
{
    static const std::vector<std::pair<std::string, homex::Graph>> targets = [] {
        using namespace homex;
        std::vector<std::pair<std::string, Graph>> list;
        list.emplace_back("Hind", families::h_ind());
        list.emplace_back("P:3", families::as_target(families::path(3)));
        list.emplace_back("Kq:3", families::as_target(families::complete(3, false)));
        list.emplace_back("Kq:4", families::as_target(families::complete(4, false)));
        list.emplace_back("KqLooped:2", families::complete(2, true));
        list.emplace_back("C:5", families::as_target(families::cycle(5)));
        return list;
    }();
    return targets;
}

}
