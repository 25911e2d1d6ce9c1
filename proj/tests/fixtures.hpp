#ifndef LSEMID_TESTS_FIXTURES_HPP
#define LSEMID_TESTS_FIXTURES_HPP

#include <functional>
#include <vector>

#include "lsemid/graph.hpp"
#include "lsemid/model_ideal.hpp"
#include "lsemid/vartable.hpp"

namespace lsemid::tests {

// 1 -> 2 -> 3 with 2 <-> 3: the instrumental variable model
inline MixedGraph iv_model() {
    return MixedGraph{3, {{1, 2}, {2, 3}}, {{2, 3}}};
}

// 1 -> {2,4}, 2 -> 3, 3 -> 4 with 3 <-> 4: conditional instrument, four nodes
inline MixedGraph conditional_iv_model() {
    return MixedGraph{4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}, {{3, 4}}};
}

// 1 -> {2,4}, 3 -> 4 with 2 <-> 3, 3 <-> 4
inline MixedGraph confounded_fork() {
    return MixedGraph{4, {{1, 2}, {1, 4}, {3, 4}}, {{2, 3}, {3, 4}}};
}

// 1 -> 2 with 1 <-> 2: more parameters than covariance entries
inline MixedGraph bow() {
    return MixedGraph{2, {{1, 2}}, {{1, 2}}};
}

inline TablePtr table_for(const MixedGraph& g) {
    return VariableTable::for_graph(g, trek_weights(g));
}

// brute-force directed path enumeration (edge counts of all s->t paths)
inline std::vector<int> all_path_lengths(const MixedGraph& g, int s, int t) {
    std::vector<std::vector<int>> children(g.p + 1);
    for (const auto& [u, v] : g.directed) children[u].push_back(v);
    std::vector<int> out;
    std::function<void(int, int)> dfs = [&](int node, int depth) {
        if (node == t) out.push_back(depth);
        for (int c : children[node]) dfs(c, depth + 1);
    };
    dfs(s, 0);
    return out;
}

}  // namespace lsemid::tests

#endif
