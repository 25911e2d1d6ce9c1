#ifndef LSEMID_GRAPH_HPP
#define LSEMID_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsemid/rational.hpp"

namespace lsemid {

/// Acyclic mixed graph G = (V, D, B). Nodes are 1..p; directed edges are
/// ordered pairs u -> v, bidirected pairs are stored canonically with u < v.
struct MixedGraph {
    int p = 0;
    std::vector<std::pair<int, int>> directed;
    std::vector<std::pair<int, int>> bidirected;

    bool operator==(const MixedGraph&) const = default;
};

// Sorts edge lists, canonicalizes bidirected pairs to u < v. Does not validate.
void normalize(MixedGraph& g);

// Throws GraphError (SelfLoop / DuplicateEdge / DirectedCycle with a witness
// cycle / BadNode) unless all MixedGraph invariants hold.
void validate(const MixedGraph& g);

// Nodes in a topological order of the directed part.
std::vector<int> topological_order(const MixedGraph& g);

/// lengths[s][u] = maximum number of edges on a directed path s -> u,
/// 0 on the diagonal, nullopt when u is unreachable from s. 1-based; row and
/// column 0 are unused.
using PathLengths = std::vector<std::vector<std::optional<int>>>;

PathLengths longest_path_lengths(const MixedGraph& g);

/// Trek weighting: weight(u,v) = length of the longest trek between u and v
/// (1 when no trek exists), w_trek = length of the longest trek anywhere.
class TrekWeights {
  public:
    TrekWeights() = default;
    TrekWeights(int p, std::vector<std::uint64_t> w, std::uint64_t w_trek);

    std::uint64_t weight(int u, int v) const;  // symmetric in (u, v)
    std::uint64_t w_trek() const { return w_trek_; }
    int p() const { return p_; }

  private:
    int p_ = 0;
    std::vector<std::uint64_t> w_;  // packed upper triangle, u <= v
    std::uint64_t w_trek_ = 1;
};

TrekWeights trek_weights(const MixedGraph& g);

/// One mixed component of the Tian decomposition: C_j is a connected
/// component of the bidirected part, nodes = C_j together with its parents,
/// directed = edges of D pointing into C_j, bidirected = edges of B inside C_j.
struct TianComponent {
    std::vector<int> component;  // C_j, sorted
    std::vector<int> nodes;      // V_j, sorted
    std::vector<std::pair<int, int>> directed;
    std::vector<std::pair<int, int>> bidirected;
};

std::vector<TianComponent> tian_decompose(const MixedGraph& g);

// A component as a standalone graph with nodes relabeled 1..|V_j|.
// to_parent[i] maps the new label i (1-based) back to the parent node.
struct RelabeledComponent {
    MixedGraph graph;
    std::vector<int> to_parent;  // index 0 unused
};

RelabeledComponent relabel(const TianComponent& c);

// Yields every mixed graph with |D|+|B| <= max_edges whose directed part
// respects the topological order 1 < 2 < ... < p, each exactly once, in a
// deterministic order. Throws BudgetExceededError if the total count would
// exceed cap; requires p <= 5.
void enumerate_graphs(int p, int max_edges, const std::function<void(const MixedGraph&)>& fn,
                      std::uint64_t cap = 25'000'000);

std::vector<MixedGraph> enumerate_graphs(int p, int max_edges);

std::uint64_t count_graphs(int p, int max_edges);

// Erdos-Renyi style sampling: each directed edge u -> v (u < v) and each
// bidirected pair independently with probability edge_prob. Deterministic
// given the seed.
MixedGraph random_graph(int p, const Rational& edge_prob, std::uint64_t seed);

// Deterministic encoding of a graph, e.g. "p4|d:(1,2)(3,4)|b:(2,3)".
std::string encode(const MixedGraph& g);

// Encoding minimized over all node permutations; equal keys == isomorphic
// graphs. Intended for census deduplication, p <= 5 only.
std::string isomorphism_key(const MixedGraph& g);

}  // namespace lsemid

#endif
