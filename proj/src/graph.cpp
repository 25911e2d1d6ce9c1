#include "lsemid/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lsemid/errors.hpp"
#include "lsemid/rng.hpp"

namespace lsemid {

void normalize(MixedGraph& g) {
    for (auto& e : g.bidirected)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(g.directed.begin(), g.directed.end());
    std::sort(g.bidirected.begin(), g.bidirected.end());
}

namespace {

void check_nodes(const MixedGraph& g, const std::pair<int, int>& e) {
    if (e.first < 1 || e.first > g.p || e.second < 1 || e.second > g.p)
        throw GraphError(GraphError::Kind::BadNode,
                         "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                             ") references a node outside 1.." + std::to_string(g.p));
}

}  // namespace

void validate(const MixedGraph& g) {
    if (g.p < 0) throw GraphError(GraphError::Kind::BadNode, "negative node count");
    for (const auto& e : g.directed) {
        check_nodes(g, e);
        if (e.first == e.second)
            throw GraphError(GraphError::Kind::SelfLoop,
                             "directed self-loop at node " + std::to_string(e.first));
    }
    for (const auto& e : g.bidirected) {
        check_nodes(g, e);
        if (e.first == e.second)
            throw GraphError(GraphError::Kind::SelfLoop,
                             "bidirected self-loop at node " + std::to_string(e.first));
        if (e.first > e.second)
            throw GraphError(GraphError::Kind::DuplicateEdge,
                             "bidirected pair not stored canonically (u < v)");
    }
    for (std::size_t i = 1; i < g.directed.size(); ++i)
        if (g.directed[i] == g.directed[i - 1])
            throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate directed edge");
    for (std::size_t i = 1; i < g.bidirected.size(); ++i)
        if (g.bidirected[i] == g.bidirected[i - 1])
            throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate bidirected edge");

    // Cycle check via DFS with an explicit stack so we can report a witness.
    std::vector<std::vector<int>> adj(g.p + 1);
    for (const auto& [u, v] : g.directed) adj[u].push_back(v);
    std::vector<int> state(g.p + 1, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<int> parent(g.p + 1, 0);
    for (int root = 1; root <= g.p; ++root) {
        if (state[root] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                int v = adj[u][next++];
                if (state[v] == 1) {
                    std::vector<int> cycle{v};
                    for (int w = u; w != v; w = parent[w]) cycle.push_back(w);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    cycle.push_back(v);
                    std::ostringstream msg;
                    msg << "directed cycle:";
                    for (int w : cycle) msg << " " << w;
                    throw GraphError(GraphError::Kind::DirectedCycle, msg.str(), cycle);
                }
                if (state[v] == 0) {
                    state[v] = 1;
                    parent[v] = u;
                    stack.emplace_back(v, 0);
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
}

std::vector<int> topological_order(const MixedGraph& g) {
    std::vector<int> indeg(g.p + 1, 0);
    std::vector<std::vector<int>> adj(g.p + 1);
    for (const auto& [u, v] : g.directed) {
        adj[u].push_back(v);
        ++indeg[v];
    }
    std::vector<int> order;
    order.reserve(g.p);
    std::vector<int> ready;
    for (int v = g.p; v >= 1; --v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int u = ready.back();
        ready.pop_back();
        order.push_back(u);
        for (int v : adj[u])
            if (--indeg[v] == 0) ready.push_back(v);
    }
    if (static_cast<int>(order.size()) != g.p)
        throw GraphError(GraphError::Kind::DirectedCycle, "directed part is cyclic");
    return order;
}

PathLengths longest_path_lengths(const MixedGraph& g) {
    const auto topo = topological_order(g);
    std::vector<std::vector<int>> adj(g.p + 1);
    for (const auto& [u, v] : g.directed) adj[u].push_back(v);
    PathLengths len(g.p + 1, std::vector<std::optional<int>>(g.p + 1));
    for (int s = 1; s <= g.p; ++s) {
        len[s][s] = 0;
        for (int u : topo) {
            if (!len[s][u]) continue;
            for (int v : adj[u]) {
                int cand = *len[s][u] + 1;
                if (!len[s][v] || *len[s][v] < cand) len[s][v] = cand;
            }
        }
    }
    return len;
}

TrekWeights::TrekWeights(int p, std::vector<std::uint64_t> w, std::uint64_t w_trek)
    : p_(p), w_(std::move(w)), w_trek_(w_trek) {}

std::uint64_t TrekWeights::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    // packed upper triangle, row-major
    const int row = u - 1;
    const std::size_t idx = static_cast<std::size_t>(row) * p_ - row * (row - 1) / 2 + (v - u);
    return w_[idx];
}

TrekWeights trek_weights(const MixedGraph& g) {
    const auto len = longest_path_lengths(g);
    // Trek tops: (s,s) for every node, plus both orientations of every
    // bidirected pair. The +1 accounts for the omega factor, so the weight
    // is the total degree of the largest trek monomial.
    std::vector<std::pair<int, int>> tops;
    for (int s = 1; s <= g.p; ++s) tops.emplace_back(s, s);
    for (const auto& [s, t] : g.bidirected) {
        tops.emplace_back(s, t);
        tops.emplace_back(t, s);
    }
    std::vector<std::uint64_t> w;
    w.reserve(static_cast<std::size_t>(g.p) * (g.p + 1) / 2);
    std::uint64_t w_trek = 1;
    for (int u = 1; u <= g.p; ++u) {
        for (int v = u; v <= g.p; ++v) {
            std::uint64_t best = 0;
            for (const auto& [s, t] : tops) {
                if (!len[s][u] || !len[t][v]) continue;
                const std::uint64_t cand = static_cast<std::uint64_t>(*len[s][u]) + *len[t][v] + 1;
                best = std::max(best, cand);
            }
            if (best > 0) w_trek = std::max(w_trek, best);
            w.push_back(best == 0 ? 1 : best);  // no trek: weight 1
        }
    }
    return TrekWeights(g.p, std::move(w), w_trek);
}

std::vector<TianComponent> tian_decompose(const MixedGraph& g) {
    // Connected components of the bidirected part.
    std::vector<int> comp(g.p + 1);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& [u, v] : g.bidirected) comp[find(u)] = find(v);

    std::vector<std::vector<int>> parents(g.p + 1);
    for (const auto& [u, v] : g.directed) parents[v].push_back(u);

    std::vector<int> roots;
    for (int v = 1; v <= g.p; ++v)
        if (find(v) == v) roots.push_back(v);

    std::vector<TianComponent> out;
    for (int r : roots) {
        TianComponent c;
        std::vector<char> in_c(g.p + 1, 0), in_v(g.p + 1, 0);
        for (int v = 1; v <= g.p; ++v)
            if (find(v) == r) {
                c.component.push_back(v);
                in_c[v] = in_v[v] = 1;
            }
        for (int v : c.component)
            for (int w : parents[v]) in_v[w] = 1;
        for (int v = 1; v <= g.p; ++v)
            if (in_v[v]) c.nodes.push_back(v);
        for (const auto& e : g.directed)
            if (in_c[e.second]) c.directed.push_back(e);
        for (const auto& e : g.bidirected)
            if (in_c[e.first]) c.bidirected.push_back(e);
        out.push_back(std::move(c));
    }
    return out;
}

RelabeledComponent relabel(const TianComponent& c) {
    RelabeledComponent rc;
    rc.to_parent.push_back(0);
    std::vector<int> to_local(c.nodes.empty() ? 1 : c.nodes.back() + 1, 0);
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        rc.to_parent.push_back(c.nodes[i]);
        to_local[c.nodes[i]] = static_cast<int>(i + 1);
    }
    rc.graph.p = static_cast<int>(c.nodes.size());
    for (const auto& [u, v] : c.directed) rc.graph.directed.emplace_back(to_local[u], to_local[v]);
    for (const auto& [u, v] : c.bidirected)
        rc.graph.bidirected.emplace_back(to_local[u], to_local[v]);
    normalize(rc.graph);
    return rc;
}

namespace {

std::vector<std::pair<int, int>> upper_pairs(int p) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

std::uint64_t count_graphs(int p, int max_edges) {
    const int n = p * (p - 1) / 2;
    // sum over d+b <= max_edges of C(n,d)*C(n,b)
    std::vector<std::uint64_t> binom(n + 1, 0);
    binom[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) binom[j] += binom[j - 1];
    std::uint64_t total = 0;
    for (int d = 0; d <= n && d <= max_edges; ++d)
        for (int b = 0; b <= n && d + b <= max_edges; ++b) total += binom[d] * binom[b];
    return total;
}

void enumerate_graphs(int p, int max_edges, const std::function<void(const MixedGraph&)>& fn,
                      std::uint64_t cap) {
    if (p > 5)
        throw BudgetExceededError("enumeration limited to p <= 5, got p = " + std::to_string(p));
    if (p < 0) throw GraphError(GraphError::Kind::BadNode, "negative node count");
    if (count_graphs(p, max_edges) > cap)
        throw BudgetExceededError("enumeration would yield more than the configured cap of " +
                                  std::to_string(cap) + " graphs");
    const auto pairs = upper_pairs(p);
    const int n = static_cast<int>(pairs.size());
    for (std::uint32_t dmask = 0; dmask < (1u << n); ++dmask) {
        const int dcount = __builtin_popcount(dmask);
        if (dcount > max_edges) continue;
        for (std::uint32_t bmask = 0; bmask < (1u << n); ++bmask) {
            if (dcount + __builtin_popcount(bmask) > max_edges) continue;
            MixedGraph g;
            g.p = p;
            for (int i = 0; i < n; ++i) {
                if (dmask >> i & 1) g.directed.push_back(pairs[i]);
                if (bmask >> i & 1) g.bidirected.push_back(pairs[i]);
            }
            fn(g);
        }
    }
}

std::vector<MixedGraph> enumerate_graphs(int p, int max_edges) {
    std::vector<MixedGraph> out;
    enumerate_graphs(p, max_edges, [&](const MixedGraph& g) { out.push_back(g); });
    return out;
}

MixedGraph random_graph(int p, const Rational& edge_prob, std::uint64_t seed) {
    const std::uint64_t num = mpz_get_ui(edge_prob.get_num_mpz_t());
    const std::uint64_t den = mpz_get_ui(edge_prob.get_den_mpz_t());
    Rng rng(seed);
    MixedGraph g;
    g.p = p;
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v)
            if (bernoulli_exact(rng, num, den)) g.directed.emplace_back(u, v);
    for (int u = 1; u <= p; ++u)
        for (int v = u + 1; v <= p; ++v)
            if (bernoulli_exact(rng, num, den)) g.bidirected.emplace_back(u, v);
    return g;
}

std::string encode(const MixedGraph& g) {
    std::ostringstream os;
    os << "p" << g.p << "|d:";
    for (const auto& [u, v] : g.directed) os << "(" << u << "," << v << ")";
    os << "|b:";
    for (const auto& [u, v] : g.bidirected) os << "(" << u << "," << v << ")";
    return os.str();
}

std::string isomorphism_key(const MixedGraph& g) {
    std::vector<int> perm(g.p);
    std::iota(perm.begin(), perm.end(), 1);
    std::string best;
    do {
        MixedGraph h;
        h.p = g.p;
        for (const auto& [u, v] : g.directed) h.directed.emplace_back(perm[u - 1], perm[v - 1]);
        for (const auto& [u, v] : g.bidirected) h.bidirected.emplace_back(perm[u - 1], perm[v - 1]);
        normalize(h);
        std::string key = encode(h);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace lsemid
