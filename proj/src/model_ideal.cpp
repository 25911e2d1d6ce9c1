#include "lsemid/model_ideal.hpp"

#include <algorithm>

#include "lsemid/errors.hpp"

namespace lsemid {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix zero_matrix(const TablePtr& t, int p) {
    return PolyMatrix(p + 1, std::vector<Polynomial>(p + 1, Polynomial::zero(t)));
}

}  // namespace

std::vector<Polynomial> sigma_polynomials(const MixedGraph& g, const TablePtr& table) {
    const int p = g.p;
    // M = (I - Lambda)^{-1} = sum_{k=0}^{p-1} Lambda^k; Lambda is strictly
    // triangular under a topological order, so the series is exact.
    PolyMatrix lambda = zero_matrix(table, p);
    for (const auto& [u, v] : g.directed)
        lambda[u][v] = Polynomial::variable(table, table->lambda_id(u, v));
    PolyMatrix m = zero_matrix(table, p);
    for (int v = 1; v <= p; ++v) m[v][v] = Polynomial::constant(table, 1);
    PolyMatrix power = m;  // Lambda^0
    for (int k = 1; k < p; ++k) {
        PolyMatrix next = zero_matrix(table, p);
        bool nonzero = false;
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= p; ++j) {
                Polynomial acc = Polynomial::zero(table);
                for (const auto& [u, v] : g.directed)
                    if (v == j && !power[i][u].is_zero()) acc = acc + power[i][u] * lambda[u][v];
                if (!acc.is_zero()) nonzero = true;
                next[i][j] = std::move(acc);
            }
        power = std::move(next);
        if (!nonzero) break;
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= p; ++j)
                if (!power[i][j].is_zero()) m[i][j] = m[i][j] + power[i][j];
    }
    // Sigma = M^T Omega M with Omega supported on B and the diagonal.
    std::vector<std::pair<int, int>> omega_support;
    for (int v = 1; v <= p; ++v) omega_support.emplace_back(v, v);
    for (const auto& [u, v] : g.bidirected) {
        omega_support.emplace_back(u, v);
        omega_support.emplace_back(v, u);
    }
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(p) * (p + 1) / 2);
    for (int u = 1; u <= p; ++u)
        for (int v = u; v <= p; ++v) {
            Polynomial acc = Polynomial::zero(table);
            for (const auto& [s, t] : omega_support) {
                if (m[s][u].is_zero() || m[t][v].is_zero()) continue;
                Polynomial w = Polynomial::variable(table, table->omega_id(s, t));
                acc = acc + m[s][u] * w * m[t][v];
            }
            out.push_back(std::move(acc));
        }
    return out;
}

std::vector<Monomial> treks_enumerate(const MixedGraph& g, const TablePtr& table, int u, int v,
                                      int max_len) {
    std::vector<std::vector<int>> children(g.p + 1);
    for (const auto& [a, b] : g.directed) children[a].push_back(b);

    // all directed paths source -> target with at most max_edges edges,
    // as lambda-monomial exponent lists
    auto paths = [&](int source, int target, int max_edges) {
        std::vector<std::vector<std::pair<int, int>>> found;
        std::vector<std::pair<int, int>> edges;
        std::function<void(int)> dfs = [&](int node) {
            if (node == target) found.push_back(edges);
            if (static_cast<int>(edges.size()) >= max_edges) return;
            for (int c : children[node]) {
                edges.emplace_back(table->lambda_id(node, c), 1);
                dfs(c);
                edges.pop_back();
            }
        };
        dfs(source);
        return found;
    };

    std::vector<std::pair<int, int>> tops;
    for (int s = 1; s <= g.p; ++s) tops.emplace_back(s, s);
    for (const auto& [s, t] : g.bidirected) {
        tops.emplace_back(s, t);
        tops.emplace_back(t, s);
    }

    std::vector<Monomial> out;
    for (const auto& [s, t] : tops) {
        const auto left = paths(s, u, max_len - 1);
        if (left.empty()) continue;
        const auto right = paths(t, v, max_len - 1);
        for (const auto& l : left)
            for (const auto& r : right) {
                if (static_cast<int>(l.size() + r.size()) + 1 > max_len) continue;
                std::vector<std::pair<int, int>> exps{{table->omega_id(s, t), 1}};
                exps.insert(exps.end(), l.begin(), l.end());
                exps.insert(exps.end(), r.begin(), r.end());
                out.push_back(Monomial::make(*table, std::move(exps)));
            }
    }
    std::sort(out.begin(), out.end(), Monomial::storage_less);
    return out;
}

ModelIdeal build_ideal(const MixedGraph& g) {
    validate(g);
    ModelIdeal ideal;
    ideal.graph = g;
    ideal.weights = trek_weights(g);
    ideal.table = VariableTable::for_graph(g, ideal.weights);
    const auto taus = sigma_polynomials(g, ideal.table);
    const auto& sigma_ids = ideal.table->sigma_ids();
    for (std::size_t i = 0; i < sigma_ids.size(); ++i) {
        Polynomial gen = Polynomial::variable(ideal.table, sigma_ids[i]);
        if (!taus[i].is_zero()) gen = gen - taus[i].homogenized();
        ideal.generators.push_back(std::move(gen));
    }
    return ideal;
}

std::vector<Polynomial> plain_generators(const MixedGraph& g, const TablePtr& table) {
    const auto taus = sigma_polynomials(g, table);
    const auto& sigma_ids = table->sigma_ids();
    std::vector<Polynomial> out;
    out.reserve(sigma_ids.size());
    for (std::size_t i = 0; i < sigma_ids.size(); ++i)
        out.push_back(Polynomial::variable(table, sigma_ids[i]) - taus[i]);
    return out;
}

}  // namespace lsemid
