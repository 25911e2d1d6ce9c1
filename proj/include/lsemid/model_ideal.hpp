#ifndef LSEMID_MODEL_IDEAL_HPP
#define LSEMID_MODEL_IDEAL_HPP

#include <vector>

#include "lsemid/graph.hpp"
#include "lsemid/polynomial.hpp"

namespace lsemid {

/// The homogenized model ideal of a graph: generators
/// sigma_uv - homogenize(tau(sigma_uv)) for u <= v, indexed like the sigma
/// block of the variable table. Every generator is w-homogeneous.
struct ModelIdeal {
    MixedGraph graph;
    TrekWeights weights;
    TablePtr table;
    std::vector<Polynomial> generators;
};

// tau(sigma_uv) for all u <= v, via the nilpotent series
// (I - Lambda)^{-1} = sum Lambda^k; entries indexed like table.sigma_ids().
std::vector<Polynomial> sigma_polynomials(const MixedGraph& g, const TablePtr& table);

// All treks between u and v of length <= max_len as monomials (with
// multiplicity). Brute-force oracle for sigma_polynomials and trek_weights.
std::vector<Monomial> treks_enumerate(const MixedGraph& g, const TablePtr& table, int u, int v,
                                      int max_len);

ModelIdeal build_ideal(const MixedGraph& g);

// Non-homogenized generators sigma_uv - tau(sigma_uv) (baseline ideal).
std::vector<Polynomial> plain_generators(const MixedGraph& g, const TablePtr& table);

}  // namespace lsemid

#endif
