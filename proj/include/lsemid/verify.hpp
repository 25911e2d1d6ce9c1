#ifndef LSEMID_VERIFY_HPP
#define LSEMID_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsemid/identify.hpp"

namespace lsemid {

/// Exact rational parameter point (Lambda, Omega) with Omega strictly
/// diagonally dominant, hence positive definite.
struct ParameterSample {
    std::map<std::pair<int, int>, Rational> lambda_values;  // keyed by edge (u,v)
    std::map<std::pair<int, int>, Rational> omega_values;   // keyed by (u,v), u <= v
    std::uint64_t seed = 0;
};

ParameterSample sample_params(const MixedGraph& g, std::uint64_t rng_seed);

using RationalMatrix = std::vector<std::vector<Rational>>;  // 1-based, row/col 0 unused

// Sigma = (I - Lambda)^{-T} Omega (I - Lambda)^{-1}, exactly.
RationalMatrix covariance_exact(const MixedGraph& g, const ParameterSample& sample);

// All leading principal minors positive (exact fraction-free elimination).
bool is_positive_definite(const RationalMatrix& m);

RationalMatrix omega_matrix(const MixedGraph& g, const ParameterSample& sample);

// Value vector indexed by variable id: sampled lambda/omega values, sigma
// entries from the covariance matrix, h = 1.
std::vector<Rational> full_assignment(const VariableTable& t, const ParameterSample& sample,
                                      const RationalMatrix& sigma);

struct VerificationResult {
    int trials = 0;
    bool passed = false;
    std::optional<std::string> counterexample;
};

// For each trial: sample parameters, compute Sigma exactly, evaluate the
// report's formulas in identification order, and require exact recovery of
// every sampled value. Zero denominators trigger up to 5 resamples before
// PersistentZeroDenominator.
VerificationResult check_formulas(const MixedGraph& g, const IdentificationReport& report,
                                  int trials, std::uint64_t rng_seed);

}  // namespace lsemid

#endif
