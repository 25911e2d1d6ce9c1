#ifndef LSEMID_IDENTIFY_HPP
#define LSEMID_IDENTIFY_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lsemid/groebner.hpp"
#include "lsemid/model_ideal.hpp"

namespace lsemid {

/// Identifying formula q = numerator / denominator, with both sides
/// dehomogenized polynomials in the previously identified parameters and
/// sigma. `source` is the dehomogenized identifying polynomial q*a - b.
struct IdentifyingFormula {
    int parameter = -1;
    Polynomial numerator;
    Polynomial denominator;
    Polynomial source;
    std::vector<int> depends_on;
    std::uint64_t w_degree = 0;      // of the homogenized basis element
    std::uint32_t plain_degree = 0;  // of the dehomogenized source
    std::uint64_t found_at_degree = 0;  // truncation level k; 0 for covariance recovery
};

enum class ParamStatus { Identified, NotIdentifiedWithinDegree };
enum class Verdict { Yes, No, Partial };

std::string to_string(Verdict v);

struct ParamResult {
    int parameter = -1;
    ParamStatus status = ParamStatus::NotIdentifiedWithinDegree;
    std::optional<IdentifyingFormula> formula;
};

struct EffortLimits {
    std::optional<double> timeout_seconds;
    std::uint64_t spair_cap = std::numeric_limits<std::uint64_t>::max();
    bool timeout_covers_preprocessing = true;  // --timeout-scope all|gb
};

struct Algorithm1Options {
    int degree = 5;
    bool tian = true;
    bool early_stop_lambda = true;
    bool incremental = true;  // reuse the S-pair queue across truncation levels
    EffortLimits limits;
    std::ostream* trace = nullptr;
};

struct IdentificationReport {
    Verdict verdict = Verdict::No;
    std::vector<ParamResult> parameters;    // in canonical theta order
    std::vector<int> identification_order;  // discovery order, var ids
    MixedGraph graph;
    TablePtr table;
    std::string method;  // "degree_bounded" | "garcia_puente"
    int degree = 0;
    std::uint64_t degree_budget = 0;  // d' = d * w_trek
    bool tian = false;
    bool early_stop_lambda = false;
    bool effort_exceeded = false;
    std::uint64_t spairs_used = 0;
    EffortLimits limits;  // the caps the run was configured with
    bool incremental = true;
    double total_seconds = 0;
    double preprocess_seconds = 0;
    double groebner_seconds = 0;

    const ParamResult* find(int var) const;
    bool all_identified() const;
};

// Scans a reduced basis for an element of the shape q*a - b with a, b free
// of the remaining parameters and the leading term containing q. Returns the
// dehomogenized formula of the lowest-degree such element.
std::optional<IdentifyingFormula> detect_identifying(const GroebnerBasis& basis, int q,
                                                     const std::vector<int>& theta_rem,
                                                     const std::vector<int>& theta_id);

// Degree-bounded identification with adaptive orderings.
IdentificationReport algorithm1(const MixedGraph& g, const Algorithm1Options& opt = {});

// Baseline: one full reduced Groebner basis of the non-homogenized ideal
// under a lex-elimination order for theta, identifiability read off leading
// terms.
IdentificationReport garcia_puente(const MixedGraph& g, const EffortLimits& limits = {});

// omega_uv = [(I - Lambda)^T Sigma (I - Lambda)]_uv with the lambdas treated
// as identified symbols; one formula (denominator 1) per omega variable.
std::vector<IdentifyingFormula> recover_omega(const MixedGraph& g, const TablePtr& table);

struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;
};

// Back-substitutes earlier formulas into later ones, clearing denominators,
// yielding pure-sigma rational functions. Denominators are witnessed nonzero
// by exact evaluation at sampled generic points.
std::map<int, RationalFunction> substitute_formula_chain(const IdentificationReport& report,
                                                         std::uint64_t witness_seed = 20240901);

}  // namespace lsemid

#endif
