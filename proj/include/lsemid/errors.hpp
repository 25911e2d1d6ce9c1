#ifndef LSEMID_ERRORS_HPP
#define LSEMID_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsemid {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct GraphError : Error {
    enum class Kind { SelfLoop, DirectedCycle, DuplicateEdge, BadNode };
    Kind kind;
    std::vector<int> witness;  // for DirectedCycle: the offending cycle

    GraphError(Kind k, const std::string& msg, std::vector<int> w = {})
        : Error(msg), kind(k), witness(std::move(w)) {}
};

struct TableMismatch : Error {
    TableMismatch() : Error("polynomials belong to different variable tables") {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& op)
        : Error("zero polynomial not allowed in " + op) {}
};

struct NotHomogeneousError : Error {
    NotHomogeneousError() : Error("generator is not w-homogeneous") {}
};

struct NotGradedOrderError : Error {
    NotGradedOrderError() : Error("truncated computation requires a w-graded order") {}
};

struct InvalidDegreeError : Error {
    explicit InvalidDegreeError(int d)
        : Error("degree bound must be at least 2, got " + std::to_string(d)) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

// Thrown when a Groebner computation exhausts its step budget or deadline.
// Carries counters, never a partial basis.
struct EffortExceeded : Error {
    std::uint64_t spairs_processed;
    double elapsed_seconds;

    EffortExceeded(std::uint64_t spairs, double secs)
        : Error("effort budget exceeded after " + std::to_string(spairs) + " S-pairs"),
          spairs_processed(spairs), elapsed_seconds(secs) {}
};

struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};

struct PersistentZeroDenominator : Error {
    explicit PersistentZeroDenominator(const std::string& what) : Error(what) {}
};

}  // namespace lsemid

#endif
