#ifndef LSEMID_GROEBNER_HPP
#define LSEMID_GROEBNER_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <unordered_set>
#include <vector>

#include "lsemid/polynomial.hpp"

namespace lsemid {

/// Cooperative effort budget shared by the Groebner runs of one graph or
/// component. Checked between S-pair reductions; throws EffortExceeded.
struct EffortBudget {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t spair_cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t spairs_used = 0;

    static EffortBudget with_limits(std::optional<double> seconds, std::uint64_t cap);
    void charge();
    double elapsed_seconds() const;
};

struct GroebnerStats {
    std::uint64_t items_processed = 0;
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t skipped_coprime = 0;
    std::uint64_t skipped_chain = 0;
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;  // monic; ascending leading monomials
    MonomialOrder order;
    std::optional<std::uint64_t> degree_bound;
    bool reduced = true;
};

// Deterministic division: repeatedly rewrites the largest reducible monomial
// using the first basis element (in sequence order) whose leading monomial
// divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// Buchberger computation with an S-pair queue keyed by lcm weighted degree.
/// In truncated mode (w-homogeneous generators, w-graded order) the basis can
/// be extended degree by degree; a snapshot at bound k is exactly the set of
/// elements of weighted degree <= k of the reduced Groebner basis.
class BuchbergerSession {
  public:
    enum class Mode { Truncated, Full };
    using WPoly = std::vector<Term>;  // terms descending under the order

    BuchbergerSession(std::vector<Polynomial> generators, MonomialOrder order, Mode mode,
                      std::optional<std::uint64_t> hard_degree_cap = std::nullopt);

    // Processes every pending item of degree <= bound.
    void extend(std::uint64_t bound, EffortBudget* budget = nullptr);
    // Processes the whole queue (full Buchberger).
    void run_all(EffortBudget* budget = nullptr);

    bool exhausted() const { return queue_.empty(); }
    std::uint64_t pending_min_degree() const;

    // Reduced basis of all elements with weighted degree <= bound (everything
    // when bound is nullopt). Pending items of degree <= bound must have been
    // processed already.
    GroebnerBasis snapshot(std::optional<std::uint64_t> bound) const;

    const GroebnerStats& stats() const { return stats_; }
    void set_trace(std::ostream* os) { trace_ = os; }

    // Raw working state, appended in nondecreasing degree. In truncated mode
    // the basis is inter-reduced at all times, so these are literally the
    // reduced-basis elements.
    const std::vector<WPoly>& raw_elements() const { return basis_; }
    const std::vector<Monomial>& leading_monomials() const { return lead_; }
    Polynomial element_as_polynomial(std::size_t i) const { return to_polynomial(basis_[i]); }

  private:
    struct Item {
        std::uint64_t deg;
        std::uint64_t seq;
        int i, j;  // j == -1: pending input polynomial inputs_[i]
        Monomial lcm;
    };
    struct ItemLater {
        bool operator()(const Item& a, const Item& b) const {
            return a.deg != b.deg ? a.deg > b.deg : a.seq > b.seq;
        }
    };

    MonomialOrder order_;
    Mode mode_;
    std::optional<std::uint64_t> hard_cap_;
    std::vector<WPoly> inputs_;
    std::vector<WPoly> basis_;          // monic, order-sorted terms
    std::vector<Monomial> lead_;        // leading monomials of basis_
    // In truncated mode the basis is kept inter-reduced as it grows, so
    // converted elements can be cached; a same-degree tail rewrite clears
    // the affected slot.
    mutable std::vector<Polynomial> poly_cache_;
    mutable std::vector<char> cache_ok_;
    std::priority_queue<Item, std::vector<Item>, ItemLater> queue_;
    std::unordered_map<std::uint64_t, Monomial> pending_;  // live pairs -> lcm
    std::unordered_set<std::uint64_t> cancelled_;  // lazily deleted pending pairs
    std::uint64_t seq_ = 0;
    GroebnerStats stats_;
    std::ostream* trace_ = nullptr;

    static std::uint64_t pair_key(int i, int j) {
        return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
    }

    WPoly to_wpoly(const Polynomial& p) const;
    Polynomial to_polynomial(const WPoly& w) const;
    WPoly reduce_full(WPoly p) const;
    void interreduce_with_last();
    void process(const Item& item, EffortBudget* budget);
    void append_element(WPoly h);
};

GroebnerBasis buchberger_truncated(std::vector<Polynomial> generators, const MonomialOrder& order,
                                   std::uint64_t bound, EffortBudget* budget = nullptr);

GroebnerBasis buchberger_full(std::vector<Polynomial> generators, const MonomialOrder& order,
                              EffortBudget* budget = nullptr);

}  // namespace lsemid

#endif
