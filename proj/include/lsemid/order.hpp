#ifndef LSEMID_ORDER_HPP
#define LSEMID_ORDER_HPP

#include <compare>
#include <vector>

#include "lsemid/monomial.hpp"
#include "lsemid/vartable.hpp"

namespace lsemid {

/// (w-graded) lex-elimination order. Monomials are compared by weighted
/// degree first (when graded), ties broken by lex on the block-1 variables
/// taken in the given priority sequence (first entry = largest, the
/// distinguished smallest parameter last), and remaining ties by graded
/// reverse lex on the block-2 variables in table-listing order with h last.
class MonomialOrder {
  public:
    MonomialOrder() = default;

    static MonomialOrder elimination(TablePtr t, std::vector<int> block1, bool graded);

    // theta_rem in canonical table order with q moved to the smallest slot.
    static MonomialOrder for_parameter(TablePtr t, const std::vector<int>& theta_rem, int q,
                                       bool graded = true);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    bool is_graded() const { return graded_; }
    const std::vector<int>& block1() const { return block1_; }
    const VariableTable& table() const { return *t_; }
    const TablePtr& table_ptr() const { return t_; }

  private:
    TablePtr t_;
    bool graded_ = true;
    std::vector<int> block1_;
    std::vector<int> pos_;       // var id -> position within its block
    std::vector<char> in_b1_;
};

}  // namespace lsemid

#endif
