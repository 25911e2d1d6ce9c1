#ifndef LSEMID_MONOMIAL_HPP
#define LSEMID_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lsemid/vartable.hpp"

namespace lsemid {

/// Sparse monomial: (variable id, exponent) pairs sorted by id, no zero
/// exponents. Caches its plain and weighted degree.
class Monomial {
  public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial make(const VariableTable& t,
                         std::initializer_list<std::pair<int, int>> exps);
    static Monomial make(const VariableTable& t, std::vector<std::pair<int, int>> exps);
    static Monomial var(const VariableTable& t, int id, int exp = 1);

    bool is_one() const { return e_.empty(); }
    const std::vector<std::pair<int, int>>& exps() const { return e_; }
    int exponent(int var) const;
    std::uint32_t deg() const { return deg_; }
    std::uint64_t wdeg() const { return wdeg_; }
    std::uint64_t var_mask() const { return mask_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    // a is divisible by b
    static bool divides(const Monomial& b, const Monomial& a);
    Monomial div(const Monomial& b) const;  // requires divides(b, *this)
    static Monomial lcm(const VariableTable& t, const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return e_ == other.e_; }

    // Deterministic structural order used for canonical polynomial storage;
    // not a monomial order.
    static bool storage_less(const Monomial& a, const Monomial& b);

  private:
    std::vector<std::pair<int, int>> e_;
    std::uint32_t deg_ = 0;
    std::uint64_t wdeg_ = 0;
    std::uint64_t mask_ = 0;  // bit (var % 64) set for each variable present
};

}  // namespace lsemid

#endif
