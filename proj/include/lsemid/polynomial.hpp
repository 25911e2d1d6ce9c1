#ifndef LSEMID_POLYNOMIAL_HPP
#define LSEMID_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsemid/monomial.hpp"
#include "lsemid/order.hpp"
#include "lsemid/rational.hpp"

namespace lsemid {

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse polynomial with exact rational coefficients over one variable
/// table. Terms are kept in a canonical form (structural order, nonzero
/// coefficients), so equal polynomials have identical representations.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(TablePtr t) : t_(std::move(t)) {}

    static Polynomial zero(TablePtr t) { return Polynomial(std::move(t)); }
    static Polynomial constant(TablePtr t, Rational c);
    static Polynomial variable(TablePtr t, int id, int exp = 1);
    static Polynomial term(TablePtr t, Monomial m, Rational c);
    static Polynomial from_terms(TablePtr t, std::vector<Term> terms);  // canonicalizes

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const VariableTable& table() const { return *t_; }
    const TablePtr& table_ptr() const { return t_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial scaled(const Rational& c) const;
    Polynomial shifted(const Monomial& m, const Rational& c) const;  // c * m * f

    std::optional<std::uint64_t> weighted_degree() const;
    std::optional<std::uint32_t> degree() const;
    bool is_w_homogeneous() const;

    // Multiplies each monomial with the h power that pads it to the maximal
    // weighted degree. Requires a nonzero, h-free input.
    Polynomial homogenized() const;
    // Substitutes h := 1.
    Polynomial dehomogenized() const;

    bool contains_var(int var) const;
    int degree_in(int var) const;
    std::vector<int> support() const;  // variable ids occurring, ascending

    Term leading_term(const MonomialOrder& order) const;  // throws on zero

    Rational evaluate(std::span<const Rational> values) const;
    Polynomial substitute(const std::map<int, Polynomial>& values) const;

    // Human-readable rendering, monomials descending under the given order
    // (storage order when none given).
    std::string str(const MonomialOrder* order = nullptr) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  private:
    TablePtr t_;
    std::vector<Term> terms_;  // descending under Monomial::storage_less

    void canonicalize();
    friend void check_same_table(const Polynomial& f, const Polynomial& g);
};

std::string term_str(const VariableTable& t, const Monomial& m, const Rational& c, bool leading);

}  // namespace lsemid

#endif
