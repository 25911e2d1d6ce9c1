#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "lsemid/errors.hpp"
#include "lsemid/groebner.hpp"
#include "lsemid/model_ideal.hpp"
#include "lsemid/rng.hpp"

using namespace lsemid;
using namespace lsemid::tests;

namespace {

TablePtr small_table() {
    return VariableTable::custom({
        {VarKind::Generic, 0, 0, 1, "x"},
        {VarKind::Generic, 0, 0, 2, "y"},
        {VarKind::Generic, 0, 0, 1, "z"},
        {VarKind::Generic, 0, 0, 3, "u"},
    });
}

// all monomials over the first n table variables with weighted degree w
void monomials_of_wdeg(const TablePtr& t, int n, std::uint64_t w,
                       std::vector<std::pair<int, int>>& prefix, int from,
                       std::vector<Monomial>& out) {
    if (w == 0) {
        out.push_back(Monomial::make(*t, prefix));
        return;
    }
    for (int var = from; var < n; ++var) {
        if (t->weight(var) > w) continue;
        prefix.emplace_back(var, 1);
        monomials_of_wdeg(t, n, w - t->weight(var), prefix, var, out);
        prefix.pop_back();
    }
}

Polynomial random_homogeneous(const TablePtr& t, Rng& rng) {
    const std::uint64_t w = 2 + uniform_below(rng, 3);  // degree 2..4
    std::vector<std::pair<int, int>> prefix;
    std::vector<Monomial> monos;
    monomials_of_wdeg(t, t->size(), w, prefix, 0, monos);
    std::vector<Term> terms;
    const std::size_t n_terms = 1 + uniform_below(rng, 3);
    for (std::size_t i = 0; i < n_terms && !monos.empty(); ++i) {
        const std::size_t pick = uniform_below(rng, monos.size());
        const long c = 1 + static_cast<long>(uniform_below(rng, 3));
        terms.push_back({monos[pick], Rational(uniform_below(rng, 2) ? c : -c)});
        monos.erase(monos.begin() + pick);
    }
    return Polynomial::from_terms(t, std::move(terms));
}

bool is_reduced_basis(const GroebnerBasis& b) {
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
        if (b.elements[i].leading_term(b.order).coeff != 1) return false;
        for (std::size_t j = 0; j < b.elements.size(); ++j) {
            if (i == j) continue;
            const Monomial lm = b.elements[j].leading_term(b.order).mono;
            for (const Term& t : b.elements[i].terms())
                if (Monomial::divides(lm, t.mono)) return false;
        }
    }
    return true;
}

bool contains(const GroebnerBasis& b, const Polynomial& p) {
    for (const auto& el : b.elements)
        if (el == p) return true;
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("normal form: basic contracts") {
    auto g = iv_model();
    auto tbl = table_for(g);
    auto w11 = Polynomial::variable(tbl, tbl->omega_id(1, 1));
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto l23 = Polynomial::variable(tbl, tbl->lambda_id(2, 3));
    auto s12 = Polynomial::variable(tbl, tbl->sigma_id(1, 2));
    auto s13 = Polynomial::variable(tbl, tbl->sigma_id(1, 3));
    auto sigma_elim = MonomialOrder::elimination(tbl, tbl->sigma_ids(), true);

    std::vector<Polynomial> basis{s12 - w11 * l12, s13 - w11 * l12 * l23};
    CHECK(normal_form(basis[0], basis, sigma_elim).is_zero());
    CHECK(normal_form(s13, basis, sigma_elim) == w11 * l12 * l23);
    auto already = w11 * l12 * l23 + w11;
    CHECK(normal_form(already, basis, sigma_elim) == already);
}

TEST_CASE("truncated basis of the instrumental-variable ideal contains the tau quotient") {
    const ModelIdeal ideal = build_ideal(iv_model());
    const auto& tbl = ideal.table;
    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(2, 3));
    auto basis = buchberger_truncated(ideal.generators, order, 3);
    auto l23 = Polynomial::variable(tbl, tbl->lambda_id(2, 3));
    auto s12 = Polynomial::variable(tbl, tbl->sigma_id(1, 2));
    auto s13 = Polynomial::variable(tbl, tbl->sigma_id(1, 3));
    CHECK(contains(basis, l23 * s12 - s13));
    CHECK(is_reduced_basis(basis));
    for (const auto& el : basis.elements) {
        CHECK(el.is_w_homogeneous());
        CHECK(el.weighted_degree().value() <= 3);
    }
}

TEST_CASE("truncated: single generator and empty truncations") {
    auto t = small_table();
    auto x = Polynomial::variable(t, 0);
    auto y = Polynomial::variable(t, 1);
    auto gen = (x * x).scaled(2) - y;  // homogeneous of weighted degree 2
    REQUIRE(gen.is_w_homogeneous());
    auto order = MonomialOrder::elimination(t, {0}, true);
    auto basis = buchberger_truncated({gen}, order, 5);
    REQUIRE(basis.elements.size() == 1);
    CHECK(basis.elements[0] == x * x - y.scaled(Rational(1, 2)));  // monic
    CHECK(buchberger_truncated({gen}, order, 1).elements.empty());
}

TEST_CASE("truncated rejects inhomogeneous generators and ungraded orders") {
    auto t = small_table();
    auto x = Polynomial::variable(t, 0);
    auto one = Polynomial::constant(t, 1);
    auto graded = MonomialOrder::elimination(t, {0}, true);
    auto ungraded = MonomialOrder::elimination(t, {0}, false);
    CHECK_THROWS_AS(buchberger_truncated({x + one}, graded, 3), NotHomogeneousError);
    CHECK_THROWS_AS(buchberger_truncated({x * x}, ungraded, 3), NotGradedOrderError);
}

TEST_CASE("full Buchberger on a univariate pair") {
    auto t = small_table();
    auto x = Polynomial::variable(t, 0);
    auto one = Polynomial::constant(t, 1);
    auto order = MonomialOrder::elimination(t, {0}, false);
    auto basis = buchberger_full({x * x - one, x * x * x - x}, order);
    REQUIRE(basis.elements.size() == 1);
    CHECK(basis.elements[0] == x * x - one);
    CHECK(buchberger_full({}, order).elements.empty());
}

TEST_CASE("full Buchberger exposes the conditional-instrument formulas") {
    const auto g = conditional_iv_model();
    const auto tbl = table_for(g);
    const auto gens = plain_generators(g, tbl);
    const auto order = MonomialOrder::elimination(tbl, tbl->theta_ids(), false);
    const auto basis = buchberger_full(gens, order);
    CHECK(is_reduced_basis(basis));

    auto lam = [&](int u, int v) { return Polynomial::variable(tbl, tbl->lambda_id(u, v)); };
    auto sig = [&](int u, int v) { return Polynomial::variable(tbl, tbl->sigma_id(u, v)); };
    // regression-style elements
    CHECK(contains(basis, lam(1, 2) * sig(1, 1) - sig(1, 2)));
    CHECK(contains(basis, lam(1, 4) * sig(1, 1) + lam(3, 4) * sig(1, 3) - sig(1, 4)));
    CHECK(contains(basis, lam(2, 3) * sig(2, 2) - sig(2, 3)));
    // the degree-3 element behind the printed fraction for the 3->4 effect
    auto el = lam(3, 4) * (sig(1, 2) * sig(1, 3) - sig(1, 1) * sig(2, 3)) -
              (sig(1, 2) * sig(1, 4) - sig(1, 1) * sig(2, 4));
    CHECK(contains(basis, el));
}

TEST_CASE("truncated bases equal degree slices of full bases on random homogeneous ideals") {
    auto t = small_table();
    Rng rng(424242);
    int nontrivial = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Polynomial> gens;
        const std::size_t n_gens = 2 + uniform_below(rng, 2);
        for (std::size_t i = 0; i < n_gens; ++i) gens.push_back(random_homogeneous(t, rng));
        std::vector<int> block1;
        for (int v = 0; v < t->size(); ++v)
            if (uniform_below(rng, 2)) block1.push_back(v);
        const auto order = MonomialOrder::elimination(t, block1, true);
        const auto full = buchberger_full(gens, order);
        if (full.elements.size() > gens.size()) ++nontrivial;
        std::uint64_t max_deg = 0;
        for (const auto& el : full.elements)
            max_deg = std::max(max_deg, el.weighted_degree().value());
        for (std::uint64_t k = 1; k <= max_deg; ++k) {
            const auto trunc = buchberger_truncated(gens, order, k);
            std::vector<Polynomial> slice;
            for (const auto& el : full.elements)
                if (el.weighted_degree().value() <= k) slice.push_back(el);
            CHECK(trunc.elements == slice);
            CHECK(is_reduced_basis(trunc));
        }
    }
    CHECK(nontrivial > 10);  // the suite actually exercised S-pair reductions
}

TEST_CASE("incremental extension is observationally identical to fresh computations") {
    const ModelIdeal ideal = build_ideal(confounded_fork());
    const auto& tbl = ideal.table;
    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(3, 4));
    BuchbergerSession session(ideal.generators, order, BuchbergerSession::Mode::Truncated);
    for (std::uint64_t k = 1; k <= 8; ++k) {
        session.extend(k);
        const auto incremental = session.snapshot(k);
        const auto fresh = buchberger_truncated(ideal.generators, order, k);
        CHECK(incremental.elements == fresh.elements);
    }
}

TEST_CASE("determinism: identical inputs give identical element sequences") {
    const ModelIdeal ideal = build_ideal(conditional_iv_model());
    const auto& tbl = ideal.table;
    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(3, 4));
    const auto a = buchberger_truncated(ideal.generators, order, 6);
    const auto b = buchberger_truncated(ideal.generators, order, 6);
    CHECK(a.elements == b.elements);
}

TEST_CASE("membership soundness: elements vanish under the trek-rule substitution") {
    const auto g = iv_model();
    const ModelIdeal ideal = build_ideal(g);
    const auto& tbl = ideal.table;
    const auto taus = sigma_polynomials(g, tbl);
    std::map<int, Polynomial> subst;
    const auto& sigma_ids = tbl->sigma_ids();
    for (std::size_t i = 0; i < sigma_ids.size(); ++i) subst[sigma_ids[i]] = taus[i];

    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(2, 3));
    const auto basis = buchberger_truncated(ideal.generators, order, 5);
    REQUIRE(basis.elements.size() > 2);
    for (const auto& el : basis.elements)
        CHECK(el.dehomogenized().substitute(subst).is_zero());
}

TEST_CASE("effort budget: the step cap aborts with counters") {
    const ModelIdeal ideal = build_ideal(conditional_iv_model());
    const auto& tbl = ideal.table;
    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(3, 4));
    EffortBudget budget = EffortBudget::with_limits(std::nullopt, 3);
    try {
        buchberger_truncated(ideal.generators, order, 20, &budget);
        FAIL("expected EffortExceeded");
    } catch (const EffortExceeded& e) {
        CHECK(e.spairs_processed == 4);
    }
}

TEST_SUITE_END();
