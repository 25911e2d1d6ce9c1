#include <doctest.h>

#include "fixtures.hpp"
#include "lsemid/errors.hpp"
#include "lsemid/polynomial.hpp"
#include "lsemid/rng.hpp"

using namespace lsemid;
using namespace lsemid::tests;

namespace {

TablePtr generic_table() {
    return VariableTable::custom({
        {VarKind::Generic, 0, 0, 1, "x"},
        {VarKind::Generic, 0, 0, 2, "y"},
        {VarKind::Generic, 0, 0, 1, "z"},
        {VarKind::Generic, 0, 0, 3, "u"},
        {VarKind::Hom, 0, 0, 1, "h"},
    });
}

Polynomial random_poly(const TablePtr& t, Rng& rng, int max_terms = 4) {
    std::vector<Term> terms;
    const int n = 1 + static_cast<int>(uniform_below(rng, max_terms));
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, int>> exps;
        for (int var = 0; var < t->size() - 1; ++var) {
            const int e = static_cast<int>(uniform_below(rng, 3));
            if (e > 0) exps.emplace_back(var, e);
        }
        const long c = static_cast<long>(uniform_below(rng, 9)) - 4;
        terms.push_back({Monomial::make(*t, std::move(exps)), Rational(c)});
    }
    return Polynomial::from_terms(t, std::move(terms));
}

Monomial random_mono(const TablePtr& t, Rng& rng) {
    std::vector<std::pair<int, int>> exps;
    for (int var = 0; var < t->size(); ++var) {
        const int e = static_cast<int>(uniform_below(rng, 3));
        if (e > 0) exps.emplace_back(var, e);
    }
    return Monomial::make(*t, std::move(exps));
}

}  // namespace

TEST_SUITE_BEGIN("polyring");

TEST_CASE("addition examples") {
    auto t = generic_table();
    auto x = Polynomial::variable(t, 0), y = Polynomial::variable(t, 1);
    CHECK((x + (-x)).is_zero());
    CHECK((x + y) + y == x + y.scaled(2));

    auto g = iv_model();
    auto tbl = table_for(g);
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto s11 = Polynomial::variable(tbl, tbl->sigma_id(1, 1));
    auto s12 = Polynomial::variable(tbl, tbl->sigma_id(1, 2));
    CHECK((l12 * s11 - s12) + s12 == l12 * s11);
}

TEST_CASE("multiplication examples") {
    auto t = generic_table();
    auto x = Polynomial::variable(t, 0);
    auto one = Polynomial::constant(t, 1);
    CHECK((x * Polynomial::zero(t)).is_zero());
    CHECK((x + one) * (x - one) == x * x - one);

    auto g = iv_model();
    auto tbl = table_for(g);
    auto w11 = Polynomial::variable(tbl, tbl->omega_id(1, 1));
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto l23 = Polynomial::variable(tbl, tbl->lambda_id(2, 3));
    auto prod = (w11 * l12) * (l12 * l23);
    REQUIRE(prod.term_count() == 1);
    CHECK(prod.terms()[0].mono.exponent(tbl->lambda_id(1, 2)) == 2);
    CHECK(prod.weighted_degree() == 4);
}

TEST_CASE("table mismatch is rejected") {
    auto t1 = generic_table(), t2 = generic_table();
    CHECK_THROWS_AS(Polynomial::variable(t1, 0) + Polynomial::variable(t2, 0), TableMismatch);
}

TEST_CASE("ring axioms on random inputs") {
    auto t = generic_table();
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        auto f = random_poly(t, rng), g = random_poly(t, rng), h = random_poly(t, rng);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        for (const auto& term : (f * g - g * f).terms()) CHECK(term.coeff != 0);
    }
}

TEST_CASE("weighted degree") {
    auto g = iv_model();
    auto tbl = table_for(g);
    auto trek_mono = Polynomial::term(
        tbl,
        Monomial::make(*tbl, {{tbl->omega_id(1, 1), 1}, {tbl->lambda_id(1, 2), 2},
                              {tbl->lambda_id(2, 3), 1}}),
        1);
    CHECK(trek_mono.weighted_degree() == 4);
    CHECK(Polynomial::variable(tbl, tbl->sigma_id(2, 3)).weighted_degree() == 4);
    CHECK_FALSE(Polynomial::zero(tbl).weighted_degree().has_value());
}

TEST_CASE("w-homogeneity and homogenization on the instrumental variable table") {
    auto g = iv_model();
    auto tbl = table_for(g);
    auto w23 = Polynomial::variable(tbl, tbl->omega_id(2, 3));
    auto w22 = Polynomial::variable(tbl, tbl->omega_id(2, 2));
    auto w11 = Polynomial::variable(tbl, tbl->omega_id(1, 1));
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto l23 = Polynomial::variable(tbl, tbl->lambda_id(2, 3));
    auto s23 = Polynomial::variable(tbl, tbl->sigma_id(2, 3));
    auto h = Polynomial::variable(tbl, tbl->h_id());

    auto tau = w23 + w22 * l23 + w11 * l12 * l12 * l23;
    CHECK_FALSE(tau.is_w_homogeneous());
    auto hom = tau.homogenized();
    CHECK(hom == w23 * h * h * h + w22 * l23 * h * h + w11 * l12 * l12 * l23);
    CHECK(hom.is_w_homogeneous());
    CHECK((s23 - hom).is_w_homogeneous());
    CHECK_FALSE((s23 - w23).is_w_homogeneous());
    CHECK(hom.dehomogenized() == tau);

    // already homogeneous h-free input is unchanged; single monomials trivially so
    auto flat = w11 * l12 * l12 * l23 + w23 * l12 * l12 * l12;  // both of weighted degree 4
    REQUIRE(flat.is_w_homogeneous());
    CHECK(flat.homogenized() == flat);
    auto mono = w11 * l12;
    CHECK(mono.is_w_homogeneous());
    CHECK(mono.homogenized() == mono);
    CHECK(Polynomial::variable(tbl, tbl->h_id(), 3).dehomogenized() ==
          Polynomial::constant(tbl, 1));
    CHECK_THROWS_AS(Polynomial::zero(tbl).homogenized(), ZeroPolynomialError);
}

TEST_CASE("homogenize/dehomogenize round-trip on random h-free polynomials") {
    auto t = generic_table();
    Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        auto f = random_poly(t, rng);
        if (f.is_zero() || f.contains_var(t->h_id())) continue;
        auto hom = f.homogenized();
        CHECK(hom.is_w_homogeneous());
        CHECK(hom.dehomogenized() == f);
    }
}

TEST_CASE("compare: basic axioms") {
    auto g = iv_model();
    auto tbl = table_for(g);
    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(2, 3));
    const auto one = Monomial::one();
    const auto m = Monomial::make(*tbl, {{tbl->sigma_id(1, 2), 1}});
    const auto mh = m * Monomial::var(*tbl, tbl->h_id());
    CHECK(order.compare(one, m) == std::strong_ordering::less);
    CHECK(order.compare(m, mh) == std::strong_ordering::less);  // larger w-degree wins
    CHECK(order.compare(m, m) == std::strong_ordering::equal);
}

TEST_CASE("compare: elimination tie-break on the confounded fork") {
    auto g = confounded_fork();
    auto tbl = table_for(g);
    // theta_id = {l12, l14}, q = l34 smallest among the remaining parameters
    std::vector<int> theta_rem;
    for (int v : tbl->theta_ids())
        if (v != tbl->lambda_id(1, 2) && v != tbl->lambda_id(1, 4)) theta_rem.push_back(v);
    auto order = MonomialOrder::for_parameter(tbl, theta_rem, tbl->lambda_id(3, 4));
    // l34*s23*h and s24 both have weighted degree 3; the l34 exponent decides
    auto a = Monomial::make(
        *tbl, {{tbl->lambda_id(3, 4), 1}, {tbl->sigma_id(2, 3), 1}, {tbl->h_id(), 1}});
    auto b = Monomial::make(*tbl, {{tbl->sigma_id(2, 4), 1}});
    REQUIRE(a.wdeg() == 3);
    REQUIRE(b.wdeg() == 3);
    CHECK(order.compare(a, b) == std::strong_ordering::greater);
}

TEST_CASE("compare respects multiplication and degree dominance") {
    auto t = generic_table();
    Rng rng(7);
    auto order = MonomialOrder::elimination(t, {0, 1}, true);
    for (int i = 0; i < 200; ++i) {
        auto a = random_mono(t, rng), b = random_mono(t, rng), c = random_mono(t, rng);
        const auto ab = order.compare(a, b);
        // antisymmetry
        CHECK(order.compare(b, a) == (ab == std::strong_ordering::less ? std::strong_ordering::greater
                                      : ab == std::strong_ordering::greater ? std::strong_ordering::less
                                                                            : std::strong_ordering::equal));
        CHECK((ab == std::strong_ordering::equal) == (a == b));
        // multiplication-respecting
        CHECK(order.compare(a * c, b * c) == ab);
        // transitivity
        if (order.compare(a, b) != std::strong_ordering::greater &&
            order.compare(b, c) != std::strong_ordering::greater)
            CHECK(order.compare(a, c) != std::strong_ordering::greater);
        // unequal w-degree is decided by w-degree alone
        if (a.wdeg() != b.wdeg())
            CHECK((ab == std::strong_ordering::greater) == (a.wdeg() > b.wdeg()));
    }
}

TEST_CASE("leading terms") {
    auto g = iv_model();
    auto tbl = table_for(g);
    auto sigma_elim = MonomialOrder::elimination(tbl, tbl->sigma_ids(), true);
    // generator of sigma_12: leading monomial sigma_12 under elimination for sigma
    auto w11 = Polynomial::variable(tbl, tbl->omega_id(1, 1));
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto s12 = Polynomial::variable(tbl, tbl->sigma_id(1, 2));
    auto gen = s12 - w11 * l12;
    CHECK(gen.leading_term(sigma_elim).mono == Monomial::var(*tbl, tbl->sigma_id(1, 2)));

    auto single = w11 * l12.scaled(3);
    auto lt = single.leading_term(sigma_elim);
    CHECK(lt.coeff == 3);
    CHECK(Polynomial::zero(tbl).is_zero());
    CHECK_THROWS_AS(Polynomial::zero(tbl).leading_term(sigma_elim), ZeroPolynomialError);
}

TEST_CASE("leading term of the confounded-fork identifying element") {
    auto g = confounded_fork();
    auto tbl = table_for(g);
    std::vector<int> theta_rem;
    for (int v : tbl->theta_ids())
        if (v != tbl->lambda_id(1, 2) && v != tbl->lambda_id(1, 4)) theta_rem.push_back(v);
    auto order = MonomialOrder::for_parameter(tbl, theta_rem, tbl->lambda_id(3, 4));
    auto l34 = Polynomial::variable(tbl, tbl->lambda_id(3, 4));
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto s23 = Polynomial::variable(tbl, tbl->sigma_id(2, 3));
    auto s14 = Polynomial::variable(tbl, tbl->sigma_id(1, 4));
    auto s24 = Polynomial::variable(tbl, tbl->sigma_id(2, 4));
    auto h = Polynomial::variable(tbl, tbl->h_id());
    auto el = l34 * s23 * h + l12 * s14 - s24;  // homogenized, degree 3
    REQUIRE(el.is_w_homogeneous());
    CHECK(el.leading_term(order).mono ==
          Monomial::make(*tbl, {{tbl->lambda_id(3, 4), 1}, {tbl->sigma_id(2, 3), 1},
                                {tbl->h_id(), 1}}));
}

TEST_CASE("rendering") {
    auto g = iv_model();
    auto tbl = table_for(g);
    auto l12 = Polynomial::variable(tbl, tbl->lambda_id(1, 2));
    auto s11 = Polynomial::variable(tbl, tbl->sigma_id(1, 1));
    auto s12 = Polynomial::variable(tbl, tbl->sigma_id(1, 2));
    auto order = MonomialOrder::for_parameter(tbl, tbl->theta_ids(), tbl->lambda_id(1, 2));
    CHECK((l12 * s11 - s12).str(&order) == "l_{1,2}*s_{1,1} - s_{1,2}");
    CHECK(Polynomial::zero(tbl).str() == "0");
    CHECK((s12 - l12 * l12.scaled(Rational(3, 2))).str(&order) == "-3/2*l_{1,2}^2 + s_{1,2}");
}

TEST_SUITE_END();
