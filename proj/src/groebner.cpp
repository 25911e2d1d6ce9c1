#include "lsemid/groebner.hpp"

#include <algorithm>

#include "lsemid/errors.hpp"

namespace lsemid {

EffortBudget EffortBudget::with_limits(std::optional<double> seconds, std::uint64_t cap) {
    EffortBudget b;
    if (seconds)
        b.deadline = b.start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(*seconds));
    b.spair_cap = cap;
    return b;
}

void EffortBudget::charge() {
    ++spairs_used;
    if (spairs_used > spair_cap) throw EffortExceeded(spairs_used, elapsed_seconds());
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw EffortExceeded(spairs_used, elapsed_seconds());
}

double EffortBudget::elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

namespace {

using WPoly = std::vector<Term>;

// p[pi..] - c * m * g[gi..], all term vectors descending under the order
WPoly merge_sub(const WPoly& p, std::size_t pi, const WPoly& g, std::size_t gi, const Rational& c,
                const Monomial& m, const MonomialOrder& order) {
    WPoly out;
    out.reserve(p.size() - pi + g.size() - gi);
    std::size_t i = pi, j = gi;
    Monomial gm;
    bool gm_valid = false;
    while (i < p.size() && j < g.size()) {
        if (!gm_valid) {
            gm = g[j].mono * m;
            gm_valid = true;
        }
        const auto cmp = order.compare(p[i].mono, gm);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(p[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back({gm, -c * g[j].coeff});
            ++j;
            gm_valid = false;
        } else {
            Rational coeff = p[i].coeff - c * g[j].coeff;
            if (coeff != 0) out.push_back({p[i].mono, std::move(coeff)});
            ++i, ++j;
            gm_valid = false;
        }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, -c * g[j].coeff});
    return out;
}

}  // namespace

BuchbergerSession::WPoly BuchbergerSession::to_wpoly(const Polynomial& p) const {
    WPoly w(p.terms().begin(), p.terms().end());
    std::sort(w.begin(), w.end(),
              [&](const Term& a, const Term& b) { return order_.less(b.mono, a.mono); });
    return w;
}

Polynomial BuchbergerSession::to_polynomial(const WPoly& w) const {
    return Polynomial::from_terms(order_.table_ptr(), w);
}

BuchbergerSession::BuchbergerSession(std::vector<Polynomial> generators, MonomialOrder order,
                                     Mode mode, std::optional<std::uint64_t> hard_degree_cap)
    : order_(std::move(order)), mode_(mode), hard_cap_(hard_degree_cap) {
    if (mode_ == Mode::Truncated && !order_.is_graded()) throw NotGradedOrderError();
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (mode_ == Mode::Truncated && !g.is_w_homogeneous()) throw NotHomogeneousError();
        const std::uint64_t deg =
            mode_ == Mode::Truncated ? *g.weighted_degree() : g.leading_term(order_).mono.wdeg();
        if (hard_cap_ && deg > *hard_cap_) continue;
        inputs_.push_back(to_wpoly(g));
        queue_.push(Item{deg, seq_++, static_cast<int>(inputs_.size()) - 1, -1, Monomial::one()});
    }
}

std::uint64_t BuchbergerSession::pending_min_degree() const {
    return queue_.empty() ? std::numeric_limits<std::uint64_t>::max() : queue_.top().deg;
}

BuchbergerSession::WPoly BuchbergerSession::reduce_full(WPoly p) const {
    WPoly rem;
    std::size_t head = 0;
    while (head < p.size()) {
        bool reduced = false;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (Monomial::divides(lead_[k], p[head].mono)) {
                const Monomial quot = p[head].mono.div(lead_[k]);
                p = merge_sub(p, head + 1, basis_[k], 1, p[head].coeff, quot, order_);
                head = 0;
                reduced = true;
                break;
            }
        }
        if (!reduced) rem.push_back(std::move(p[head++]));
    }
    return rem;
}

// In graded homogeneous runs a new element can only rewrite tails of
// existing elements of the same weighted degree, and there the quotient
// monomial is trivial: the tail monomial must equal the new leading monomial
// itself, so the substitution never cascades.
void BuchbergerSession::interreduce_with_last() {
    const int n = static_cast<int>(basis_.size()) - 1;
    const Monomial& lm = lead_[n];
    for (int i = 0; i < n; ++i) {
        if (lead_[i].wdeg() != lm.wdeg()) continue;
        auto& body = basis_[i];
        for (std::size_t t = 1; t < body.size(); ++t) {
            if (!(body[t].mono == lm)) continue;
            const Rational c = body[t].coeff;
            WPoly head(body.begin(), body.begin() + t);
            WPoly next = merge_sub(body, t + 1, basis_[n], 1, c, Monomial::one(), order_);
            head.insert(head.end(), next.begin(), next.end());
            body = std::move(head);
            if (i < static_cast<int>(cache_ok_.size())) cache_ok_[i] = 0;
            break;
        }
    }
}

// Gebauer-Moller pair update: cancel pending pairs strictly superseded by
// the new leading monomial, then thin the new pairs by the proper-divisor,
// equal-lcm and coprime criteria.
void BuchbergerSession::append_element(WPoly h) {
    // normalize to monic
    const Rational lc = h.front().coeff;
    if (lc != 1)
        for (auto& t : h) t.coeff /= lc;
    const int n = static_cast<int>(basis_.size());
    lead_.push_back(h.front().mono);
    basis_.push_back(std::move(h));
    if (mode_ == Mode::Truncated) interreduce_with_last();
    const auto& t = order_.table();

    std::vector<Monomial> lcm_with(n);
    for (int i = 0; i < n; ++i) lcm_with[i] = Monomial::lcm(t, lead_[i], lead_[n]);

    for (auto it = pending_.begin(); it != pending_.end();) {
        const int i = static_cast<int>(it->first >> 32);
        const int j = static_cast<int>(it->first & 0xffffffffu);
        const Monomial& l = it->second;
        if (Monomial::divides(lead_[n], l) && !(lcm_with[i] == l) && !(lcm_with[j] == l)) {
            ++stats_.skipped_chain;
            cancelled_.insert(it->first);
            it = pending_.erase(it);
        } else {
            ++it;
        }
    }

    std::vector<char> keep(n, 1);
    for (int a = 0; a < n; ++a) {
        if (!keep[a]) continue;
        for (int b = 0; b < n; ++b) {
            if (a == b || !keep[b] || lcm_with[b] == lcm_with[a]) continue;
            if (Monomial::divides(lcm_with[b], lcm_with[a])) {
                keep[a] = 0;
                ++stats_.skipped_chain;
                break;
            }
        }
    }
    // equal-lcm groups: a coprime member kills the whole group, otherwise
    // one representative survives
    for (int a = 0; a < n; ++a) {
        if (!keep[a]) continue;
        bool group_coprime = Monomial::coprime(lead_[a], lead_[n]);
        for (int b = a + 1; b < n; ++b) {
            if (!keep[b] || !(lcm_with[b] == lcm_with[a])) continue;
            keep[b] = 0;
            ++stats_.skipped_chain;
            if (Monomial::coprime(lead_[b], lead_[n])) group_coprime = true;
        }
        if (group_coprime) {
            keep[a] = 0;
            ++stats_.skipped_coprime;
        }
    }

    for (int i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        const std::uint64_t deg = lcm_with[i].wdeg();
        if (hard_cap_ && deg > *hard_cap_) continue;
        pending_.emplace(pair_key(i, n), lcm_with[i]);
        queue_.push(Item{deg, seq_++, i, n, std::move(lcm_with[i])});
    }
}

void BuchbergerSession::process(const Item& item, EffortBudget* budget) {
    if (item.j >= 0 && cancelled_.erase(pair_key(item.i, item.j)) > 0) {
        if (trace_)
            *trace_ << "spair deg=" << item.deg << " (" << item.i << "," << item.j
                    << ") -> cancelled\n";
        return;
    }
    if (budget) budget->charge();
    ++stats_.items_processed;
    WPoly h;
    if (item.j < 0) {
        h = reduce_full(inputs_[item.i]);
        if (trace_ && h.empty())
            *trace_ << "input deg=" << item.deg << " #" << item.i << " -> 0\n";
        if (trace_ && !h.empty())
            *trace_ << "input deg=" << item.deg << " #" << item.i << " -> basis #" << basis_.size()
                    << "\n";
    } else {
        pending_.erase(pair_key(item.i, item.j));
        // S-polynomial; both basis elements are monic, so the lcm heads
        // cancel exactly
        const Monomial mi = item.lcm.div(lead_[item.i]);
        const Monomial mj = item.lcm.div(lead_[item.j]);
        WPoly a;
        a.reserve(basis_[item.i].size());
        for (const auto& t : basis_[item.i]) a.push_back({t.mono * mi, t.coeff});
        h = reduce_full(merge_sub(a, 1, basis_[item.j], 1, 1, mj, order_));
        if (trace_)
            *trace_ << "spair deg=" << item.deg << " (" << item.i << "," << item.j << ") -> "
                    << (h.empty() ? "0" : "new element") << "\n";
    }
    if (h.empty()) {
        if (item.j >= 0) ++stats_.reductions_to_zero;
        return;
    }
    append_element(std::move(h));
}

void BuchbergerSession::extend(std::uint64_t bound, EffortBudget* budget) {
    while (!queue_.empty() && queue_.top().deg <= bound) {
        Item item = queue_.top();
        queue_.pop();
        process(item, budget);
    }
}

void BuchbergerSession::run_all(EffortBudget* budget) {
    while (!queue_.empty()) {
        Item item = queue_.top();
        queue_.pop();
        process(item, budget);
    }
}

GroebnerBasis BuchbergerSession::snapshot(std::optional<std::uint64_t> bound) const {
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
        if (!bound || lead_[i].wdeg() <= *bound) keep.push_back(i);
    std::sort(keep.begin(), keep.end(), [&](int a, int b) { return order_.less(lead_[a], lead_[b]); });

    if (mode_ == Mode::Truncated) {
        // the basis is kept inter-reduced as it grows; just convert
        poly_cache_.resize(basis_.size(), Polynomial(order_.table_ptr()));
        cache_ok_.resize(basis_.size(), 0);
        GroebnerBasis out;
        out.elements.reserve(keep.size());
        for (int i : keep) {
            if (!cache_ok_[i]) {
                poly_cache_[i] = to_polynomial(basis_[i]);
                cache_ok_[i] = 1;
            }
            out.elements.push_back(poly_cache_[i]);
        }
        out.order = order_;
        out.degree_bound = bound;
        out.reduced = true;
        return out;
    }

    // Full inhomogeneous runs: minimalize (later elements can supersede
    // earlier heads) and tail-reduce at the end.
    std::vector<int> minimal;
    for (int i : keep) {
        bool divisible = false;
        for (int j : minimal)
            if (Monomial::divides(lead_[j], lead_[i])) {
                divisible = true;
                break;
            }
        if (!divisible) minimal.push_back(i);
    }
    std::vector<const WPoly*> work;
    std::vector<Monomial> lms;
    for (int i : minimal) {
        work.push_back(&basis_[i]);
        lms.push_back(lead_[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) {
        // tail-reduce against the other kept elements; normal forms are
        // canonical, so a single pass lands on the reduced basis
        WPoly p = *work[i];
        WPoly rem{p.front()};  // minimal set: the head itself is irreducible
        std::size_t head = 1;
        while (head < p.size()) {
            bool hit = false;
            for (std::size_t k = 0; k < work.size(); ++k) {
                if (k == i) continue;
                if (Monomial::divides(lms[k], p[head].mono)) {
                    const Monomial quot = p[head].mono.div(lms[k]);
                    p = merge_sub(p, head + 1, *work[k], 1, p[head].coeff, quot, order_);
                    head = 0;
                    hit = true;
                    break;
                }
            }
            if (!hit) rem.push_back(std::move(p[head++]));
        }
        reduced.push_back(to_polynomial(rem));
    }
    GroebnerBasis out;
    out.elements = std::move(reduced);
    out.order = order_;
    out.degree_bound = bound;
    out.reduced = true;
    return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
    std::vector<Term> p(f.terms().begin(), f.terms().end());
    std::sort(p.begin(), p.end(),
              [&](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
    std::vector<std::vector<Term>> divisors;
    std::vector<Term> leads;
    divisors.reserve(basis.size());
    for (const auto& g : basis) {
        std::vector<Term> w(g.terms().begin(), g.terms().end());
        std::sort(w.begin(), w.end(),
                  [&](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
        leads.push_back(w.front());
        divisors.push_back(std::move(w));
    }
    std::vector<Term> rem;
    std::size_t head = 0;
    while (head < p.size()) {
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (Monomial::divides(leads[k].mono, p[head].mono)) {
                const Monomial quot = p[head].mono.div(leads[k].mono);
                const Rational c = p[head].coeff / leads[k].coeff;
                p = merge_sub(p, head + 1, divisors[k], 1, c, quot, order);
                head = 0;
                reduced = true;
                break;
            }
        }
        if (!reduced) rem.push_back(std::move(p[head++]));
    }
    return Polynomial::from_terms(f.table_ptr(), std::move(rem));
}

GroebnerBasis buchberger_truncated(std::vector<Polynomial> generators, const MonomialOrder& order,
                                   std::uint64_t bound, EffortBudget* budget) {
    BuchbergerSession s(std::move(generators), order, BuchbergerSession::Mode::Truncated, bound);
    s.extend(bound, budget);
    return s.snapshot(bound);
}

GroebnerBasis buchberger_full(std::vector<Polynomial> generators, const MonomialOrder& order,
                              EffortBudget* budget) {
    BuchbergerSession s(std::move(generators), order, BuchbergerSession::Mode::Full);
    s.run_all(budget);
    return s.snapshot(std::nullopt);
}

}  // namespace lsemid
