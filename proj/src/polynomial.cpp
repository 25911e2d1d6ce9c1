#include "lsemid/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lsemid/errors.hpp"

namespace lsemid {

void check_same_table(const Polynomial& f, const Polynomial& g) {
    if (f.t_.get() != g.t_.get()) throw TableMismatch();
}

Polynomial Polynomial::constant(TablePtr t, Rational c) {
    return term(std::move(t), Monomial::one(), std::move(c));
}

Polynomial Polynomial::variable(TablePtr t, int id, int exp) {
    Monomial m = Monomial::var(*t, id, exp);
    return term(std::move(t), std::move(m), 1);
}

Polynomial Polynomial::term(TablePtr t, Monomial m, Rational c) {
    Polynomial p(std::move(t));
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(TablePtr t, std::vector<Term> terms) {
    Polynomial p(std::move(t));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void Polynomial::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::storage_less(b.mono, a.mono);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    check_same_table(f, g);
    Polynomial out(f.t_);
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    auto i = f.terms_.begin();
    auto j = g.terms_.begin();
    while (i != f.terms_.end() && j != g.terms_.end()) {
        if (i->mono == j->mono) {
            Rational c = i->coeff + j->coeff;
            if (c != 0) out.terms_.push_back({i->mono, std::move(c)});
            ++i, ++j;
        } else if (Monomial::storage_less(j->mono, i->mono)) {
            out.terms_.push_back(*i++);
        } else {
            out.terms_.push_back(*j++);
        }
    }
    out.terms_.insert(out.terms_.end(), i, f.terms_.end());
    out.terms_.insert(out.terms_.end(), j, g.terms_.end());
    return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + g.scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(t_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
}

Polynomial Polynomial::shifted(const Monomial& m, const Rational& c) const {
    Polynomial out(t_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the structural order only up
    // to merges, so re-canonicalize
    out.canonicalize();
    return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_same_table(f, g);
    Polynomial out(f.t_);
    out.terms_.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_) out.terms_.push_back({a.mono * b.mono, a.coeff * b.coeff});
    out.canonicalize();
    return out;
}

std::optional<std::uint64_t> Polynomial::weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.wdeg());
    return d;
}

std::optional<std::uint32_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.deg());
    return d;
}

bool Polynomial::is_w_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.wdeg() != terms_.front().mono.wdeg()) return false;
    return true;
}

Polynomial Polynomial::homogenized() const {
    if (terms_.empty()) throw ZeroPolynomialError("homogenize");
    const int h = t_->h_id();
    if (h < 0 || contains_var(h)) throw Error("homogenize requires an h-free polynomial");
    const std::uint64_t d = *weighted_degree();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const std::uint64_t pad = d - t.mono.wdeg();
        out.push_back({pad == 0 ? t.mono : t.mono * Monomial::var(*t_, h, static_cast<int>(pad)),
                       t.coeff});
    }
    return from_terms(t_, std::move(out));
}

Polynomial Polynomial::dehomogenized() const {
    const int h = t_->h_id();
    if (h < 0) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::pair<int, int>> exps;
        for (const auto& [var, exp] : t.mono.exps())
            if (var != h) exps.emplace_back(var, exp);
        out.push_back({Monomial::make(*t_, std::move(exps)), t.coeff});
    }
    return from_terms(t_, std::move(out));
}

bool Polynomial::contains_var(int var) const {
    for (const auto& t : terms_)
        if (t.mono.exponent(var) > 0) return true;
    return false;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
    return d;
}

std::vector<int> Polynomial::support() const {
    std::vector<int> vars;
    for (const auto& t : terms_)
        for (const auto& [var, exp] : t.mono.exps()) vars.push_back(var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw ZeroPolynomialError("leading_term");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.less(best->mono, t.mono)) best = &t;
    return *best;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (const auto& [var, exp] : t.mono.exps())
            for (int k = 0; k < exp; ++k) prod *= values[var];
        sum += prod;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& values) const {
    Polynomial out = zero(t_);
    for (const auto& t : terms_) {
        Polynomial prod = constant(t_, t.coeff);
        std::vector<std::pair<int, int>> keep;
        for (const auto& [var, exp] : t.mono.exps()) {
            auto it = values.find(var);
            if (it == values.end()) {
                keep.emplace_back(var, exp);
            } else {
                for (int k = 0; k < exp; ++k) prod = prod * it->second;
            }
        }
        out = out + prod.shifted(Monomial::make(*t_, std::move(keep)), 1);
    }
    return out;
}

std::string term_str(const VariableTable& t, const Monomial& m, const Rational& c, bool leading) {
    std::ostringstream os;
    Rational a = c < 0 ? Rational(-c) : c;
    if (leading) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || m.is_one()) {
        os << a.get_str();
        if (!m.is_one()) os << "*";
    }
    bool first = true;
    for (const auto& [var, exp] : m.exps()) {
        if (!first) os << "*";
        first = false;
        os << t.name(var);
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

std::string Polynomial::str(const MonomialOrder* order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    if (order)
        std::sort(sorted.begin(), sorted.end(),
                  [&](const Term* a, const Term* b) { return order->less(b->mono, a->mono); });
    std::string out;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        out += term_str(*t_, sorted[i]->mono, sorted[i]->coeff, i == 0);
    return out;
}

}  // namespace lsemid
