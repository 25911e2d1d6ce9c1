#include "lsemid/monomial.hpp"

#include <algorithm>

#include "lsemid/errors.hpp"

namespace lsemid {

namespace {

inline std::uint64_t var_bit(int var) { return 1ull << (var & 63); }

}  // namespace

Monomial Monomial::make(const VariableTable& t, std::vector<std::pair<int, int>> exps) {
    std::sort(exps.begin(), exps.end());
    Monomial m;
    for (const auto& [var, exp] : exps) {
        if (exp == 0) continue;
        if (!m.e_.empty() && m.e_.back().first == var)
            m.e_.back().second += exp;
        else
            m.e_.emplace_back(var, exp);
    }
    std::erase_if(m.e_, [](const auto& p) { return p.second == 0; });
    for (const auto& [var, exp] : m.e_) {
        m.deg_ += static_cast<std::uint32_t>(exp);
        m.wdeg_ += static_cast<std::uint64_t>(exp) * t.weight(var);
        m.mask_ |= var_bit(var);
    }
    return m;
}

Monomial Monomial::make(const VariableTable& t, std::initializer_list<std::pair<int, int>> exps) {
    return make(t, std::vector<std::pair<int, int>>(exps));
}

Monomial Monomial::var(const VariableTable& t, int id, int exp) {
    return make(t, {{id, exp}});
}

int Monomial::exponent(int var) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(var, 0));
    return (it != e_.end() && it->first == var) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.e_.reserve(a.e_.size() + b.e_.size());
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            m.e_.push_back(*ia++);
        else if (ib->first < ia->first)
            m.e_.push_back(*ib++);
        else {
            m.e_.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    m.e_.insert(m.e_.end(), ia, a.e_.end());
    m.e_.insert(m.e_.end(), ib, b.e_.end());
    m.deg_ = a.deg_ + b.deg_;
    m.wdeg_ = a.wdeg_ + b.wdeg_;
    m.mask_ = a.mask_ | b.mask_;
    return m;
}

bool Monomial::divides(const Monomial& b, const Monomial& a) {
    if (b.wdeg_ > a.wdeg_ || (b.mask_ & ~a.mask_) != 0) return false;
    auto ia = a.e_.begin();
    for (const auto& [var, exp] : b.e_) {
        while (ia != a.e_.end() && ia->first < var) ++ia;
        if (ia == a.e_.end() || ia->first != var || ia->second < exp) return false;
    }
    return true;
}

Monomial Monomial::div(const Monomial& b) const {
    Monomial m;
    auto ib = b.e_.begin();
    for (const auto& [var, exp] : e_) {
        int sub = 0;
        while (ib != b.e_.end() && ib->first < var) ++ib;
        if (ib != b.e_.end() && ib->first == var) sub = ib->second;
        if (exp - sub > 0) {
            m.e_.emplace_back(var, exp - sub);
            m.mask_ |= var_bit(var);
        }
    }
    m.deg_ = deg_ - b.deg_;
    m.wdeg_ = wdeg_ - b.wdeg_;
    return m;
}

Monomial Monomial::lcm(const VariableTable& t, const Monomial& a, const Monomial& b) {
    Monomial m;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            m.e_.push_back(*ia++);
        else if (ib->first < ia->first)
            m.e_.push_back(*ib++);
        else {
            m.e_.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia, ++ib;
        }
    }
    m.e_.insert(m.e_.end(), ia, a.e_.end());
    m.e_.insert(m.e_.end(), ib, b.e_.end());
    for (const auto& [var, exp] : m.e_) {
        m.deg_ += static_cast<std::uint32_t>(exp);
        m.wdeg_ += static_cast<std::uint64_t>(exp) * t.weight(var);
        m.mask_ |= var_bit(var);
    }
    return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & b.mask_) == 0) return true;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() && ib != b.e_.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else
            return false;
    }
    return true;
}

bool Monomial::storage_less(const Monomial& a, const Monomial& b) {
    return a.e_ < b.e_;
}

}  // namespace lsemid
