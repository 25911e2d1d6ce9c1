#include "lsemid/order.hpp"

#include <algorithm>

namespace lsemid {

MonomialOrder MonomialOrder::elimination(TablePtr t, std::vector<int> block1, bool graded) {
    MonomialOrder o;
    o.t_ = std::move(t);
    o.graded_ = graded;
    o.block1_ = std::move(block1);
    const int n = o.t_->size();
    o.pos_.assign(n, -1);
    o.in_b1_.assign(n, 0);
    for (std::size_t i = 0; i < o.block1_.size(); ++i) {
        o.pos_[o.block1_[i]] = static_cast<int>(i);
        o.in_b1_[o.block1_[i]] = 1;
    }
    // block 2 in table-listing order; the h variable is listed last (and the
    // table already lists it last), so plain listing positions work.
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!o.in_b1_[v]) o.pos_[v] = next++;
    return o;
}

MonomialOrder MonomialOrder::for_parameter(TablePtr t, const std::vector<int>& theta_rem, int q,
                                           bool graded) {
    std::vector<int> block1;
    block1.reserve(theta_rem.size());
    for (int v : theta_rem)
        if (v != q) block1.push_back(v);
    std::sort(block1.begin(), block1.end());
    block1.push_back(q);  // q smallest within the block
    return elimination(std::move(t), std::move(block1), graded);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (graded_) {
        if (a.wdeg() != b.wdeg())
            return a.wdeg() > b.wdeg() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    // Single merged walk over both sparse exponent vectors. Block 1 is lex
    // on priority positions (lowest position wins), so we track the smallest
    // position with a differing exponent. Block 2 is graded reverse lex on
    // listing positions (ties broken at the largest position, smaller
    // exponent winning), so we track the total degree and the largest
    // differing position.
    int b1_pos = INT32_MAX, b1_sign = 0;
    long deg_a = 0, deg_b = 0;
    int b2_pos = -1, b2_sign = 0;
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        int var;
        int xa = 0, xb = 0;
        const int va = i < ea.size() ? ea[i].first : INT32_MAX;
        const int vb = j < eb.size() ? eb[j].first : INT32_MAX;
        if (va <= vb) {
            var = va;
            xa = ea[i++].second;
        } else {
            var = vb;
        }
        if (vb == var && j < eb.size()) xb = eb[j++].second;
        if (in_b1_[var]) {
            if (xa != xb && pos_[var] < b1_pos) {
                b1_pos = pos_[var];
                b1_sign = xa > xb ? 1 : -1;
            }
        } else {
            deg_a += xa;
            deg_b += xb;
            if (xa != xb && pos_[var] > b2_pos) {
                b2_pos = pos_[var];
                b2_sign = xa > xb ? -1 : 1;
            }
        }
    }
    if (b1_sign != 0)
        return b1_sign > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (deg_a != deg_b)
        return deg_a > deg_b ? std::strong_ordering::greater : std::strong_ordering::less;
    if (b2_sign != 0)
        return b2_sign > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

}  // namespace lsemid
