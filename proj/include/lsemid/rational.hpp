#ifndef LSEMID_RATIONAL_HPP
#define LSEMID_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lsemid {

// Exact rational coefficients. All core arithmetic is exact; no floating
// point appears anywhere in the algebra.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "a/b", "a", or a plain decimal like "0.2" (into 2/10, canonicalized).
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            const std::size_t frac_len = s.size() - dot - 1;
            if (digits.empty() || frac_len == 0) return std::nullopt;
            mpz_class num(digits, 10), den(1);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        Rational q(s, 10);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace lsemid

#endif
