#ifndef LSEMID_RNG_HPP
#define LSEMID_RNG_HPP

#include <cstdint>
#include <random>

#include "lsemid/rational.hpp"

namespace lsemid {

// mt19937_64 is fully specified by the standard, so raw draws are portable.
// We avoid std::uniform_int_distribution (implementation-defined sequences)
// and roll the classic rejection scheme instead.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// True with probability num/den, exactly.
inline bool bernoulli_exact(Rng& rng, std::uint64_t num, std::uint64_t den) {
    if (num == 0) return false;
    if (num >= den) return true;
    return uniform_below(rng, den) < num;
}

// Uniform over {±1,...,±9}/{1,...,9}.
inline Rational random_small_nonzero(Rng& rng) {
    const long num = 1 + static_cast<long>(uniform_below(rng, 9));
    const long den = 1 + static_cast<long>(uniform_below(rng, 9));
    const bool neg = uniform_below(rng, 2) == 1;
    Rational q(neg ? -num : num, den);
    q.canonicalize();
    return q;
}

// Uniform over {1,...,9}/{1,...,9}.
inline Rational random_small_positive(Rng& rng) {
    const long num = 1 + static_cast<long>(uniform_below(rng, 9));
    const long den = 1 + static_cast<long>(uniform_below(rng, 9));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace lsemid

#endif
