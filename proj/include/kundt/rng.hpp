#pragma once

#include <cstdint>
#include <vector>

#include "kundt/rational.hpp"

namespace kundt {

/// SplitMix64. Hand-rolled so that reports are byte-identical across
/// platforms for a given seed; std::uniform_int_distribution is not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Modulo bias is irrelevant at our bounds.
    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    /// Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Small rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long max_num = 9, long max_den = 3) {
        Rational r(range(-max_num, max_num), range(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long max_num = 9, long max_den = 3) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!is_zero(r)) return r;
        }
    }

    std::vector<Rational> rational_vector(std::size_t len, long max_num = 9, long max_den = 3) {
        std::vector<Rational> v;
        v.reserve(len);
        for (std::size_t i = 0; i < len; ++i) v.push_back(rational(max_num, max_den));
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace kundt
