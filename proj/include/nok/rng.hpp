#pragma once

#include <cstdint>

#include "nok/rational.hpp"

namespace nok {

/// splitmix64: tiny deterministic generator with identical output on every
/// platform, so seeded reports are byte-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform over {0, ..., n-1}.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Rational in [lo, hi] on a 2^30 grid.
    Rational uniform(const Rational& lo, const Rational& hi) {
        const std::uint64_t grid = 1ULL << 30;
        Rational k(static_cast<long long>(next() & (grid - 1)));
        return lo + (hi - lo) * k / Rational(static_cast<long long>(grid));
    }

private:
    std::uint64_t state_;
};

} // namespace nok
