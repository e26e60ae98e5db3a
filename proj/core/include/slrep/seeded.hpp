#ifndef SLREP_SEEDED_HPP
#define SLREP_SEEDED_HPP

#include <cstdint>

#include "slrep/rational.hpp"

namespace slrep {

/// Deterministic random source. splitmix64 over an explicit counter, so the
/// same seed and draw sequence reproduce the same values on every platform
/// (standard-library distributions are implementation defined and would not).
class SeededSource {
public:
    explicit SeededSource(std::uint64_t seed) : state_(seed), counter_(0) {}

    std::uint64_t next_u64() {
        ++counter_;
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant for
    /// probe generation and is accepted for the sake of portability.
    long next_int(long lo, long hi) {
        if (hi < lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    /// Random rational with numerator in [-997, 997], denominator in [1, 97];
    /// the contract rank_specialized depends on.
    Rational next_rational() {
        long num = next_int(-997, 997);
        long den = next_int(1, 97);
        return make_rational(num, den);
    }

    std::uint64_t seed_state() const { return state_; }
    std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t state_;
    std::uint64_t counter_;
};

} // namespace slrep

#endif
