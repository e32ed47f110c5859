#pragma once

#include "scottpersist/rational.hpp"

#include <cstdint>
#include <random>

namespace scottpersist {

/// Seeded generator with portable reductions: the same seed gives the same
/// stream on every standard library, unlike std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    /// Uniform in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    bool coin() { return (engine_() & 1u) != 0; }
    /// Probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return engine_() % den < num; }

    /// Rational in [lo, hi] whose denominator divides one of 1..max_den.
    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den)
    {
        const std::int64_t den = integer(1, max_den);
        Rational q(mpz_class(static_cast<long>(integer(lo * den, hi * den))), mpz_class(static_cast<long>(den)));
        q.canonicalize();
        return q;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace scottpersist
