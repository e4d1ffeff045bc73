#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace stratachi {

/// splitmix64; used to derive independent child seeds from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG wrapper. Bounded draws use rejection sampling on the raw
/// 64-bit stream, so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty range");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform over [-bound, -1] union [1, bound].
    long long nonzero_in(long long bound) {
        const long long v = static_cast<long long>(below(static_cast<std::uint64_t>(2 * bound)));
        return v < bound ? v - bound : v - bound + 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace stratachi
