#pragma once

#include <cstdint>
#include <vector>

namespace subdense {

// splitmix64; used both as a generator and to derive independent sub-streams
// from (seed, index) pairs so that recursion branches stay deterministic.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x51ED2700A1B2C3D4ULL));
}

// Tiny deterministic PRNG. We avoid std::uniform_int_distribution and
// std::shuffle on purpose: their outputs are implementation-defined, and
// generated instances are pinned in golden tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0xD6E8FEB86659FD93ULL)) {}

    std::uint64_t next() {
        state_ = splitmix64(state_);
        return state_;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection keeps the draw unbiased
        std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace subdense
