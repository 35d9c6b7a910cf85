// Deterministic 64-bit pseudo-random generator used everywhere randomness
// is needed (instance generators, LP constraint shuffling).
//
// The recurrence is fixed so streams are reproducible from the seed alone,
// independent of platform or standard library:
//
//   state := state + 0x9E3779B97F4A7C15            (mod 2^64)
//   z := state
//   z := (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2^64)
//   z := (z XOR (z >> 27)) * 0x94D049BB133111EB    (mod 2^64)
//   output := z XOR (z >> 31)
//
// Bounded draws use plain modulo reduction: next_below(n) = output mod n.
#pragma once

#include <cstdint>
#include <vector>

namespace digiconv {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    // Inclusive integer range.
    std::int64_t next_in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace digiconv
