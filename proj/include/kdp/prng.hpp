#pragma once

#include <cstdint>
#include <random>

namespace kdp {

// Deterministic RNG for reproducible suites. mt19937_64 has a fully specified
// bit stream; the range reduction below is pinned here instead of relying on
// std distributions, whose outputs vary across standard libraries.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform-ish value in [0, n); modulo bias is irrelevant at these sizes
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }

    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {  // inclusive
        return lo + below(hi - lo + 1);
    }

    bool coin() { return (gen_() & 1) != 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace kdp
