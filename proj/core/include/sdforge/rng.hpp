#pragma once
// Seedable RNG for the search engines. mt19937_64 is pinned by the standard,
// and the derived draws below avoid std:: distributions (whose algorithms are
// implementation-defined), so identical seeds give identical streams on every
// platform. The identifier string is echoed into run logs.

#include <cstdint>
#include <random>

namespace sdforge {

class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double real01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real01() < p; }

    // Uniform in [0, bound). Modulo bias is irrelevant at the bounds used here.
    uint32_t below(uint32_t bound) { return static_cast<uint32_t>(u64() % bound); }

    uint64_t bits36() { return u64() & ((uint64_t{1} << 36) - 1); }

private:
    std::mt19937_64 gen_;
};

}  // namespace sdforge
