#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace airrev {

// splitmix64 finalizer. Used both as the generator step and for seed mixing.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic sub-stream seed for (master, a, b), e.g. (master, k, repeat).
// Identical on every platform, so parallel and serial sweeps agree.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(master ^ (0x9e3779b97f4a7c15ull * (a + 1)));
    return mix64(h ^ (0xc2b2ae3d27d4eb4full * (b + 1)));
}

// Small self-contained generator. std::mt19937 would do, but the standard
// distributions are implementation-defined, and byte-identical corpora
// across toolchains are part of the contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform index in [0, n).
    std::size_t next_index(std::size_t n) {
        const std::size_t i = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    // Uniform integer in [lo, hi].
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_index(static_cast<std::size_t>(hi - lo + 1)));
    }

    // Standard normal via Box-Muller; two uniforms per draw.
    double next_gaussian() {
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace airrev
