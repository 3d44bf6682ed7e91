#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace pcsns {

/**
 * Portable seeded random stream.
 *
 * Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard.
 * The standard library distributions are implementation-defined, so every
 * mapping from raw 64-bit words is spelled out here:
 *
 *   uniform01()   top 53 bits of one word, scaled by 2^-53, in [0, 1)
 *   index(n)      top bits of one word for power-of-two n, otherwise
 *                 rejection sampling on the top 32 bits
 *   gaussian()    Box-Muller on two uniform01() draws, u1 mapped to (0, 1]
 *                 (one draw per call; the sine branch is discarded)
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform01();
    std::uint64_t index(std::uint64_t n);
    double gaussian();
    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_gaussian(double variance);

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a base seed and a purpose tag (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

}  // namespace pcsns
