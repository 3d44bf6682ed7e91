#include "pcsns/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcsns {

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::index(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::index: n must be positive");
    }
    if (n == 1) {
        return 0;
    }
    if (std::has_single_bit(n)) {
        const int bits = std::countr_zero(n);
        return engine_() >> (64 - bits);
    }
    if (n > (std::uint64_t{1} << 32)) {
        throw std::invalid_argument("Rng::index: n too large");
    }
    const std::uint64_t limit = ((std::uint64_t{1} << 32) / n) * n;
    for (;;) {
        const std::uint64_t v = engine_() >> 32;
        if (v < limit) {
            return v % n;
        }
    }
}

double Rng::gaussian() {
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> Rng::complex_gaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace pcsns
