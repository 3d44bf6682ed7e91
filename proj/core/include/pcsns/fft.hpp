#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "pcsns/matrix.hpp"

namespace pcsns {

/**
 * One-dimensional complex DFT of fixed length, unnormalized in both directions:
 *
 *   forward:  X[k] = sum_t x[t] e^{-j 2 pi k t / n}
 *   inverse:  x[t] = sum_k X[k] e^{+j 2 pi k t / n}
 *
 * Backed by FFTW with estimate-mode plans, so the same input always produces
 * bit-identical output. An instance owns its scratch buffers and must not be
 * used from two threads at once; separate instances are independent.
 */
class Dft {
public:
    enum class Direction { forward, inverse };

    Dft(std::size_t n, Direction direction);
    ~Dft();
    Dft(Dft&&) noexcept;
    Dft& operator=(Dft&&) noexcept;
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    std::size_t size() const;
    /// in and out may alias.
    void execute(std::span<const Complex> in, std::span<Complex> out);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace pcsns
