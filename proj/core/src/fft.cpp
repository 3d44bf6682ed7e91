#include "pcsns/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pcsns {

namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

struct Dft::Impl {
    std::size_t n = 0;
    fftw_complex* buffer = nullptr;
    fftw_plan plan = nullptr;

    ~Impl() {
        std::lock_guard lock(planner_mutex());
        if (plan != nullptr) {
            fftw_destroy_plan(plan);
        }
        if (buffer != nullptr) {
            fftw_free(buffer);
        }
    }
};

Dft::Dft(std::size_t n, Direction direction) : impl_(std::make_unique<Impl>()) {
    if (n == 0) {
        throw std::invalid_argument("Dft: length must be positive");
    }
    impl_->n = n;
    std::lock_guard lock(planner_mutex());
    impl_->buffer = fftw_alloc_complex(n);
    if (impl_->buffer == nullptr) {
        throw std::bad_alloc();
    }
    const int sign = direction == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    impl_->plan = fftw_plan_dft_1d(static_cast<int>(n), impl_->buffer, impl_->buffer, sign, FFTW_ESTIMATE);
    if (impl_->plan == nullptr) {
        throw std::runtime_error("Dft: FFTW planning failed");
    }
}

Dft::~Dft() = default;
Dft::Dft(Dft&&) noexcept = default;
Dft& Dft::operator=(Dft&&) noexcept = default;

std::size_t Dft::size() const { return impl_->n; }

void Dft::execute(std::span<const Complex> in, std::span<Complex> out) {
    if (in.size() != impl_->n || out.size() != impl_->n) {
        throw std::invalid_argument("Dft::execute: span length does not match transform length");
    }
    auto* buf = reinterpret_cast<Complex*>(impl_->buffer);
    std::copy(in.begin(), in.end(), buf);
    fftw_execute(impl_->plan);
    std::copy(buf, buf + impl_->n, out.begin());
}

}  // namespace pcsns
