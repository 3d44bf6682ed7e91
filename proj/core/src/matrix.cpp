#include "pcsns/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace pcsns {

SymbolMatrix hadamard(const SymbolMatrix& a, const SymbolMatrix& b) {
    require_same_shape(a, b, "hadamard");
    SymbolMatrix out(a.rows(), a.cols());
    std::transform(a.data().begin(), a.data().end(), b.data().begin(), out.data().begin(),
                   [](Complex x, Complex y) { return x * y; });
    return out;
}

SymbolMatrix hadamard_divide(const SymbolMatrix& a, const SymbolMatrix& b) {
    require_same_shape(a, b, "hadamard_divide");
    SymbolMatrix out(a.rows(), a.cols());
    std::transform(a.data().begin(), a.data().end(), b.data().begin(), out.data().begin(),
                   [](Complex x, Complex y) { return x / y; });
    return out;
}

double frobenius_norm(const SymbolMatrix& a) {
    double acc = 0.0;
    for (const Complex& x : a.data()) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

double relative_frobenius_error(const SymbolMatrix& a, const SymbolMatrix& b) {
    require_same_shape(a, b, "relative_frobenius_error");
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a.data()[i] - b.data()[i]);
        ref += std::norm(b.data()[i]);
    }
    return ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

double max_abs_difference(const SymbolMatrix& a, const SymbolMatrix& b) {
    require_same_shape(a, b, "max_abs_difference");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

}  // namespace pcsns
