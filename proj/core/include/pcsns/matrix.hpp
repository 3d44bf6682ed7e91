#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcsns {

using Complex = std::complex<double>;

/**
 * Dense 2-D array stored column-major: element (row, col) lives at
 * data[col * rows + row]. A column is one OFDM symbol, so per-symbol
 * transforms and sub-band folding touch contiguous memory.
 *
 * Indices are 0-based. Formulas that are written with 1-based subcarrier and
 * symbol indices convert at the call site (subcarrier m = row + 1,
 * symbol n = col + 1).
 */
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t row, std::size_t col) { return data_[col * rows_ + row]; }
    const T& operator()(std::size_t row, std::size_t col) const { return data_[col * rows_ + row]; }

    std::span<T> column(std::size_t col) { return {data_.data() + col * rows_, rows_}; }
    std::span<const T> column(std::size_t col) const { return {data_.data() + col * rows_, rows_}; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    /// Rows [first_row, first_row + n_rows) as a new grid.
    Grid row_block(std::size_t first_row, std::size_t n_rows) const {
        if (first_row + n_rows > rows_) {
            throw std::out_of_range("row block exceeds grid");
        }
        Grid out(n_rows, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < n_rows; ++r) {
                out(r, c) = (*this)(first_row + r, c);
            }
        }
        return out;
    }

    void set_row_block(std::size_t first_row, const Grid& block) {
        if (block.cols_ != cols_ || first_row + block.rows_ > rows_) {
            throw std::invalid_argument("row block does not fit grid");
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < block.rows_; ++r) {
                (*this)(first_row + r, c) = block(r, c);
            }
        }
    }

    bool operator==(const Grid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Complex frequency-domain frame: rows are subcarriers, columns are OFDM symbols.
using SymbolMatrix = Grid<Complex>;

inline void require_same_shape(const SymbolMatrix& a, const SymbolMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
}

SymbolMatrix hadamard(const SymbolMatrix& a, const SymbolMatrix& b);
SymbolMatrix hadamard_divide(const SymbolMatrix& a, const SymbolMatrix& b);
double frobenius_norm(const SymbolMatrix& a);
/// ||a - b||_F / ||b||_F, or the absolute difference norm when b is zero.
double relative_frobenius_error(const SymbolMatrix& a, const SymbolMatrix& b);
double max_abs_difference(const SymbolMatrix& a, const SymbolMatrix& b);

}  // namespace pcsns
