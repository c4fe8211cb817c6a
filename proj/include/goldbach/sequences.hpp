#pragma once

// Odd-summand pairing for an even number 2n and the two figure matrices built
// on top of it.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach/caps.hpp"
#include "goldbach/error.hpp"
#include "goldbach/wilson.hpp"

namespace goldbach {

/// Index range 1..size of the odd pairs (2i+1, 2n-1-2i) summing to 2n.
struct PairIndexSpace {
    std::uint64_t n = 3;
    std::uint64_t size = 1;

    std::uint64_t two_n() const noexcept { return 2 * n; }
};

struct SummandPair {
    std::uint64_t lower = 3;
    std::uint64_t upper = 3;
    std::uint64_t index = 1;

    std::uint64_t sum() const noexcept { return lower + upper; }
    friend bool operator==(const SummandPair&, const SummandPair&) = default;
};

namespace detail {
inline void require_n(std::uint64_t n) {
    if (n < 3) {
        throw DomainError("pairing operations need n >= 3 (2n >= 6), got n = " + std::to_string(n));
    }
}
} // namespace detail

/// (n - 2 + (n mod 2)) / 2; the numerator is always even.
inline std::uint64_t pair_count(std::uint64_t n) {
    detail::require_n(n);
    return (n - 2 + n % 2) / 2;
}

inline PairIndexSpace index_space(std::uint64_t n) { return {n, pair_count(n)}; }

/// 3, 5, ..., 1 + 2|I_n| (ascending).
inline std::vector<std::uint64_t> lower_sequence(std::uint64_t n) {
    const auto size = pair_count(n);
    std::vector<std::uint64_t> out;
    out.reserve(size);
    for (std::uint64_t i = 1; i <= size; ++i) out.push_back(2 * i + 1);
    return out;
}

/// 2n-3, 2n-5, ..., 2n-1-2|I_n| (descending).
inline std::vector<std::uint64_t> upper_sequence(std::uint64_t n) {
    const auto size = pair_count(n);
    std::vector<std::uint64_t> out;
    out.reserve(size);
    for (std::uint64_t i = 1; i <= size; ++i) out.push_back(2 * n - 1 - 2 * i);
    return out;
}

inline SummandPair pair_at(std::uint64_t n, std::uint64_t i) {
    const auto size = pair_count(n);
    if (i < 1 || i > size) {
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [1, " + std::to_string(size) +
                              "] for 2n = " + std::to_string(2 * n));
    }
    return {2 * i + 1, 2 * (n - 1 - i) + 1, i};
}

enum class MatrixKind { distribution, boolean };

inline std::string_view to_string(MatrixKind kind) {
    return kind == MatrixKind::distribution ? "distribution" : "boolean";
}

/// Square grid over the odd labels 3, 5, ..., 2n-3, stored row-major.
struct MatrixExport {
    MatrixKind kind = MatrixKind::distribution;
    std::uint64_t side = 0;
    std::vector<std::uint64_t> labels;
    std::vector<std::uint64_t> cells;

    /// 0-based row/column.
    std::uint64_t cell(std::uint64_t row, std::uint64_t col) const { return cells.at(row * side + col); }

    /// Cell addressed by its odd row and column labels.
    std::uint64_t at_labels(std::uint64_t row_label, std::uint64_t col_label) const {
        auto index_of = [&](std::uint64_t label) {
            if (label < 3 || label % 2 == 0 || (label - 3) / 2 >= side) {
                throw IndexOutOfRange("label " + std::to_string(label) + " not in the matrix");
            }
            return (label - 3) / 2;
        };
        return cell(index_of(row_label), index_of(col_label));
    }
};

/// Number of odd labels in [3, 2n-3].
inline std::uint64_t matrix_side(std::uint64_t n) {
    detail::require_n(n);
    return n - 2;
}

inline MatrixExport export_matrix(std::uint64_t n, MatrixKind kind, const Caps& caps = {}) {
    const auto side = matrix_side(n);
    if (side > caps.matrix_side_cap) {
        throw CapExceeded("matrix side " + std::to_string(side) + " exceeds cap " +
                          std::to_string(caps.matrix_side_cap));
    }
    MatrixExport m;
    m.kind = kind;
    m.side = side;
    m.labels.reserve(side);
    for (std::uint64_t r = 1; r <= side; ++r) m.labels.push_back(2 * r + 1);
    m.cells.resize(side * side);

    std::vector<std::uint8_t> prime_label;
    if (kind == MatrixKind::boolean) {
        prime_label.reserve(side);
        for (auto label : m.labels) prime_label.push_back(wilson_indicator(label).indicator ? 1 : 0);
    }
    for (std::uint64_t r = 0; r < side; ++r) {
        for (std::uint64_t c = 0; c < side; ++c) {
            m.cells[r * side + c] = kind == MatrixKind::distribution
                                        ? m.labels[r] + m.labels[c]
                                        : static_cast<std::uint64_t>(prime_label[r] & prime_label[c]);
        }
    }
    return m;
}

/// Cells (2i+1, 2n-1-2i) for i = 1..|I_n|: the part of the 2n anti-diagonal
/// inside the pair index space. The matrix must have been exported for n.
inline std::vector<std::uint64_t> index_space_antidiagonal(const MatrixExport& m, std::uint64_t n) {
    if (m.side != matrix_side(n)) throw DomainError("matrix was not exported for this n");
    std::vector<std::uint64_t> out;
    for (auto label : lower_sequence(n)) out.push_back(m.at_labels(label, 2 * n - label));
    return out;
}

} // namespace goldbach
