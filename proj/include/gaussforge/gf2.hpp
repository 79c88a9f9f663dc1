#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gaussforge {

using BitRow = std::vector<std::uint64_t>;

// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    BitRow row(std::size_t r) const;
    void xor_row(std::size_t dst, std::size_t src); // dst ^= src
    bool row_is_zero(std::size_t r) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Row echelon form of a BitMatrix, kept for rank and span-membership queries.
class Gf2Echelon {
public:
    explicit Gf2Echelon(const BitMatrix& m);

    std::size_t rank() const noexcept { return basis_.size(); }
    // True iff `row` (packed, same column count as the source matrix) lies in
    // the row space.
    bool contains(BitRow row) const;

private:
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<BitRow> basis_;          // rows with distinct pivots, pivot-sorted
    std::vector<std::size_t> pivots_;
};

std::size_t gf2_rank(const BitMatrix& m);

BitRow unit_bit_row(std::size_t cols, std::size_t index);
void xor_into(BitRow& dst, const BitRow& src);
bool bit_row_is_zero(const BitRow& row);

} // namespace gaussforge
