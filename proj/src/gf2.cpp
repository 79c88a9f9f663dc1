#include "gaussforge/gf2.hpp"

#include "gaussforge/errors.hpp"

namespace gaussforge {

namespace {

std::size_t word_count(std::size_t cols) {
    return cols == 0 ? 1 : (cols + 63) / 64;
}

} // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(word_count(cols)), bits_(rows * words_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] ^= std::uint64_t(1) << (c % 64);
}

BitRow BitMatrix::row(std::size_t r) const {
    return BitRow(bits_.begin() + r * words_, bits_.begin() + (r + 1) * words_);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w)
        bits_[dst * words_ + w] ^= bits_[src * words_ + w];
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w)
        if (bits_[r * words_ + w] != 0) return false;
    return true;
}

BitRow unit_bit_row(std::size_t cols, std::size_t index) {
    if (index >= cols)
        fail(ErrorKind::LabelOutOfRange, "gf2", "unit vector index out of range");
    BitRow row(word_count(cols), 0);
    row[index / 64] |= std::uint64_t(1) << (index % 64);
    return row;
}

void xor_into(BitRow& dst, const BitRow& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

bool bit_row_is_zero(const BitRow& row) {
    for (std::uint64_t w : row)
        if (w != 0) return false;
    return true;
}

Gf2Echelon::Gf2Echelon(const BitMatrix& m) : cols_(m.cols()), words_(m.words_per_row()) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitRow row = m.row(r);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const std::size_t p = pivots_[i];
            if ((row[p / 64] >> (p % 64)) & 1u) xor_into(row, basis_[i]);
        }
        if (bit_row_is_zero(row)) continue;
        std::size_t pivot = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((row[c / 64] >> (c % 64)) & 1u) {
                pivot = c;
                break;
            }
        }
        // keep basis sorted by pivot column for a deterministic reduced form
        std::size_t at = basis_.size();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (pivot < pivots_[i]) {
                at = i;
                break;
            }
        }
        basis_.insert(basis_.begin() + at, row);
        pivots_.insert(pivots_.begin() + at, pivot);
    }
}

bool Gf2Echelon::contains(BitRow row) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((row[p / 64] >> (p % 64)) & 1u) xor_into(row, basis_[i]);
    }
    return bit_row_is_zero(row);
}

std::size_t gf2_rank(const BitMatrix& m) {
    return Gf2Echelon(m).rank();
}

} // namespace gaussforge
