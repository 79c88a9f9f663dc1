#include <doctest.h>

#include <random>

#include "gaussforge/errors.hpp"
#include "gaussforge/gf2.hpp"
#include "oracles.hpp"

using namespace gaussforge;

TEST_CASE("bit matrix get/set/flip round trip") {
    BitMatrix m(3, 70); // spans two words per row
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 70);
    CHECK_FALSE(m.get(1, 65));
    m.set(1, 65, true);
    CHECK(m.get(1, 65));
    m.flip(1, 65);
    CHECK_FALSE(m.get(1, 65));
    m.set(2, 0, true);
    m.set(2, 69, true);
    CHECK(m.get(2, 0));
    CHECK(m.get(2, 69));
    CHECK_FALSE(m.row_is_zero(2));
    CHECK(m.row_is_zero(0));
}

TEST_CASE("xor_row adds rows over GF(2)") {
    BitMatrix m(2, 5);
    m.set(0, 1, true);
    m.set(0, 3, true);
    m.set(1, 3, true);
    m.set(1, 4, true);
    m.xor_row(0, 1);
    CHECK(m.get(0, 1));
    CHECK_FALSE(m.get(0, 3));
    CHECK(m.get(0, 4));
}

TEST_CASE("rank of identity and dependent rows") {
    BitMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
    CHECK(gf2_rank(id) == 4);

    BitMatrix dep(3, 4);
    dep.set(0, 0, true);
    dep.set(0, 1, true);
    dep.set(1, 1, true);
    dep.set(1, 2, true);
    // row 2 = row 0 + row 1
    dep.set(2, 0, true);
    dep.set(2, 2, true);
    CHECK(gf2_rank(dep) == 2);

    BitMatrix zero(5, 7);
    CHECK(gf2_rank(zero) == 0);
    CHECK(gf2_rank(BitMatrix()) == 0);
}

TEST_CASE("echelon span membership") {
    BitMatrix m(2, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    Gf2Echelon ech(m);
    CHECK(ech.rank() == 2);
    CHECK(ech.contains(BitRow(m.words_per_row(), 0)));
    CHECK(ech.contains(m.row(0)));
    CHECK(ech.contains(m.row(1)));
    BitRow sum = m.row(0);
    xor_into(sum, m.row(1)); // (1,0,1)
    CHECK(ech.contains(sum));
    CHECK_FALSE(ech.contains(unit_bit_row(3, 0)));
    CHECK_FALSE(ech.contains(unit_bit_row(3, 2)));
}

TEST_CASE("unit_bit_row and helpers") {
    BitRow e = unit_bit_row(70, 66);
    CHECK(e.size() == 2);
    CHECK_FALSE(bit_row_is_zero(e));
    BitRow f = unit_bit_row(70, 66);
    xor_into(f, e);
    CHECK(bit_row_is_zero(f));
    CHECK_THROWS_AS((void)unit_bit_row(70, 70), Error);
    CHECK(bit_row_is_zero(BitRow{}));
}

TEST_CASE("rank and membership agree with exhaustive enumeration") {
    std::mt19937_64 rng(20240907);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 10;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c, true);
        Gf2Echelon ech(m);
        CHECK(ech.rank() == oracles::naive_rank(m));
        CHECK(ech.rank() == gf2_rank(m));
        for (int probe = 0; probe < 16; ++probe) {
            BitRow row(m.words_per_row(), 0);
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) xor_into(row, unit_bit_row(cols, c));
            CHECK(ech.contains(row) == oracles::naive_in_rowspace(m, row));
        }
    }
}
