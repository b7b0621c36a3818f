#include <gtest/gtest.h>

#include <vector>

#include "degen/bitvector.hpp"
#include "degen/errors.hpp"
#include "support.hpp"

using namespace degen;

namespace {

std::uint64_t scan_rank(const std::string& bits, std::uint64_t i, bool b) {
    std::uint64_t r = 0;
    for (std::uint64_t p = 0; p < i; ++p) r += (bits[p] == '1') == b;
    return r;
}

std::uint64_t scan_select(const std::string& bits, std::uint64_t j, bool b) {
    for (std::uint64_t p = 0; p < bits.size(); ++p)
        if ((bits[p] == '1') == b && --j == 0) return p;
    return UINT64_MAX;
}

template <class BV>
void check_against_scan(const BV& bv, const std::string& bits) {
    ASSERT_EQ(bv.size(), bits.size());
    for (std::uint64_t i = 0; i <= bits.size(); ++i) {
        ASSERT_EQ(bv.rank(i, true), scan_rank(bits, i, true)) << "i=" << i;
        ASSERT_EQ(bv.rank(i, false) + bv.rank(i, true), i);
    }
    for (std::uint64_t p = 0; p < bits.size(); ++p) ASSERT_EQ(bv.access(p), bits[p] == '1');
    for (bool b : {false, true}) {
        std::vector<std::uint64_t> where;
        for (std::uint64_t p = 0; p < bits.size(); ++p)
            if ((bits[p] == '1') == b) where.push_back(p);
        const std::uint64_t total = bv.rank(bits.size(), b);
        ASSERT_EQ(total, where.size());
        for (std::uint64_t j = 1; j <= total; ++j) {
            const auto pos = bv.select(j, b);
            ASSERT_EQ(pos, where[j - 1]) << "j=" << j << " b=" << b;
            ASSERT_EQ(bv.rank(pos, b), j - 1);
        }
        EXPECT_THROW(bv.select(total + 1, b), NotFound);
        EXPECT_THROW(bv.select(0, b), NotFound);
    }
    EXPECT_THROW(bv.rank(bits.size() + 1, true), OutOfBounds);
}

}  // namespace

TEST(PlainBitvector, GoldenStartVector) {
    const auto r = PlainBitvector::from_string("100101101");
    EXPECT_EQ(r.rank(8, true), 4u);
    EXPECT_EQ(r.select(3, true), 5u);
    EXPECT_EQ(r.rank(0, true), 0u);
    EXPECT_EQ(r.rank(0, false), 0u);
}

TEST(PlainBitvector, Singleton) {
    const auto r = PlainBitvector::from_string("1");
    EXPECT_EQ(r.select(1, true), 0u);
    EXPECT_THROW(r.select(1, false), NotFound);
}

TEST(PlainBitvector, Empty) {
    const PlainBitvector r;
    EXPECT_EQ(r.size(), 0u);
    EXPECT_EQ(r.rank(0, true), 0u);
    EXPECT_THROW(r.select(1, true), NotFound);
    EXPECT_THROW(r.access(0), OutOfBounds);
    EXPECT_LE(r.size_bits(), 512u);
}

TEST(PlainBitvector, RandomAgainstScan) {
    Rng rng(11);
    for (std::uint64_t len : {1u, 63u, 64u, 65u, 256u, 511u, 512u, 513u, 4095u, 20000u}) {
        for (std::uint64_t density : {1u, 2u, 7u, 300u}) {
            const auto bits = fixtures::random_bits(rng, len, density);
            check_against_scan(PlainBitvector::from_string(bits), bits);
        }
    }
}

TEST(PlainBitvector, SelectAcrossSampleBoundaries) {
    // enough ones and zeros to need several select samples
    Rng rng(12);
    const auto bits = fixtures::random_bits(rng, 100000, 2);
    check_against_scan(PlainBitvector::from_string(bits), bits);
    const auto dense = std::string(40000, '1') + std::string(40000, '0');
    check_against_scan(PlainBitvector::from_string(dense), dense);
}

TEST(PlainBitvector, RankMonotoneUnitSteps) {
    Rng rng(13);
    const auto bv = PlainBitvector::from_string(fixtures::random_bits(rng, 5000, 3));
    for (std::uint64_t i = 0; i < bv.size(); ++i) {
        const auto d = bv.rank1(i + 1) - bv.rank1(i);
        ASSERT_LE(d, 1u);
    }
}

TEST(PlainBitvector, WordConstructorClearsTail) {
    const PlainBitvector bv(std::vector<std::uint64_t>{~0ull}, 10);
    EXPECT_EQ(bv.count_ones(), 10u);
    EXPECT_EQ(bv, PlainBitvector::from_string("1111111111"));
}

TEST(PlainBitvector, SizeBudget) {
    const std::uint64_t len = 1ull << 20;
    Rng rng(14);
    const auto bv = PlainBitvector::from_string(fixtures::random_bits(rng, len, 2));
    EXPECT_GE(bv.size_bits(), len);
    EXPECT_LE(bv.size_bits(), len * 13 / 10 + 1024);
}

TEST(SparseBitvector, SelectZeroDerived) {
    const std::vector<std::uint64_t> ones{7, 42};
    const SparseBitvector bv(100, ones);
    // zeros sit at 0..6 and 8..41, so the 40th zero (j counted from 1) is at position 40
    EXPECT_EQ(bv.select(40, false), 40u);
    EXPECT_EQ(bv.select(40, false), scan_select(std::string(7, '0') + "1" + std::string(34, '0') + "1" + std::string(57, '0'), 40, false));
    EXPECT_EQ(bv.rank(100, true), 2u);
    EXPECT_EQ(bv.rank(100, false), 98u);
}

TEST(SparseBitvector, RejectsBadPositions) {
    const std::vector<std::uint64_t> dup{3, 3};
    EXPECT_THROW(SparseBitvector(10, dup), PreconditionError);
    const std::vector<std::uint64_t> out{3, 10};
    EXPECT_THROW(SparseBitvector(10, out), PreconditionError);
}

TEST(SparseBitvector, Empty) {
    const SparseBitvector bv;
    EXPECT_EQ(bv.rank(0, true), 0u);
    EXPECT_THROW(bv.select(1, false), NotFound);
}

TEST(SparseBitvector, RandomAgainstScan) {
    Rng rng(21);
    for (std::uint64_t len : {1u, 5u, 64u, 300u, 2000u, 9000u}) {
        for (std::uint64_t density : {1u, 2u, 10u, 200u}) {
            const auto bits = fixtures::random_bits(rng, len, density);
            check_against_scan(SparseBitvector::from_string(bits), bits);
        }
    }
}

TEST(SparseBitvector, PositionsRoundTrip) {
    Rng rng(22);
    const auto bits = fixtures::random_bits(rng, 3000, 9);
    const auto bv = SparseBitvector::from_string(bits);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t p = 0; p < bits.size(); ++p)
        if (bits[p] == '1') expect.push_back(p);
    EXPECT_EQ(bv.positions(), expect);
}

TEST(SparseBitvector, SizeScalesWithOnes) {
    std::vector<std::uint64_t> ones;
    for (std::uint64_t k = 0; k < 10; ++k) ones.push_back(k * 99991 + 5);
    const SparseBitvector bv(1000000, ones);
    EXPECT_LE(bv.size_bits(), 10u * 64 + 1024);
}

TEST(Bitvectors, PlainAndSparseAgreeExhaustively) {
    Rng rng(31);
    for (std::uint64_t len = 0; len <= 4096; len += 127) {
        const auto bits = fixtures::random_bits(rng, len, 1 + rng.below(20));
        const auto plain = PlainBitvector::from_string(bits);
        const auto sparse = SparseBitvector::from_string(bits);
        for (std::uint64_t i = 0; i <= len; ++i) ASSERT_EQ(plain.rank1(i), sparse.rank1(i));
        for (bool b : {false, true})
            for (std::uint64_t j = 1; j <= plain.count(b); ++j) ASSERT_EQ(plain.select(j, b), sparse.select(j, b));
    }
}

TEST(Bitvectors, SerializeRoundTrip) {
    Rng rng(41);
    const auto bits = fixtures::random_bits(rng, 7777, 5);
    io::ByteWriter out;
    PlainBitvector::from_string(bits).serialize(out);
    SparseBitvector::from_string(bits).serialize(out);
    const auto bytes = out.take();
    io::ByteReader in(bytes);
    check_against_scan(PlainBitvector::deserialize(in), bits);
    check_against_scan(SparseBitvector::deserialize(in), bits);
    in.expect_end();
}
