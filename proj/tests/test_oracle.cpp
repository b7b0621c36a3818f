#include <gtest/gtest.h>

#include "degen/errors.hpp"
#include "degen/oracle.hpp"
#include "support.hpp"

using namespace degen;

TEST(Oracle, Golden) {
    const auto x = fixtures::golden();
    EXPECT_EQ(oracle::subset_rank(x, 2, 0), 2u);
    EXPECT_EQ(oracle::subset_select(x, 2, 2), 3u);
    for (std::uint32_t c = 0; c < 4; ++c) EXPECT_EQ(oracle::subset_rank(x, 0, c), 0u);
    EXPECT_EQ(oracle::subset_select(x, 1, 0), 0u);
}

TEST(Oracle, Errors) {
    const auto x = fixtures::golden();
    EXPECT_THROW(oracle::subset_rank(x, 5, 0), OutOfBounds);
    EXPECT_THROW(oracle::subset_rank(x, 1, 4), OutOfBounds);
    EXPECT_THROW(oracle::subset_select(x, 3, 0), NotFound);
    EXPECT_THROW(oracle::subset_select(x, 0, 0), NotFound);
}

TEST(Oracle, TotalsMatchRecount) {
    Rng rng(1);
    const auto x = fixtures::random_instance(rng, 400, 10, 0.2);
    std::vector<std::uint64_t> totals(10);
    for (std::uint64_t i = 0; i < x.length(); ++i)
        for (auto c : x.set(i)) ++totals[c];
    for (std::uint32_t c = 0; c < 10; ++c) EXPECT_EQ(oracle::subset_rank(x, x.length(), c), totals[c]);
}

TEST(Oracle, RankSelectIdentity) {
    Rng rng(2);
    const auto x = fixtures::random_instance(rng, 200, 6, 0.1);
    for (std::uint32_t c = 0; c < 6; ++c)
        for (std::uint64_t j = 1; j <= oracle::subset_rank(x, x.length(), c); ++j) {
            const auto p = oracle::subset_select(x, j, c);
            ASSERT_EQ(oracle::subset_rank(x, p + 1, c), j);
            ASSERT_EQ(oracle::subset_rank(x, p, c), j - 1);
        }
}
