#include <gtest/gtest.h>

#include <algorithm>

#include "degen/errors.hpp"
#include "degen/reductions.hpp"
#include "support.hpp"

using namespace degen;

namespace {

std::string bits_of(const PlainBitvector& bv) {
    std::string s;
    for (std::uint64_t p = 0; p < bv.size(); ++p) s += bv[p] ? '1' : '0';
    return s;
}

std::string dna_of(const SymbolIndex& s) {
    std::string out;
    for (std::uint64_t p = 0; p < s.size(); ++p) out += dna_letter(s.access(p));
    return out;
}

}  // namespace

TEST(ReductionI, Golden) {
    for (auto base : {BaseSpec::wavelet(), BaseSpec::bitplane()}) {
        // S lists X_4 as T then G
        const auto r = ReductionI::from_runs(4, {{0, 1, 2}, {0, 3}, {1}, {3, 2}}, base);
        EXPECT_EQ(dna_of(r.symbols()), "ACGATCTG");
        EXPECT_EQ(bits_of(r.starts()), "100101101");
        EXPECT_EQ(r.subset_rank(2, 0), 2u);
        EXPECT_EQ(r.subset_select(2, 2), 3u);
        EXPECT_EQ(r.starts().select1(3), 5u);   // select_R(3,1) = 6, 1-indexed
        EXPECT_EQ(r.symbols().rank(5, 0), 2u);  // rank_S(5,A) = 2
        EXPECT_EQ(r.symbols().select(2, 2), 7u);  // select_S(2,G) = 8, 1-indexed
        EXPECT_EQ(r.starts().rank1(8), 4u);     // rank_R(8,1) = 4
        EXPECT_EQ(r.space().total(), r.symbols().size_bits() + r.starts().size_bits());
    }
}

TEST(ReductionI, OrderInsideSetsDoesNotMatter) {
    const ReductionI sorted(fixtures::golden(), BaseSpec::wavelet());
    EXPECT_EQ(dna_of(sorted.symbols()), "ACGATCGT");
    EXPECT_EQ(bits_of(sorted.starts()), "100101101");
    Rng rng(2);
    for (int rep = 0; rep < 50; ++rep) {
        const auto x = fixtures::random_instance(rng, 1 + rng.below(100), 7, 0.0);
        std::vector<std::vector<std::uint32_t>> runs;
        for (std::uint64_t i = 0; i < x.length(); ++i) {
            runs.emplace_back(x.set(i).begin(), x.set(i).end());
            std::reverse(runs.back().begin(), runs.back().end());
        }
        EXPECT_EQ(fixtures::count_mismatches(ReductionI::from_runs(7, runs, BaseSpec::wavelet()), x), 0u);
    }
    EXPECT_THROW(ReductionI::from_runs(4, {{0}, {}}, BaseSpec::wavelet()), PreconditionError);
    EXPECT_THROW(ReductionI::from_runs(4, {{1, 1}}, BaseSpec::wavelet()), PreconditionError);
}

TEST(ReductionI, SingleSet) {
    const ReductionI r(DegenerateString(4, {{0}}), BaseSpec::wavelet());
    EXPECT_EQ(dna_of(r.symbols()), "A");
    EXPECT_EQ(bits_of(r.starts()), "11");
    EXPECT_EQ(r.subset_select(1, 0), 0u);
}

TEST(ReductionI, RejectsEmptySets) {
    EXPECT_THROW(ReductionI(DegenerateString(4, {{0}, {}}), BaseSpec::wavelet()), PreconditionError);
}

TEST(ReductionI, StartsInvariant) {
    Rng rng(1);
    const auto x = fixtures::random_instance(rng, 250, 8, 0.0);
    const ReductionI r(x, BaseSpec::wavelet());
    EXPECT_EQ(r.starts().size(), x.total_size() + 1);
    EXPECT_EQ(r.starts().rank1(x.total_size() + 1), x.length() + 1);
    for (std::uint64_t i = 0; i < x.length(); ++i) {
        const auto b = r.starts().select1(i + 1);
        const auto e = r.starts().select1(i + 2);
        ASSERT_EQ(e - b, x.set(i).size());
        for (std::uint64_t k = b; k < e; ++k) ASSERT_TRUE(x.contains(i, r.symbols().access(k)));
    }
}

TEST(ReductionII, SentinelNotQueryable) {
    const DegenerateString x(4, {{0}, {}, {1, 3}});
    const ReductionII r(x, BaseSpec::wavelet());
    EXPECT_EQ(r.sigma(), 4u);
    EXPECT_EQ(r.total_size(), 3u);
    EXPECT_EQ(r.empty_sets(), 1u);
    EXPECT_THROW(r.subset_rank(1, 4), OutOfBounds);
    EXPECT_THROW(r.subset_select(1, 4), OutOfBounds);
    EXPECT_EQ(r.inner().symbols().size(), 4u);
}

TEST(ReductionII, BitplaneNeedsRoomForSentinel) {
    const DegenerateString small(3, {{0}, {}, {2}});
    EXPECT_EQ(fixtures::count_mismatches(ReductionII(small, BaseSpec::bitplane()), small), 0u);
    const DegenerateString dna(4, {{0}, {}});
    EXPECT_THROW(ReductionII(dna, BaseSpec::bitplane()), UnsupportedAlphabet);
}

TEST(ReductionIII, Components) {
    const DegenerateString x(4, {{}, {0, 2}, {}, {}, {3}});
    const ReductionIII r(x, BaseSpec::bitplane());
    EXPECT_EQ(r.empties().count_ones(), 3u);
    EXPECT_EQ(r.inner().length(), 2u);
    EXPECT_EQ(r.total_size(), 3u);
    EXPECT_EQ(fixtures::count_mismatches(r, x), 0u);
}

TEST(ReductionIII, AllEmpty) {
    const DegenerateString x(4, {{}, {}, {}});
    const ReductionIII r(x, BaseSpec::wavelet());
    for (std::uint32_t c = 0; c < 4; ++c) {
        EXPECT_EQ(r.subset_rank(3, c), 0u);
        EXPECT_THROW(r.subset_select(1, c), NotFound);
    }
}

TEST(Reductions, EmptyInstance) {
    const DegenerateString x(4);
    EXPECT_EQ(ReductionI(x, BaseSpec::wavelet()).subset_rank(0, 1), 0u);
    EXPECT_EQ(ReductionII(x, BaseSpec::wavelet()).subset_rank(0, 1), 0u);
    EXPECT_EQ(ReductionIII(x, BaseSpec::bitplane()).subset_rank(0, 1), 0u);
}

TEST(Reductions, Errors) {
    const ReductionIII r(fixtures::golden(), BaseSpec::wavelet());
    EXPECT_THROW(r.subset_rank(5, 0), OutOfBounds);
    EXPECT_THROW(r.subset_rank(0, 4), OutOfBounds);
    EXPECT_THROW(r.subset_select(3, 0), NotFound);
    EXPECT_THROW(r.subset_select(0, 0), NotFound);
}

TEST(Reductions, RandomInstancesMatchOracle) {
    Rng rng(500);
    const std::uint32_t sigmas[] = {4, 8, 16};
    const double fracs[] = {0.0, 0.1, 0.5};
    for (int rep = 0; rep < 500; ++rep) {
        const auto sigma = sigmas[rep % 3];
        const double frac = fracs[(rep / 3) % 3];
        const auto x = fixtures::random_instance(rng, 1 + rng.below(256), sigma, frac);
        const ReductionII r2(x, BaseSpec::wavelet());
        const ReductionIII r3(x, BaseSpec::wavelet());
        ASSERT_EQ(fixtures::count_mismatches(r2, x), 0u) << "rep " << rep;
        ASSERT_EQ(fixtures::count_mismatches(r3, x), 0u) << "rep " << rep;
        if (x.empty_sets() == 0) {
            ASSERT_EQ(fixtures::count_mismatches(ReductionI(x, BaseSpec::wavelet()), x), 0u);
        }
        if (sigma == 4) {
            ASSERT_EQ(fixtures::count_mismatches(ReductionIII(x, BaseSpec::bitplane(4)), x), 0u);
        }
    }
}

TEST(Reductions, VariantsTwoAndThreeAgree) {
    Rng rng(7);
    for (int rep = 0; rep < 100; ++rep) {
        const auto x = fixtures::random_instance(rng, 1 + rng.below(300), 6, 0.3);
        const ReductionII r2(x, BaseSpec::wavelet());
        const ReductionIII r3(x, BaseSpec::wavelet());
        for (std::uint32_t c = 0; c < 6; ++c) {
            for (std::uint64_t i = 0; i <= x.length(); ++i) ASSERT_EQ(r2.subset_rank(i, c), r3.subset_rank(i, c));
            for (std::uint64_t j = 1; j <= r3.subset_rank(x.length(), c); ++j)
                ASSERT_EQ(r2.subset_select(j, c), r3.subset_select(j, c));
        }
    }
}

TEST(Reductions, RankStepsAndSelectIdentity) {
    Rng rng(8);
    const auto x = fixtures::random_instance(rng, 256, 5, 0.2);
    const ReductionIII r(x, BaseSpec::wavelet());
    for (std::uint32_t c = 0; c < 5; ++c) {
        for (std::uint64_t i = 0; i < x.length(); ++i) ASSERT_LE(r.subset_rank(i + 1, c) - r.subset_rank(i, c), 1u);
        for (std::uint64_t j = 1; j <= r.subset_rank(x.length(), c); ++j) {
            const auto p = r.subset_select(j, c);
            ASSERT_EQ(r.subset_rank(p + 1, c), j);
            ASSERT_EQ(r.subset_rank(p, c), j - 1);
        }
    }
}

TEST(Reductions, SymbolComponentSizes) {
    Rng rng(9);
    const auto x = fixtures::random_instance(rng, 2000, 8, 0.25);
    ASSERT_GT(x.empty_sets(), 0u);
    const ReductionII r2(x, BaseSpec::wavelet());
    const ReductionIII r3(x, BaseSpec::wavelet());
    EXPECT_EQ(r2.inner().symbols().size(), x.total_size() + x.empty_sets());
    EXPECT_EQ(r3.inner().symbols().size(), x.total_size());
    EXPECT_EQ(r3.space().total(), r3.inner().size_bits() + r3.empties().size_bits());
}

TEST(Reductions, GenomicLikeVariantThreeBudget) {
    const auto x = generate(1, 1000000, 4, GenomicLikeProfile{});
    const ReductionIII r(x, BaseSpec::bitplane());
    const double per_symbol = static_cast<double>(r.size_bits()) / static_cast<double>(x.total_size());
    EXPECT_LE(per_symbol, 3.7);
}

TEST(Reductions, SerializeRoundTrip) {
    Rng rng(10);
    const auto x = fixtures::random_instance(rng, 200, 4, 0.2);
    io::ByteWriter out;
    ReductionII(x, BaseSpec::wavelet()).serialize(out);
    ReductionIII(x, BaseSpec::bitplane(2)).serialize(out);
    const auto bytes = out.take();
    io::ByteReader in(bytes);
    const auto r2 = ReductionII::deserialize(in);
    const auto r3 = ReductionIII::deserialize(in);
    in.expect_end();
    EXPECT_EQ(r2.empty_sets(), x.empty_sets());
    EXPECT_EQ(r3.base(), BaseSpec::bitplane(2));
    EXPECT_EQ(fixtures::count_mismatches(r2, x), 0u);
    EXPECT_EQ(fixtures::count_mismatches(r3, x), 0u);
}
