#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "degen/errors.hpp"
#include "degen/structure.hpp"
#include "support.hpp"

using namespace degen;

namespace {

const StructureSpec kAll[] = {
    {StructureKind::reduction_i, BaseSpec::wavelet()},    {StructureKind::reduction_i, BaseSpec::bitplane()},
    {StructureKind::reduction_ii, BaseSpec::wavelet()},   {StructureKind::reduction_ii, BaseSpec::bitplane()},
    {StructureKind::reduction_iii, BaseSpec::wavelet()},  {StructureKind::reduction_iii, BaseSpec::bitplane(4)},
    {StructureKind::dsd, BaseSpec::wavelet()},            {StructureKind::dsd, BaseSpec::bitplane(32)},
};

}  // namespace

TEST(Structure, Names) {
    EXPECT_EQ((StructureSpec{StructureKind::dsd, BaseSpec::bitplane(8)}.name()), "dsd/bitplane(8)");
    EXPECT_EQ(parse_structure_kind("reduction-ii"), StructureKind::reduction_ii);
    EXPECT_THROW(parse_structure_kind("reduction-iv"), ParseError);
}

TEST(Structure, Supports) {
    EXPECT_FALSE(supports({StructureKind::reduction_i, BaseSpec::wavelet()}, 4, 1));
    EXPECT_FALSE(supports({StructureKind::reduction_ii, BaseSpec::bitplane()}, 4, 1));
    EXPECT_TRUE(supports({StructureKind::reduction_ii, BaseSpec::bitplane()}, 3, 1));
    EXPECT_FALSE(supports({StructureKind::dsd, BaseSpec::bitplane()}, 5, 0));
    EXPECT_TRUE(supports({StructureKind::dsd, BaseSpec::wavelet()}, 500, 7));
}

TEST(Container, GoldenEveryStructure) {
    const auto x = fixtures::golden();
    for (const auto& spec : kAll) {
        if (!supports(spec, x.sigma(), x.empty_sets())) continue;
        const SubsetIndex idx(x, spec);
        const auto loaded = SubsetIndex::from_bytes(idx.to_bytes());
        EXPECT_EQ(loaded.spec(), spec);
        EXPECT_EQ(loaded.subset_rank(2, 0), 2u);
        EXPECT_EQ(loaded.subset_select(2, 2), 3u);
        EXPECT_EQ(loaded.size_bits(), idx.size_bits());
    }
}

TEST(Container, EmptyInstance) {
    const SubsetIndex idx(DegenerateString(4), {StructureKind::reduction_iii, BaseSpec::wavelet()});
    const auto loaded = SubsetIndex::from_bytes(idx.to_bytes());
    EXPECT_EQ(loaded.length(), 0u);
    EXPECT_EQ(loaded.subset_rank(0, 3), 0u);
}

TEST(Container, RandomRoundTrips) {
    Rng rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        const auto sigma = static_cast<std::uint32_t>(rep % 2 ? 3 : 4);
        const auto x = fixtures::random_instance(rng, rng.below(200), sigma, rep % 4 == 0 ? 0.0 : 0.2);
        for (const auto& spec : kAll) {
            if (!supports(spec, x.sigma(), x.empty_sets())) continue;
            const SubsetIndex fresh(x, spec);
            const auto bytes = fresh.to_bytes();
            const auto loaded = SubsetIndex::from_bytes(bytes);
            ASSERT_EQ(loaded.to_bytes(), bytes);
            ASSERT_EQ(fixtures::count_mismatches(loaded, x), 0u) << spec.name();
        }
    }
}

TEST(Container, HeaderLayout) {
    const SubsetIndex idx(fixtures::golden(), {StructureKind::dsd, BaseSpec::bitplane()});
    const auto b = idx.to_bytes();
    ASSERT_GE(b.size(), 38u);
    EXPECT_EQ(std::string(b.begin(), b.begin() + 4), "DGRS");
    EXPECT_EQ(b[4], 1);
    EXPECT_EQ(b[5], (4 << 4) | 2);
    EXPECT_EQ(b[6], 4);   // n, little-endian
    EXPECT_EQ(b[14], 8);  // N
}

TEST(Container, RejectsCorruption) {
    const SubsetIndex idx(fixtures::golden(), {StructureKind::reduction_iii, BaseSpec::wavelet()});
    auto bytes = idx.to_bytes();
    EXPECT_THROW(SubsetIndex::from_bytes(std::vector<std::uint8_t>{}), ParseError);
    auto bad = bytes;
    bad[0] = 'X';
    EXPECT_THROW(SubsetIndex::from_bytes(bad), ParseError);
    bad = bytes;
    bad[4] = 2;
    EXPECT_THROW(SubsetIndex::from_bytes(bad), ParseError);
    bad = bytes;
    bad[5] = 0x71;
    EXPECT_THROW(SubsetIndex::from_bytes(bad), ParseError);
    bad = bytes;
    bad[6] = 9;
    EXPECT_THROW(SubsetIndex::from_bytes(bad), ParseError);
    for (std::size_t cut = 0; cut < bytes.size(); cut += 7) {
        const std::vector<std::uint8_t> part(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(cut));
        EXPECT_THROW(SubsetIndex::from_bytes(part), ParseError) << "cut " << cut;
    }
    bytes.push_back(0);
    EXPECT_THROW(SubsetIndex::from_bytes(bytes), ParseError);
}

TEST(Container, FileRoundTrip) {
    const auto path = (std::filesystem::temp_directory_path() / "degen_container.dgrs").string();
    const auto x = generate(3, 5000, 4, GenomicLikeProfile{});
    const SubsetIndex idx(x, {StructureKind::dsd, BaseSpec::bitplane()});
    idx.save(path);
    const auto loaded = SubsetIndex::load(path);
    std::remove(path.c_str());
    EXPECT_EQ(fixtures::count_mismatches(loaded, x), 0u);
    EXPECT_THROW(SubsetIndex::load("/nonexistent/x.dgrs"), Error);
}
