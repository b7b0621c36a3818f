#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degen/binary_io.hpp"

namespace degen {

/// Rank/select over a string of 2-bit symbols {0,1,2,3}.
///
/// The text is split into two bit planes (low and high symbol bits). Blocks
/// hold 512 * block_words symbols; for every block boundary the structure
/// stores four absolute 64-bit prefix counts, one per symbol. A rank query
/// reads the counter and counts matches inside the block, where a symbol
/// (h, l) matches a word pair as ~(high ^ fill(h)) & ~(low ^ fill(l)).
class BitPlaneRank {
public:
    static constexpr std::uint32_t kSigma = 4;
    static constexpr unsigned kDefaultBlockWords = 8;
    static constexpr unsigned kMaxBlockWords = 64;

    BitPlaneRank() : BitPlaneRank(std::span<const std::uint32_t>{}) {}
    explicit BitPlaneRank(std::span<const std::uint32_t> text, unsigned block_words = kDefaultBlockWords);

    std::uint64_t size() const { return length_; }
    unsigned block_words() const { return block_words_; }
    std::uint64_t block_symbols() const { return 512ull * block_words_; }
    std::uint64_t num_blocks() const { return counts_.size() / kSigma - 1; }

    /// Absolute count of c in the first k blocks.
    std::uint64_t block_count(std::uint64_t k, std::uint32_t c) const { return counts_[kSigma * k + c]; }

    std::uint32_t access(std::uint64_t pos) const;

    std::uint64_t rank(std::uint64_t i, std::uint32_t c) const;
    std::uint64_t select(std::uint64_t j, std::uint32_t c) const;

    std::uint64_t rank_unchecked(std::uint64_t i, std::uint32_t c) const;
    /// Same answer as rank_unchecked, always via the 64-bit word loop.
    std::uint64_t rank_portable(std::uint64_t i, std::uint32_t c) const;

    /// True when the AVX-512 in-block scan is compiled in.
    static bool wide_scan_available();

    std::span<const std::uint64_t> low_plane() const { return low_; }
    std::span<const std::uint64_t> high_plane() const { return high_; }

    std::uint64_t size_bits() const;

    void serialize(io::ByteWriter& out) const;
    static BitPlaneRank deserialize(io::ByteReader& in);

private:
    BitPlaneRank(std::uint64_t length, unsigned block_words, std::vector<std::uint64_t> low,
                 std::vector<std::uint64_t> high);
    void build_counts();

    std::uint64_t length_ = 0;
    unsigned block_words_ = kDefaultBlockWords;
    std::vector<std::uint64_t> low_;   // padded to a multiple of 8 words
    std::vector<std::uint64_t> high_;
    std::vector<std::uint64_t> counts_;  // (num_blocks + 1) x 4
};

}  // namespace degen
