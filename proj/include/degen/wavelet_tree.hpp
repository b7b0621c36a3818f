#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degen/binary_io.hpp"
#include "degen/bitvector.hpp"

namespace degen {

/// Balanced binary wavelet tree over symbols in [0, sigma), stored level by level.
///
/// Level l holds bit (levels-1-l) of every symbol's code, with the symbols of
/// each level stably partitioned by their higher bits, so every tree node is a
/// contiguous range of its level. rank and select take O(log sigma) bitvector ops.
class WaveletTree {
public:
    WaveletTree() = default;
    WaveletTree(std::span<const std::uint32_t> text, std::uint32_t sigma);

    std::uint32_t sigma() const { return sigma_; }
    std::uint64_t size() const { return length_; }
    unsigned levels() const { return static_cast<unsigned>(levels_.size()); }

    /// Symbol at `pos`, recovered by descending the levels.
    std::uint32_t access(std::uint64_t pos) const;

    /// Occurrences of c in [0, i).
    std::uint64_t rank(std::uint64_t i, std::uint32_t c) const;
    /// Position of the j-th occurrence of c, j >= 1.
    std::uint64_t select(std::uint64_t j, std::uint32_t c) const;

    std::uint64_t rank_unchecked(std::uint64_t i, std::uint32_t c) const;

    std::uint64_t size_bits() const;

    void serialize(io::ByteWriter& out) const;
    static WaveletTree deserialize(io::ByteReader& in);

private:
    WaveletTree(std::uint32_t sigma, std::uint64_t length, std::vector<PlainBitvector> levels);

    std::uint32_t sigma_ = 0;
    std::uint64_t length_ = 0;
    std::vector<PlainBitvector> levels_;
};

}  // namespace degen
