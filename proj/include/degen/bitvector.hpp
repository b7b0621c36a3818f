#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "degen/binary_io.hpp"
#include "degen/bits.hpp"

namespace degen {

/// Static bitvector with constant-time rank and sampled select.
///
/// Positions are 0-indexed. rank(i, b) counts occurrences of b in [0, i);
/// select(j, b) returns the position of the j-th occurrence of b, j >= 1.
///
/// Layout: a 512-bit superblock stores its absolute 1-count and the seven
/// 9-bit relative counts of its 64-bit blocks 1..7 packed into one word.
/// Every 8192-th 0 and 1 is sampled by superblock index to bound select's search.
class PlainBitvector {
public:
    static constexpr std::uint64_t kSuperblockBits = 512;
    static constexpr std::uint64_t kBlockBits = 64;
    static constexpr std::uint64_t kSelectSampleRate = 8192;

    PlainBitvector();
    /// Takes `length` bits from `words` (LSB-first); bits past `length` are cleared.
    PlainBitvector(std::vector<std::uint64_t> words, std::uint64_t length);

    /// From a string of '0'/'1' characters, e.g. "100101101".
    static PlainBitvector from_string(std::string_view bits);
    static PlainBitvector from_bools(std::span<const bool> bits);

    std::uint64_t size() const { return length_; }
    std::uint64_t count_ones() const { return ones_; }
    std::uint64_t count(bool b) const { return b ? ones_ : length_ - ones_; }

    bool access(std::uint64_t pos) const;
    bool operator[](std::uint64_t pos) const { return access(pos); }

    std::uint64_t rank(std::uint64_t i, bool b) const;
    std::uint64_t rank1(std::uint64_t i) const;
    std::uint64_t rank0(std::uint64_t i) const { return i - rank1(i); }

    std::uint64_t select(std::uint64_t j, bool b) const;
    std::uint64_t select1(std::uint64_t j) const;
    std::uint64_t select0(std::uint64_t j) const;

    /// Payload plus every support structure, in bits.
    std::uint64_t size_bits() const;

    std::span<const std::uint64_t> words() const { return words_; }

    void serialize(io::ByteWriter& out) const;
    static PlainBitvector deserialize(io::ByteReader& in);

    /// Unchecked rank for callers that already validated i (hot paths).
    std::uint64_t rank1_unchecked(std::uint64_t i) const {
        const std::uint64_t sb = i / kSuperblockBits;
        std::uint64_t r = directory_[2 * sb];
        const std::uint64_t blk = (i / kBlockBits) % 8;
        if (blk != 0) r += (directory_[2 * sb + 1] >> (9 * (blk - 1))) & 0x1FF;
        const std::uint64_t off = i % kBlockBits;
        if (off != 0) r += static_cast<std::uint64_t>(std::popcount(words_[i / kBlockBits] & bits::low_mask(off)));
        return r;
    }

    friend bool operator==(const PlainBitvector& a, const PlainBitvector& b) {
        return a.length_ == b.length_ && a.words_ == b.words_;
    }

private:
    void build_support();
    std::uint64_t num_superblocks() const { return (length_ + kSuperblockBits - 1) / kSuperblockBits; }
    std::uint64_t superblock_count(std::uint64_t sb, bool b) const;
    std::uint64_t block_relative(std::uint64_t sb, std::uint64_t blk, bool b) const;

    std::uint64_t length_ = 0;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> words_;
    // [2*sb] absolute ones before superblock sb, [2*sb+1] packed relative block counts;
    // one extra superblock entry so rank(length) needs no special case.
    std::vector<std::uint64_t> directory_;
    std::vector<std::uint64_t> select_samples_[2];
};

/// Bitvector that stores only the sorted positions of its 1-bits.
///
/// Positions are kept in Elias-Fano split form (fixed-width low parts plus
/// unary-coded high parts), so space grows with the number of ones m rather
/// than the length. rank is O(log m); select(j, 1) is O(1); select(j, 0)
/// binary-searches the ones using "p_k - k zeros precede the k-th one".
class SparseBitvector {
public:
    SparseBitvector() : SparseBitvector(0, {}) {}
    /// `ones` must be strictly increasing and < length.
    SparseBitvector(std::uint64_t length, std::span<const std::uint64_t> ones);

    static SparseBitvector from_string(std::string_view bits);

    std::uint64_t size() const { return length_; }
    std::uint64_t count_ones() const { return ones_; }
    std::uint64_t count(bool b) const { return b ? ones_ : length_ - ones_; }

    bool access(std::uint64_t pos) const;
    bool operator[](std::uint64_t pos) const { return access(pos); }

    std::uint64_t rank(std::uint64_t i, bool b) const;
    std::uint64_t rank1(std::uint64_t i) const;
    std::uint64_t rank0(std::uint64_t i) const { return i - rank1(i); }

    std::uint64_t select(std::uint64_t j, bool b) const;
    std::uint64_t select1(std::uint64_t j) const;
    std::uint64_t select0(std::uint64_t j) const;

    /// Position of the k-th one, k 0-based.
    std::uint64_t one_position(std::uint64_t k) const {
        return ((high_.select1(k + 1) - k) << low_.width()) | low_.get(k);
    }

    std::vector<std::uint64_t> positions() const;

    std::uint64_t size_bits() const;

    void serialize(io::ByteWriter& out) const;
    static SparseBitvector deserialize(io::ByteReader& in);

    std::uint64_t rank1_unchecked(std::uint64_t i) const;

private:
    std::uint64_t length_ = 0;
    std::uint64_t ones_ = 0;
    bits::PackedInts low_;
    PlainBitvector high_;
};

}  // namespace degen
