#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "degen/binary_io.hpp"
#include "degen/bitplane_rank.hpp"
#include "degen/wavelet_tree.hpp"

namespace degen {

enum class BaseKind : std::uint8_t { wavelet = 1, bitplane = 2 };

/// Which regular-string rank/select structure backs a degenerate-string index.
struct BaseSpec {
    BaseKind kind = BaseKind::wavelet;
    unsigned block_words = BitPlaneRank::kDefaultBlockWords;  // bitplane only

    static BaseSpec wavelet() { return {BaseKind::wavelet, BitPlaneRank::kDefaultBlockWords}; }
    static BaseSpec bitplane(unsigned block_words = BitPlaneRank::kDefaultBlockWords) {
        return {BaseKind::bitplane, block_words};
    }

    /// "wavelet" or "bitplane(8)".
    std::string name() const;
    /// Parses the output of name(); also accepts plain "bitplane".
    static BaseSpec parse(const std::string& text);

    friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

/// Rank/select over a regular string, backed by a wavelet tree or a bit-plane structure.
class SymbolIndex {
public:
    SymbolIndex() = default;
    /// Throws UnsupportedAlphabet when a bit-plane base is asked for sigma > 4.
    SymbolIndex(std::span<const std::uint32_t> text, std::uint32_t sigma, BaseSpec base);

    std::uint64_t size() const;
    BaseSpec base() const;

    std::uint64_t rank(std::uint64_t i, std::uint32_t c) const;
    std::uint64_t select(std::uint64_t j, std::uint32_t c) const;
    std::uint32_t access(std::uint64_t pos) const;

    /// No bounds checks; i <= size(), c inside the alphabet.
    std::uint64_t rank_unchecked(std::uint64_t i, std::uint32_t c) const {
        if (const auto* bp = std::get_if<BitPlaneRank>(&impl_)) return bp->rank_unchecked(i, c);
        return std::get<WaveletTree>(impl_).rank_unchecked(i, c);
    }

    std::uint64_t size_bits() const;

    void serialize(io::ByteWriter& out) const;
    static SymbolIndex deserialize(io::ByteReader& in);

private:
    std::variant<WaveletTree, BitPlaneRank> impl_;
};

}  // namespace degen
