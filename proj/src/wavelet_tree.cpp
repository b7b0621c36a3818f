#include "degen/wavelet_tree.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "degen/errors.hpp"

namespace degen {

namespace {

constexpr std::uint8_t kTagWavelet = 'W';

unsigned levels_for(std::uint32_t sigma) {
    return sigma <= 1 ? 0 : static_cast<unsigned>(std::bit_width(sigma - 1));
}

}  // namespace

WaveletTree::WaveletTree(std::span<const std::uint32_t> text, std::uint32_t sigma)
    : sigma_(sigma), length_(text.size()) {
    for (auto c : text)
        if (c >= sigma) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma));

    const unsigned nlev = levels_for(sigma);
    std::vector<std::uint32_t> cur(text.begin(), text.end());
    levels_.reserve(nlev);
    for (unsigned l = 0; l < nlev; ++l) {
        const unsigned shift = nlev - 1 - l;
        std::vector<std::uint64_t> words(bits::words_for(length_), 0);
        for (std::uint64_t p = 0; p < length_; ++p)
            if ((cur[p] >> shift) & 1u) bits::set_bit(words, p);
        levels_.emplace_back(std::move(words), length_);
        // next level orders symbols by their top l+1 bits, stably
        std::stable_sort(cur.begin(), cur.end(),
                         [shift](std::uint32_t a, std::uint32_t b) { return (a >> shift) < (b >> shift); });
    }
}

WaveletTree::WaveletTree(std::uint32_t sigma, std::uint64_t length, std::vector<PlainBitvector> levels)
    : sigma_(sigma), length_(length), levels_(std::move(levels)) {}

std::uint32_t WaveletTree::access(std::uint64_t pos) const {
    if (pos >= length_) throw OutOfBounds("access position " + std::to_string(pos) + " past length " + std::to_string(length_));
    std::uint64_t b = 0;
    std::uint64_t e = length_;
    std::uint32_t c = 0;
    for (const auto& lev : levels_) {
        const std::uint64_t ones_b = lev.rank1_unchecked(b);
        const std::uint64_t ones_e = lev.rank1_unchecked(e);
        const std::uint64_t zeros_node = (e - b) - (ones_e - ones_b);
        const bool bit = lev.access(b + pos);
        const std::uint64_t ones_pos = lev.rank1_unchecked(b + pos) - ones_b;
        c = (c << 1) | (bit ? 1u : 0u);
        if (bit) {
            pos = ones_pos;
            b += zeros_node;
        } else {
            pos -= ones_pos;
            e = b + zeros_node;
        }
    }
    return c;
}

std::uint64_t WaveletTree::rank_unchecked(std::uint64_t i, std::uint32_t c) const {
    std::uint64_t b = 0;
    std::uint64_t e = length_;
    const auto nlev = static_cast<unsigned>(levels_.size());
    for (unsigned l = 0; l < nlev; ++l) {
        const auto& lev = levels_[l];
        const std::uint64_t ones_b = lev.rank1_unchecked(b);
        const std::uint64_t ones_i = lev.rank1_unchecked(b + i) - ones_b;
        const std::uint64_t zeros_node = (e - b) - (lev.rank1_unchecked(e) - ones_b);
        if ((c >> (nlev - 1 - l)) & 1u) {
            b += zeros_node;
            i = ones_i;
        } else {
            e = b + zeros_node;
            i -= ones_i;
        }
    }
    return i;
}

std::uint64_t WaveletTree::rank(std::uint64_t i, std::uint32_t c) const {
    if (c >= sigma_) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma_));
    if (i > length_) throw OutOfBounds("rank index " + std::to_string(i) + " exceeds length " + std::to_string(length_));
    return rank_unchecked(i, c);
}

std::uint64_t WaveletTree::select(std::uint64_t j, std::uint32_t c) const {
    const std::uint64_t total = rank(length_, c);
    if (j == 0 || j > total) {
        throw NotFound("select(" + std::to_string(j) + ", " + std::to_string(c) + ") but only " +
                       std::to_string(total) + " occurrences");
    }
    const auto nlev = static_cast<unsigned>(levels_.size());
    // node start at each level on the root-to-leaf path of c
    std::vector<std::uint64_t> starts(nlev);
    std::uint64_t b = 0;
    std::uint64_t e = length_;
    for (unsigned l = 0; l < nlev; ++l) {
        starts[l] = b;
        const auto& lev = levels_[l];
        const std::uint64_t ones_b = lev.rank1_unchecked(b);
        const std::uint64_t zeros_node = (e - b) - (lev.rank1_unchecked(e) - ones_b);
        if ((c >> (nlev - 1 - l)) & 1u) b += zeros_node;
        else e = b + zeros_node;
    }
    std::uint64_t pos = j - 1;  // offset inside the current node
    for (unsigned l = nlev; l-- > 0;) {
        const auto& lev = levels_[l];
        const bool bit = (c >> (nlev - 1 - l)) & 1u;
        const std::uint64_t before = lev.rank(starts[l], bit);
        pos = lev.select(before + pos + 1, bit) - starts[l];
    }
    return pos;
}

std::uint64_t WaveletTree::size_bits() const {
    std::uint64_t total = 3 * 64;  // sigma, length, level count
    for (const auto& lev : levels_) total += lev.size_bits();
    return total;
}

void WaveletTree::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagWavelet);
    out.u64(sigma_);
    out.u64(length_);
    out.u64(levels_.size());
    for (const auto& lev : levels_) lev.serialize(out);
    out.end_component(at);
}

WaveletTree WaveletTree::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagWavelet);
    const std::uint64_t sigma = sub.u64();
    const std::uint64_t length = sub.u64();
    const std::uint64_t nlev = sub.u64();
    if (sigma > UINT32_MAX || nlev != levels_for(static_cast<std::uint32_t>(sigma)))
        throw ParseError("wavelet tree level count does not match its alphabet");
    std::vector<PlainBitvector> levels;
    levels.reserve(nlev);
    for (std::uint64_t l = 0; l < nlev; ++l) {
        levels.push_back(PlainBitvector::deserialize(sub));
        if (levels.back().size() != length) throw ParseError("wavelet tree level length mismatch");
    }
    sub.expect_end();
    return WaveletTree(static_cast<std::uint32_t>(sigma), length, std::move(levels));
}

}  // namespace degen
