#include "degen/bitplane_rank.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "degen/bits.hpp"
#include "degen/errors.hpp"

#if defined(__AVX512F__) && defined(__AVX512VPOPCNTDQ__)
#include <immintrin.h>
#define DEGEN_WIDE_SCAN 1
#endif

namespace degen {

namespace {

constexpr std::uint8_t kTagBitPlane = 'P';

std::uint64_t padded_words(std::uint64_t length) { return (bits::words_for(length) + 7) / 8 * 8; }

std::uint64_t fill(std::uint32_t bit) { return bit ? ~std::uint64_t{0} : 0; }

inline std::uint64_t match_word(std::uint64_t high, std::uint64_t low, std::uint64_t fh, std::uint64_t fl) {
    return ~(high ^ fh) & ~(low ^ fl);
}

/// Matches of c in words [first, last) plus the low `partial` bits of word `last`.
std::uint64_t count_scalar(const std::uint64_t* high, const std::uint64_t* low, std::uint64_t first,
                           std::uint64_t last, unsigned partial, std::uint32_t c) {
    const std::uint64_t fh = fill(c >> 1);
    const std::uint64_t fl = fill(c & 1u);
    std::uint64_t cnt = 0;
    for (std::uint64_t w = first; w < last; ++w)
        cnt += static_cast<std::uint64_t>(std::popcount(match_word(high[w], low[w], fh, fl)));
    if (partial != 0)
        cnt += static_cast<std::uint64_t>(
            std::popcount(match_word(high[last], low[last], fh, fl) & bits::low_mask(partial)));
    return cnt;
}

#ifdef DEGEN_WIDE_SCAN
// Truth-table byte for f(high, low, keep) = [high == h] & [low == l] & keep.
template <std::uint32_t C>
constexpr int kMatchImm = 1 << ((((C >> 1) & 1u) << 2) | ((C & 1u) << 1) | 1);

template <std::uint32_t C>
std::uint64_t count_wide(const std::uint64_t* high, const std::uint64_t* low, std::uint64_t first,
                         std::uint64_t last, unsigned partial) {
    const __m512i all = _mm512_set1_epi64(-1);
    __m512i acc = _mm512_setzero_si512();
    std::uint64_t w = first;
    for (; w + 8 <= last; w += 8) {
        const __m512i h = _mm512_loadu_si512(high + w);
        const __m512i l = _mm512_loadu_si512(low + w);
        acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_ternarylogic_epi64(h, l, all, kMatchImm<C>)));
    }
    const auto full = static_cast<unsigned>(last - w);
    if (full != 0 || partial != 0) {
        // query mask: whole lanes before `last`, the partial lane, nothing after
        __m512i keep = _mm512_maskz_set1_epi64(static_cast<__mmask8>((1u << full) - 1), -1);
        if (partial != 0)
            keep = _mm512_mask_set1_epi64(keep, static_cast<__mmask8>(1u << full),
                                          static_cast<long long>(bits::low_mask(partial)));
        const __m512i h = _mm512_loadu_si512(high + w);
        const __m512i l = _mm512_loadu_si512(low + w);
        acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_ternarylogic_epi64(h, l, keep, kMatchImm<C>)));
    }
    return static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc));
}
#endif

}  // namespace

BitPlaneRank::BitPlaneRank(std::span<const std::uint32_t> text, unsigned block_words)
    : length_(text.size()), block_words_(block_words) {
    if (block_words == 0 || block_words > kMaxBlockWords)
        throw PreconditionError("block parameter must be in [1, " + std::to_string(kMaxBlockWords) + "]");
    low_.assign(padded_words(length_), 0);
    high_.assign(padded_words(length_), 0);
    for (std::uint64_t p = 0; p < length_; ++p) {
        const std::uint32_t c = text[p];
        if (c >= kSigma) throw UnsupportedAlphabet("bit-plane rank supports symbols 0..3, got " + std::to_string(c));
        if (c & 1u) bits::set_bit(low_, p);
        if (c & 2u) bits::set_bit(high_, p);
    }
    build_counts();
}

BitPlaneRank::BitPlaneRank(std::uint64_t length, unsigned block_words, std::vector<std::uint64_t> low,
                           std::vector<std::uint64_t> high)
    : length_(length), block_words_(block_words), low_(std::move(low)), high_(std::move(high)) {
    build_counts();
}

void BitPlaneRank::build_counts() {
    const std::uint64_t bs = block_symbols();
    const std::uint64_t nblocks = (length_ + bs - 1) / bs;
    counts_.assign(kSigma * (nblocks + 1), 0);
    std::uint64_t running[kSigma] = {0, 0, 0, 0};
    for (std::uint64_t k = 0; k < nblocks; ++k) {
        for (std::uint32_t c = 0; c < kSigma; ++c) counts_[kSigma * k + c] = running[c];
        const std::uint64_t begin = k * bs;
        const std::uint64_t end = std::min(length_, begin + bs);
        for (std::uint32_t c = 0; c < kSigma; ++c)
            running[c] += count_scalar(high_.data(), low_.data(), begin / 64, end / 64,
                                       static_cast<unsigned>(end % 64), c);
    }
    for (std::uint32_t c = 0; c < kSigma; ++c) counts_[kSigma * nblocks + c] = running[c];
}

bool BitPlaneRank::wide_scan_available() {
#ifdef DEGEN_WIDE_SCAN
    return true;
#else
    return false;
#endif
}

std::uint32_t BitPlaneRank::access(std::uint64_t pos) const {
    if (pos >= length_) throw OutOfBounds("access position " + std::to_string(pos) + " past length " + std::to_string(length_));
    return (bits::get_bit(high_, pos) ? 2u : 0u) | (bits::get_bit(low_, pos) ? 1u : 0u);
}

std::uint64_t BitPlaneRank::rank_portable(std::uint64_t i, std::uint32_t c) const {
    const std::uint64_t k = i / block_symbols();
    return counts_[kSigma * k + c] +
           count_scalar(high_.data(), low_.data(), k * block_words_ * 8, i / 64, static_cast<unsigned>(i % 64), c);
}

std::uint64_t BitPlaneRank::rank_unchecked(std::uint64_t i, std::uint32_t c) const {
#ifdef DEGEN_WIDE_SCAN
    const std::uint64_t k = i / block_symbols();
    const std::uint64_t first = k * block_words_ * 8;
    const std::uint64_t last = i / 64;
    const auto partial = static_cast<unsigned>(i % 64);
    const std::uint64_t base = counts_[kSigma * k + c];
    switch (c) {
        case 0: return base + count_wide<0>(high_.data(), low_.data(), first, last, partial);
        case 1: return base + count_wide<1>(high_.data(), low_.data(), first, last, partial);
        case 2: return base + count_wide<2>(high_.data(), low_.data(), first, last, partial);
        default: return base + count_wide<3>(high_.data(), low_.data(), first, last, partial);
    }
#else
    return rank_portable(i, c);
#endif
}

std::uint64_t BitPlaneRank::rank(std::uint64_t i, std::uint32_t c) const {
    if (c >= kSigma) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size 4");
    if (i > length_) throw OutOfBounds("rank index " + std::to_string(i) + " exceeds length " + std::to_string(length_));
    return rank_unchecked(i, c);
}

std::uint64_t BitPlaneRank::select(std::uint64_t j, std::uint32_t c) const {
    if (c >= kSigma) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size 4");
    const std::uint64_t nblocks = num_blocks();
    const std::uint64_t total = counts_[kSigma * nblocks + c];
    if (j == 0 || j > total) {
        throw NotFound("select(" + std::to_string(j) + ", " + std::to_string(c) + ") but only " +
                       std::to_string(total) + " occurrences");
    }
    // last block whose preceding count is < j
    std::uint64_t lo = 0;
    std::uint64_t hi = nblocks;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (counts_[kSigma * mid + c] < j) lo = mid;
        else hi = mid;
    }
    std::uint64_t rest = j - counts_[kSigma * lo + c];  // 1-based within the block
    const std::uint64_t fh = fill(c >> 1);
    const std::uint64_t fl = fill(c & 1u);
    for (std::uint64_t w = lo * block_words_ * 8;; ++w) {
        const std::uint64_t m = match_word(high_[w], low_[w], fh, fl);
        const auto pc = static_cast<std::uint64_t>(std::popcount(m));
        if (rest <= pc) return w * 64 + bits::select_in_word(m, static_cast<unsigned>(rest - 1));
        rest -= pc;
    }
}

std::uint64_t BitPlaneRank::size_bits() const {
    return 3 * 64 + 64 * (low_.size() + high_.size() + counts_.size());
}

void BitPlaneRank::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagBitPlane);
    out.u64(length_);
    out.u64(block_words_);
    out.words(low_);
    out.words(high_);
    out.end_component(at);
}

BitPlaneRank BitPlaneRank::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagBitPlane);
    const std::uint64_t length = sub.u64();
    const std::uint64_t block_words = sub.u64();
    auto low = sub.words();
    auto high = sub.words();
    sub.expect_end();
    if (block_words == 0 || block_words > kMaxBlockWords) throw ParseError("bit-plane block parameter out of range");
    if (low.size() != padded_words(length) || high.size() != padded_words(length))
        throw ParseError("bit-plane word count does not match its length");
    // canonical form: bits past the text are zero
    const std::uint64_t used = bits::words_for(length);
    for (std::uint64_t w = 0; w < low.size(); ++w) {
        std::uint64_t keep = w < used ? ~std::uint64_t{0} : 0;
        if (w + 1 == used && length % 64 != 0) keep = bits::low_mask(length % 64);
        low[w] &= keep;
        high[w] &= keep;
    }
    return BitPlaneRank(length, static_cast<unsigned>(block_words), std::move(low), std::move(high));
}

}  // namespace degen
