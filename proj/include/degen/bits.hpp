#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace degen::bits {

inline constexpr std::uint64_t kWordBits = 64;

constexpr std::uint64_t words_for(std::uint64_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
}

/// Mask with the low `k` bits set, k in [0, 64].
constexpr std::uint64_t low_mask(std::uint64_t k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

constexpr bool get_bit(std::span<const std::uint64_t> words, std::uint64_t pos) {
    return (words[pos / kWordBits] >> (pos % kWordBits)) & 1u;
}

constexpr void set_bit(std::span<std::uint64_t> words, std::uint64_t pos) {
    words[pos / kWordBits] |= std::uint64_t{1} << (pos % kWordBits);
}

/// Position of the (r+1)-th set bit of `w` (r is 0-based). Requires r < popcount(w).
inline unsigned select_in_word(std::uint64_t w, unsigned r) {
    assert(r < static_cast<unsigned>(std::popcount(w)));
#if defined(__BMI2__)
    return static_cast<unsigned>(std::countr_zero(_pdep_u64(std::uint64_t{1} << r, w)));
#else
    // byte-wise skip, then bit scan inside the byte
    unsigned base = 0;
    for (;;) {
        const auto c = static_cast<unsigned>(std::popcount(w & 0xFFu));
        if (r < c) break;
        r -= c;
        w >>= 8;
        base += 8;
    }
    for (unsigned k = 0; k < r; ++k) w &= w - 1;
    return base + static_cast<unsigned>(std::countr_zero(w));
#endif
}

/// Fixed-width packed unsigned integers (width 0..64).
class PackedInts {
public:
    PackedInts() = default;
    PackedInts(std::uint64_t size, unsigned width)
        : size_(size), width_(width), words_(words_for(size * width) + 1, 0) {
        assert(width <= 64);
    }

    std::uint64_t size() const { return size_; }
    unsigned width() const { return width_; }
    std::span<const std::uint64_t> words() const { return words_; }

    void set(std::uint64_t idx, std::uint64_t value) {
        assert(idx < size_);
        if (width_ == 0) return;
        value &= low_mask(width_);
        const std::uint64_t bit = idx * width_;
        const std::uint64_t w = bit / kWordBits;
        const unsigned off = bit % kWordBits;
        words_[w] = (words_[w] & ~(low_mask(width_) << off)) | (value << off);
        if (off + width_ > kWordBits) {
            const unsigned spill = off + width_ - kWordBits;
            words_[w + 1] = (words_[w + 1] & ~low_mask(spill)) | (value >> (width_ - spill));
        }
    }

    std::uint64_t get(std::uint64_t idx) const {
        assert(idx < size_);
        if (width_ == 0) return 0;
        const std::uint64_t bit = idx * width_;
        const std::uint64_t w = bit / kWordBits;
        const unsigned off = bit % kWordBits;
        std::uint64_t v = words_[w] >> off;
        if (off + width_ > kWordBits) v |= words_[w + 1] << (kWordBits - off);
        return v & low_mask(width_);
    }

    /// Payload bits actually needed (excludes the one guard word).
    std::uint64_t payload_bits() const { return size_ * width_; }

private:
    std::uint64_t size_ = 0;
    unsigned width_ = 0;
    std::vector<std::uint64_t> words_;  // one trailing guard word for straddling reads
};

}  // namespace degen::bits
