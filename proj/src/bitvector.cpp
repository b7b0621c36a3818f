#include "degen/bitvector.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "degen/errors.hpp"

namespace degen {

namespace {

constexpr std::uint8_t kTagPlain = 'V';
constexpr std::uint8_t kTagSparse = 'Z';

[[noreturn]] void rank_out_of_bounds(std::uint64_t i, std::uint64_t length) {
    throw OutOfBounds("rank index " + std::to_string(i) + " exceeds length " + std::to_string(length));
}

[[noreturn]] void select_not_found(std::uint64_t j, bool b, std::uint64_t count) {
    throw NotFound("select(" + std::to_string(j) + ", " + (b ? "1" : "0") + ") but only " +
                   std::to_string(count) + " occurrences");
}

}  // namespace

// ---------------------------------------------------------------- PlainBitvector

PlainBitvector::PlainBitvector() { build_support(); }

PlainBitvector::PlainBitvector(std::vector<std::uint64_t> words, std::uint64_t length)
    : length_(length), words_(std::move(words)) {
    words_.resize(bits::words_for(length_), 0);
    if (length_ % bits::kWordBits != 0) words_.back() &= bits::low_mask(length_ % bits::kWordBits);
    build_support();
}

PlainBitvector PlainBitvector::from_string(std::string_view s) {
    std::vector<std::uint64_t> words(bits::words_for(s.size()), 0);
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] == '1') {
            bits::set_bit(words, p);
        } else if (s[p] != '0') {
            throw ParseError("bit string may only contain '0' and '1'");
        }
    }
    return PlainBitvector(std::move(words), s.size());
}

PlainBitvector PlainBitvector::from_bools(std::span<const bool> b) {
    std::vector<std::uint64_t> words(bits::words_for(b.size()), 0);
    for (std::size_t p = 0; p < b.size(); ++p)
        if (b[p]) bits::set_bit(words, p);
    return PlainBitvector(std::move(words), b.size());
}

void PlainBitvector::build_support() {
    const std::uint64_t nsb = num_superblocks();
    directory_.assign(2 * (nsb + 1), 0);
    select_samples_[0].clear();
    select_samples_[1].clear();

    std::uint64_t ones = 0;
    std::uint64_t zeros = 0;
    for (std::uint64_t sb = 0; sb < nsb; ++sb) {
        directory_[2 * sb] = ones;
        std::uint64_t rel = 0;
        std::uint64_t packed = 0;
        for (std::uint64_t blk = 0; blk < 8; ++blk) {
            const std::uint64_t w = sb * 8 + blk;
            if (blk != 0) packed |= rel << (9 * (blk - 1));
            if (w >= words_.size()) continue;

            const std::uint64_t valid = std::min<std::uint64_t>(bits::kWordBits, length_ - w * bits::kWordBits);
            const auto pc = static_cast<std::uint64_t>(std::popcount(words_[w]));
            const std::uint64_t zc = valid - pc;
            // a sample is recorded in the superblock holding each (k*rate)-th occurrence, 0-based
            if (pc != 0)
                while (select_samples_[1].size() * kSelectSampleRate < ones + pc)
                    select_samples_[1].push_back(sb);
            if (zc != 0)
                while (select_samples_[0].size() * kSelectSampleRate < zeros + zc)
                    select_samples_[0].push_back(sb);
            rel += pc;
            ones += pc;
            zeros += zc;
        }
        directory_[2 * sb + 1] = packed;
    }
    directory_[2 * nsb] = ones;
    ones_ = ones;
}

bool PlainBitvector::access(std::uint64_t pos) const {
    if (pos >= length_) throw OutOfBounds("access position " + std::to_string(pos) + " past length " + std::to_string(length_));
    return bits::get_bit(words_, pos);
}

std::uint64_t PlainBitvector::rank1(std::uint64_t i) const {
    if (i > length_) rank_out_of_bounds(i, length_);
    return rank1_unchecked(i);
}

std::uint64_t PlainBitvector::rank(std::uint64_t i, bool b) const {
    const std::uint64_t r = rank1(i);
    return b ? r : i - r;
}

std::uint64_t PlainBitvector::superblock_count(std::uint64_t sb, bool b) const {
    const std::uint64_t ones = directory_[2 * sb];
    return b ? ones : sb * kSuperblockBits - ones;
}

std::uint64_t PlainBitvector::block_relative(std::uint64_t sb, std::uint64_t blk, bool b) const {
    const std::uint64_t ones = blk == 0 ? 0 : (directory_[2 * sb + 1] >> (9 * (blk - 1))) & 0x1FF;
    return b ? ones : blk * kBlockBits - ones;
}

std::uint64_t PlainBitvector::select(std::uint64_t j, bool b) const {
    const std::uint64_t total = count(b);
    if (j == 0 || j > total) select_not_found(j, b, total);

    const std::uint64_t r = j - 1;
    const auto& samples = select_samples_[b ? 1 : 0];
    const std::uint64_t s = r / kSelectSampleRate;
    std::uint64_t lo = samples[s];
    std::uint64_t hi = s + 1 < samples.size() ? samples[s + 1] + 1 : num_superblocks();

    // last superblock in [lo, hi) whose preceding count is <= r
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (superblock_count(mid, b) <= r) lo = mid;
        else hi = mid;
    }
    const std::uint64_t sb = lo;
    std::uint64_t rest = r - superblock_count(sb, b);

    std::uint64_t blk = 0;
    while (blk + 1 < 8 && block_relative(sb, blk + 1, b) <= rest) ++blk;
    rest -= block_relative(sb, blk, b);

    const std::uint64_t w = sb * 8 + blk;
    const std::uint64_t word = b ? words_[w] : ~words_[w];
    return w * bits::kWordBits + bits::select_in_word(word, static_cast<unsigned>(rest));
}

std::uint64_t PlainBitvector::select1(std::uint64_t j) const { return select(j, true); }
std::uint64_t PlainBitvector::select0(std::uint64_t j) const { return select(j, false); }

std::uint64_t PlainBitvector::size_bits() const {
    // length + ones header, then payload and directories
    return 2 * 64 + 64 * (words_.size() + directory_.size() + select_samples_[0].size() + select_samples_[1].size());
}

void PlainBitvector::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagPlain);
    out.u64(length_);
    out.words(words_);
    out.end_component(at);
}

PlainBitvector PlainBitvector::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagPlain);
    const std::uint64_t length = sub.u64();
    auto words = sub.words();
    sub.expect_end();
    if (words.size() != bits::words_for(length)) throw ParseError("bitvector word count does not match its length");
    return PlainBitvector(std::move(words), length);
}

// ---------------------------------------------------------------- SparseBitvector

SparseBitvector::SparseBitvector(std::uint64_t length, std::span<const std::uint64_t> ones)
    : length_(length), ones_(ones.size()) {
    for (std::size_t k = 0; k < ones.size(); ++k) {
        if (ones[k] >= length) throw PreconditionError("sparse bitvector position past its length");
        if (k > 0 && ones[k] <= ones[k - 1]) throw PreconditionError("sparse bitvector positions must be strictly increasing");
    }

    // no ones: push every position into bucket 0 so the high part stays one bit long
    unsigned width = ones_ == 0 ? std::min(static_cast<unsigned>(std::bit_width(length_)), 63u) : 0;
    if (ones_ != 0 && length_ > ones_) width = static_cast<unsigned>(std::bit_width(length_ / ones_) - 1);
    low_ = bits::PackedInts(ones_, width);

    const std::uint64_t high_len = ones_ + (length_ >> width) + 1;
    std::vector<std::uint64_t> high(bits::words_for(high_len), 0);
    for (std::uint64_t k = 0; k < ones_; ++k) {
        low_.set(k, ones[k]);
        bits::set_bit(high, (ones[k] >> width) + k);
    }
    high_ = PlainBitvector(std::move(high), high_len);
}

SparseBitvector SparseBitvector::from_string(std::string_view s) {
    std::vector<std::uint64_t> ones;
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] == '1') ones.push_back(p);
        else if (s[p] != '0') throw ParseError("bit string may only contain '0' and '1'");
    }
    return SparseBitvector(s.size(), ones);
}

std::uint64_t SparseBitvector::rank1_unchecked(std::uint64_t i) const {
    if (i >= length_) return ones_;
    const unsigned width = low_.width();
    const std::uint64_t bucket = i >> width;
    // elements with high part < bucket, then those with high part <= bucket
    std::uint64_t lo = bucket == 0 ? 0 : high_.select0(bucket) - bucket + 1;
    std::uint64_t hi = high_.select0(bucket + 1) - bucket;
    const std::uint64_t target = i & bits::low_mask(width);
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (low_.get(mid) < target) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

std::uint64_t SparseBitvector::rank1(std::uint64_t i) const {
    if (i > length_) rank_out_of_bounds(i, length_);
    return rank1_unchecked(i);
}

std::uint64_t SparseBitvector::rank(std::uint64_t i, bool b) const {
    const std::uint64_t r = rank1(i);
    return b ? r : i - r;
}

bool SparseBitvector::access(std::uint64_t pos) const {
    if (pos >= length_) throw OutOfBounds("access position " + std::to_string(pos) + " past length " + std::to_string(length_));
    return rank1_unchecked(pos + 1) != rank1_unchecked(pos);
}

std::uint64_t SparseBitvector::select1(std::uint64_t j) const {
    if (j == 0 || j > ones_) select_not_found(j, true, ones_);
    return one_position(j - 1);
}

std::uint64_t SparseBitvector::select0(std::uint64_t j) const {
    const std::uint64_t zeros = length_ - ones_;
    if (j == 0 || j > zeros) select_not_found(j, false, zeros);
    // t = number of ones with fewer than j zeros before them; those precede the j-th zero
    std::uint64_t lo = 0;
    std::uint64_t hi = ones_;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (one_position(mid) - mid < j) lo = mid + 1;
        else hi = mid;
    }
    return j - 1 + lo;
}

std::uint64_t SparseBitvector::select(std::uint64_t j, bool b) const { return b ? select1(j) : select0(j); }

std::vector<std::uint64_t> SparseBitvector::positions() const {
    std::vector<std::uint64_t> out(ones_);
    for (std::uint64_t k = 0; k < ones_; ++k) out[k] = one_position(k);
    return out;
}

std::uint64_t SparseBitvector::size_bits() const {
    // length, count, low width header
    return 3 * 64 + low_.payload_bits() + high_.size_bits();
}

void SparseBitvector::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagSparse);
    out.u64(length_);
    out.words(positions());
    out.end_component(at);
}

SparseBitvector SparseBitvector::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagSparse);
    const std::uint64_t length = sub.u64();
    const auto ones = sub.words();
    sub.expect_end();
    try {
        return SparseBitvector(length, ones);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid sparse bitvector: ") + e.what());
    }
}

}  // namespace degen
