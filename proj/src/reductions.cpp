#include "degen/reductions.hpp"

#include <string>
#include <vector>

#include "degen/errors.hpp"

namespace degen {

namespace {

constexpr std::uint8_t kTagReductionI = '1';
constexpr std::uint8_t kTagReductionII = '2';
constexpr std::uint8_t kTagReductionIII = '3';

void check_rank_args(std::uint64_t i, std::uint64_t n, std::uint32_t c, std::uint32_t sigma) {
    if (i > n) throw OutOfBounds("subset-rank index " + std::to_string(i) + " exceeds length " + std::to_string(n));
    if (c >= sigma) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma));
}

void check_symbol(std::uint32_t c, std::uint32_t sigma) {
    if (c >= sigma) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma));
}

}  // namespace

DegenerateString without_empty_sets(const DegenerateString& x) {
    DegenerateString out(x.sigma());
    for (std::uint64_t i = 0; i < x.length(); ++i)
        if (!x.set(i).empty()) out.push_back(x.set(i));
    return out;
}

// ---------------------------------------------------------------- ReductionI

ReductionI::ReductionI(const DegenerateString& x, BaseSpec base) : sigma_(x.sigma()) {
    if (x.empty_sets() != 0)
        throw PreconditionError("reduction I needs every set nonempty; found " + std::to_string(x.empty_sets()) +
                                " empty sets");
    std::vector<std::uint32_t> text;
    text.reserve(x.total_size());
    std::vector<std::uint64_t> starts;
    for (std::uint64_t i = 0; i < x.length(); ++i) {
        starts.push_back(text.size());
        const auto s = x.set(i);
        text.insert(text.end(), s.begin(), s.end());
    }
    assemble(text, starts, base);
}

ReductionI ReductionI::from_runs(std::uint32_t sigma, const std::vector<std::vector<std::uint32_t>>& runs,
                                 BaseSpec base) {
    const DegenerateString check(sigma, runs);  // rejects duplicates and out-of-range symbols
    if (check.empty_sets() != 0) throw PreconditionError("reduction I needs every set nonempty");
    ReductionI r;
    r.sigma_ = sigma;
    std::vector<std::uint32_t> text;
    std::vector<std::uint64_t> starts;
    for (const auto& run : runs) {
        starts.push_back(text.size());
        text.insert(text.end(), run.begin(), run.end());
    }
    r.assemble(text, starts, base);
    return r;
}

void ReductionI::assemble(std::span<const std::uint32_t> text, std::span<const std::uint64_t> starts, BaseSpec base) {
    const std::uint64_t big_n = text.size();
    std::vector<std::uint64_t> words(bits::words_for(big_n + 1), 0);
    for (auto p : starts) bits::set_bit(words, p);
    bits::set_bit(words, big_n);
    symbols_ = SymbolIndex(text, sigma_, base);
    starts_ = PlainBitvector(std::move(words), big_n + 1);
}

std::uint64_t ReductionI::subset_rank(std::uint64_t i, std::uint32_t c) const {
    check_rank_args(i, length(), c, sigma_);
    const std::uint64_t start = starts_.select1(i + 1);  // first symbol of set i in S
    return symbols_.rank_unchecked(start, c);
}

std::uint64_t ReductionI::subset_select(std::uint64_t j, std::uint32_t c) const {
    check_symbol(c, sigma_);
    const std::uint64_t pos = symbols_.select(j, c);
    return starts_.rank1(pos + 1) - 1;
}

void ReductionI::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagReductionI);
    out.u64(sigma_);
    symbols_.serialize(out);
    starts_.serialize(out);
    out.end_component(at);
}

ReductionI ReductionI::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagReductionI);
    ReductionI r;
    const std::uint64_t sigma = sub.u64();
    if (sigma > UINT32_MAX) throw ParseError("alphabet size too large");
    r.sigma_ = static_cast<std::uint32_t>(sigma);
    r.symbols_ = SymbolIndex::deserialize(sub);
    r.starts_ = PlainBitvector::deserialize(sub);
    sub.expect_end();
    if (r.starts_.size() != r.symbols_.size() + 1 || r.starts_.count_ones() == 0 ||
        !r.starts_.access(r.starts_.size() - 1) || (r.symbols_.size() > 0 && !r.starts_.access(0)))
        throw ParseError("set-start bitvector is inconsistent with the symbol string");
    if (r.symbols_.base().kind == BaseKind::bitplane && r.sigma_ > BitPlaneRank::kSigma)
        throw ParseError("bit-plane base with alphabet larger than 4");
    return r;
}

// ---------------------------------------------------------------- ReductionII

ReductionII::ReductionII(const DegenerateString& x, BaseSpec base) : sigma_(x.sigma()), empty_sets_(x.empty_sets()) {
    const std::uint32_t sentinel = x.sigma();
    DegenerateString padded(x.sigma() + 1);
    for (std::uint64_t i = 0; i < x.length(); ++i) {
        const auto s = x.set(i);
        if (s.empty()) padded.push_back(std::span<const std::uint32_t>(&sentinel, 1));
        else padded.push_back(s);
    }
    inner_ = ReductionI(padded, base);
}

std::uint64_t ReductionII::subset_rank(std::uint64_t i, std::uint32_t c) const {
    check_symbol(c, sigma_);
    return inner_.subset_rank(i, c);
}

std::uint64_t ReductionII::subset_select(std::uint64_t j, std::uint32_t c) const {
    check_symbol(c, sigma_);
    return inner_.subset_select(j, c);
}

void ReductionII::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagReductionII);
    out.u64(sigma_);
    inner_.serialize(out);
    out.end_component(at);
}

ReductionII ReductionII::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagReductionII);
    ReductionII r;
    const std::uint64_t sigma = sub.u64();
    r.inner_ = ReductionI::deserialize(sub);
    sub.expect_end();
    if (sigma + 1 != r.inner_.sigma()) throw ParseError("reduction II inner alphabet must be sigma + 1");
    r.sigma_ = static_cast<std::uint32_t>(sigma);
    r.empty_sets_ = r.inner_.symbols().rank(r.inner_.total_size(), r.sigma_);
    return r;
}

// ---------------------------------------------------------------- ReductionIII

ReductionIII::ReductionIII(const DegenerateString& x, BaseSpec base) {
    std::vector<std::uint64_t> empty_positions;
    empty_positions.reserve(x.empty_sets());
    for (std::uint64_t i = 0; i < x.length(); ++i)
        if (x.set(i).empty()) empty_positions.push_back(i);
    empties_ = SparseBitvector(x.length(), empty_positions);
    inner_ = ReductionI(without_empty_sets(x), base);
}

std::uint64_t ReductionIII::subset_rank(std::uint64_t i, std::uint32_t c) const {
    check_rank_args(i, length(), c, sigma());
    return inner_.subset_rank(i - empties_.rank1_unchecked(i), c);
}

std::uint64_t ReductionIII::subset_select(std::uint64_t j, std::uint32_t c) const {
    const std::uint64_t k = inner_.subset_select(j, c);  // index among nonempty sets
    return empties_.select0(k + 1);
}

void ReductionIII::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagReductionIII);
    empties_.serialize(out);
    inner_.serialize(out);
    out.end_component(at);
}

ReductionIII ReductionIII::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagReductionIII);
    ReductionIII r;
    r.empties_ = SparseBitvector::deserialize(sub);
    r.inner_ = ReductionI::deserialize(sub);
    sub.expect_end();
    if (r.empties_.count(false) != r.inner_.length())
        throw ParseError("empty-set bitvector disagrees with the number of nonempty sets");
    return r;
}

}  // namespace degen
