#include "degen/dsd.hpp"

#include <string>

#include "degen/errors.hpp"

namespace degen {

namespace {
constexpr std::uint8_t kTagDsd = 'D';
}

DsdStructure::DsdStructure(const DegenerateString& x, BaseSpec base, KeptSymbol kept) : sigma_(x.sigma()) {
    if (base.kind == BaseKind::bitplane && sigma_ > BitPlaneRank::kSigma)
        throw UnsupportedAlphabet("bit-plane base needs an alphabet of at most 4 symbols, got " + std::to_string(sigma_));

    const std::uint64_t n = x.length();
    std::vector<std::uint64_t> empty_positions;
    std::vector<std::uint32_t> kept_symbols;
    kept_symbols.reserve(n - x.empty_sets());
    std::vector<std::vector<std::uint64_t>> extra(sigma_);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto s = x.set(i);
        if (s.empty()) {
            empty_positions.push_back(i);
            continue;
        }
        const std::size_t keep = kept == KeptSymbol::min ? 0 : s.size() - 1;
        kept_symbols.push_back(s[keep]);
        for (std::size_t k = 0; k < s.size(); ++k)
            if (k != keep) extra[s[k]].push_back(i);
    }
    empties_ = SparseBitvector(n, empty_positions);
    base_ = SymbolIndex(kept_symbols, sigma_, base);
    overflow_.reserve(sigma_);
    for (std::uint32_t c = 0; c < sigma_; ++c) overflow_.emplace_back(n, extra[c]);
}

std::uint64_t DsdStructure::total_size() const {
    std::uint64_t total = base_.size();
    for (const auto& o : overflow_) total += o.count_ones();
    return total;
}

std::uint64_t DsdStructure::subset_rank(std::uint64_t i, std::uint32_t c) const {
    if (i > length()) throw OutOfBounds("subset-rank index " + std::to_string(i) + " exceeds length " + std::to_string(length()));
    if (c >= sigma_) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma_));
    return rank_unchecked(i, c);
}

std::uint64_t DsdStructure::subset_select(std::uint64_t j, std::uint32_t c) const {
    if (c >= sigma_) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma_));
    const std::uint64_t n = length();
    const std::uint64_t total = rank_unchecked(n, c);
    if (j == 0 || j > total) {
        throw NotFound("subset-select(" + std::to_string(j) + ", " + std::to_string(c) + ") but only " +
                       std::to_string(total) + " sets contain the symbol");
    }
    // smallest prefix length p with rank(p) >= j; the answer is p - 1
    std::uint64_t lo = 1;
    std::uint64_t hi = n;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (rank_unchecked(mid, c) >= j) hi = mid;
        else lo = mid + 1;
    }
    return lo - 1;
}

SpaceBreakdown DsdStructure::space() const {
    SpaceBreakdown s;
    s.symbols = base_.size_bits();
    s.empties = empties_.size_bits();
    for (const auto& o : overflow_) s.overflow += o.size_bits();
    return s;
}

void DsdStructure::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagDsd);
    out.u64(sigma_);
    empties_.serialize(out);
    base_.serialize(out);
    for (const auto& o : overflow_) o.serialize(out);
    out.end_component(at);
}

DsdStructure DsdStructure::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagDsd);
    DsdStructure d;
    const std::uint64_t sigma = sub.u64();
    if (sigma > UINT32_MAX) throw ParseError("alphabet size too large");
    d.sigma_ = static_cast<std::uint32_t>(sigma);
    d.empties_ = SparseBitvector::deserialize(sub);
    d.base_ = SymbolIndex::deserialize(sub);
    if (d.base_.size() != d.empties_.count(false)) throw ParseError("base string length disagrees with the nonempty sets");
    if (d.base_.base().kind == BaseKind::bitplane && d.sigma_ > BitPlaneRank::kSigma)
        throw ParseError("bit-plane base with alphabet larger than 4");
    for (std::uint32_t c = 0; c < d.sigma_; ++c) {
        d.overflow_.push_back(SparseBitvector::deserialize(sub));
        if (d.overflow_.back().size() != d.empties_.size()) throw ParseError("overflow bitvector length mismatch");
    }
    sub.expect_end();
    return d;
}

}  // namespace degen
