#include "degen/symbol_index.hpp"

#include <charconv>

#include "degen/errors.hpp"

namespace degen {

namespace {
constexpr std::uint8_t kTagSymbolIndex = 'S';
}

std::string BaseSpec::name() const {
    if (kind == BaseKind::wavelet) return "wavelet";
    return "bitplane(" + std::to_string(block_words) + ")";
}

BaseSpec BaseSpec::parse(const std::string& text) {
    if (text == "wavelet") return wavelet();
    if (text == "bitplane") return bitplane();
    const std::string prefix = "bitplane(";
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
        unsigned words = 0;
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size() - 1;
        auto [ptr, ec] = std::from_chars(first, last, words);
        if (ec == std::errc{} && ptr == last && words >= 1 && words <= BitPlaneRank::kMaxBlockWords)
            return bitplane(words);
    }
    throw ParseError("unknown base structure '" + text + "' (expected wavelet or bitplane(i))");
}

SymbolIndex::SymbolIndex(std::span<const std::uint32_t> text, std::uint32_t sigma, BaseSpec base) {
    if (base.kind == BaseKind::bitplane) {
        if (sigma > BitPlaneRank::kSigma)
            throw UnsupportedAlphabet("bit-plane base needs an alphabet of at most 4 symbols, got " + std::to_string(sigma));
        impl_ = BitPlaneRank(text, base.block_words);
    } else {
        impl_ = WaveletTree(text, sigma);
    }
}

std::uint64_t SymbolIndex::size() const {
    return std::visit([](const auto& s) { return s.size(); }, impl_);
}

BaseSpec SymbolIndex::base() const {
    if (const auto* bp = std::get_if<BitPlaneRank>(&impl_)) return BaseSpec::bitplane(bp->block_words());
    return BaseSpec::wavelet();
}

std::uint64_t SymbolIndex::rank(std::uint64_t i, std::uint32_t c) const {
    return std::visit([&](const auto& s) { return s.rank(i, c); }, impl_);
}

std::uint64_t SymbolIndex::select(std::uint64_t j, std::uint32_t c) const {
    return std::visit([&](const auto& s) { return s.select(j, c); }, impl_);
}

std::uint32_t SymbolIndex::access(std::uint64_t pos) const {
    return std::visit([&](const auto& s) { return s.access(pos); }, impl_);
}

std::uint64_t SymbolIndex::size_bits() const {
    return std::visit([](const auto& s) { return s.size_bits(); }, impl_);
}

void SymbolIndex::serialize(io::ByteWriter& out) const {
    const auto at = out.begin_component(kTagSymbolIndex);
    out.u8(static_cast<std::uint8_t>(base().kind));
    std::visit([&](const auto& s) { s.serialize(out); }, impl_);
    out.end_component(at);
}

SymbolIndex SymbolIndex::deserialize(io::ByteReader& in) {
    auto sub = in.component(kTagSymbolIndex);
    SymbolIndex idx;
    switch (sub.u8()) {
        case static_cast<std::uint8_t>(BaseKind::wavelet): idx.impl_ = WaveletTree::deserialize(sub); break;
        case static_cast<std::uint8_t>(BaseKind::bitplane): idx.impl_ = BitPlaneRank::deserialize(sub); break;
        default: throw ParseError("unknown base structure kind");
    }
    sub.expect_end();
    return idx;
}

}  // namespace degen
