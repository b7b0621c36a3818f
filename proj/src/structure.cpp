#include "degen/structure.hpp"

#include <fstream>
#include <iterator>

#include "degen/errors.hpp"

namespace degen {

namespace {

constexpr char kMagic[] = "DGRS";
constexpr std::uint8_t kVersion = 1;

std::uint8_t structure_tag(StructureSpec spec) {
    return static_cast<std::uint8_t>((static_cast<unsigned>(spec.kind) << 4) | static_cast<unsigned>(spec.base.kind));
}

}  // namespace

std::string structure_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::reduction_i: return "reduction-i";
        case StructureKind::reduction_ii: return "reduction-ii";
        case StructureKind::reduction_iii: return "reduction-iii";
        case StructureKind::dsd: return "dsd";
    }
    return "unknown";
}

StructureKind parse_structure_kind(const std::string& name) {
    if (name == "reduction-i") return StructureKind::reduction_i;
    if (name == "reduction-ii") return StructureKind::reduction_ii;
    if (name == "reduction-iii") return StructureKind::reduction_iii;
    if (name == "dsd") return StructureKind::dsd;
    throw ParseError("unknown structure '" + name + "' (expected reduction-i, reduction-ii, reduction-iii or dsd)");
}

bool supports(const StructureSpec& spec, std::uint32_t sigma, std::uint64_t empty_sets) {
    const bool bitplane = spec.base.kind == BaseKind::bitplane;
    switch (spec.kind) {
        case StructureKind::reduction_i: return empty_sets == 0 && (!bitplane || sigma <= BitPlaneRank::kSigma);
        case StructureKind::reduction_ii: return !bitplane || sigma + 1 <= BitPlaneRank::kSigma;
        case StructureKind::reduction_iii:
        case StructureKind::dsd: return !bitplane || sigma <= BitPlaneRank::kSigma;
    }
    return false;
}

SubsetIndex::SubsetIndex(const DegenerateString& x, StructureSpec spec) {
    switch (spec.kind) {
        case StructureKind::reduction_i: impl_ = ReductionI(x, spec.base); break;
        case StructureKind::reduction_ii: impl_ = ReductionII(x, spec.base); break;
        case StructureKind::reduction_iii: impl_ = ReductionIII(x, spec.base); break;
        case StructureKind::dsd: impl_ = DsdStructure(x, spec.base); break;
    }
}

StructureSpec SubsetIndex::spec() const {
    const auto kind = static_cast<StructureKind>(impl_.index() + 1);
    const BaseSpec base = std::visit([](const auto& s) { return s.base(); }, impl_);
    return {kind, base};
}

std::uint32_t SubsetIndex::sigma() const {
    return std::visit([](const auto& s) { return s.sigma(); }, impl_);
}

std::uint64_t SubsetIndex::length() const {
    return std::visit([](const auto& s) { return s.length(); }, impl_);
}

std::uint64_t SubsetIndex::total_size() const {
    return std::visit([](const auto& s) { return s.total_size(); }, impl_);
}

std::uint64_t SubsetIndex::empty_sets() const {
    return std::visit(
        [](const auto& s) -> std::uint64_t {
            if constexpr (requires { s.empty_sets(); }) return s.empty_sets();
            else return 0;
        },
        impl_);
}

SpaceBreakdown SubsetIndex::space() const {
    return std::visit([](const auto& s) { return s.space(); }, impl_);
}

std::vector<std::uint8_t> SubsetIndex::to_bytes() const {
    io::ByteWriter out;
    out.raw(std::string_view(kMagic, 4));
    out.u8(kVersion);
    out.u8(structure_tag(spec()));
    out.u64(length());
    out.u64(total_size());
    out.u64(empty_sets());
    out.u64(sigma());
    std::visit([&](const auto& s) { s.serialize(out); }, impl_);
    return out.take();
}

SubsetIndex SubsetIndex::from_bytes(std::span<const std::uint8_t> bytes) {
    io::ByteReader in(bytes);
    if (in.remaining() < 4 || in.raw(4) != std::string_view(kMagic, 4)) throw ParseError("not a DGRS container (bad magic)");
    const std::uint8_t version = in.u8();
    if (version != kVersion) throw ParseError("unsupported container version " + std::to_string(version));
    const std::uint8_t tag = in.u8();
    const std::uint64_t n = in.u64();
    const std::uint64_t big_n = in.u64();
    const std::uint64_t n0 = in.u64();
    const std::uint64_t sigma = in.u64();

    SubsetIndex idx;
    switch (static_cast<StructureKind>(tag >> 4)) {
        case StructureKind::reduction_i: idx.impl_ = ReductionI::deserialize(in); break;
        case StructureKind::reduction_ii: idx.impl_ = ReductionII::deserialize(in); break;
        case StructureKind::reduction_iii: idx.impl_ = ReductionIII::deserialize(in); break;
        case StructureKind::dsd: idx.impl_ = DsdStructure::deserialize(in); break;
        default: throw ParseError("unknown structure tag " + std::to_string(tag));
    }
    in.expect_end();
    if (structure_tag(idx.spec()) != tag) throw ParseError("structure tag disagrees with the stored components");
    if (idx.length() != n || idx.total_size() != big_n || idx.empty_sets() != n0 || idx.sigma() != sigma)
        throw ParseError("container header disagrees with the stored structure");
    return idx;
}

void SubsetIndex::save(const std::string& path) const {
    const auto bytes = to_bytes();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + path);
}

SubsetIndex SubsetIndex::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_bytes(bytes);
}

}  // namespace degen
