#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "degen/degenerate.hpp"
#include "degen/dsd.hpp"
#include "degen/reductions.hpp"
#include "degen/symbol_index.hpp"

namespace degen {

enum class StructureKind : std::uint8_t { reduction_i = 1, reduction_ii = 2, reduction_iii = 3, dsd = 4 };

/// "reduction-i", "reduction-ii", "reduction-iii", "dsd".
std::string structure_name(StructureKind kind);
StructureKind parse_structure_kind(const std::string& name);

struct StructureSpec {
    StructureKind kind = StructureKind::reduction_iii;
    BaseSpec base = BaseSpec::wavelet();

    /// e.g. "dsd/bitplane(8)"
    std::string name() const { return structure_name(kind) + "/" + base.name(); }

    friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

/// Whether `spec` can be built for an instance with this alphabet and empty-set count.
bool supports(const StructureSpec& spec, std::uint32_t sigma, std::uint64_t empty_sets);

/// Any of the subset rank/select structures behind one interface.
class SubsetIndex {
public:
    SubsetIndex() = default;
    /// Throws PreconditionError / UnsupportedAlphabet for unsupported combinations.
    SubsetIndex(const DegenerateString& x, StructureSpec spec);

    StructureSpec spec() const;
    std::uint32_t sigma() const;
    std::uint64_t length() const;      // n
    std::uint64_t total_size() const;  // N
    std::uint64_t empty_sets() const;  // n0

    std::uint64_t subset_rank(std::uint64_t i, std::uint32_t c) const {
        return std::visit([&](const auto& s) { return s.subset_rank(i, c); }, impl_);
    }
    std::uint64_t subset_select(std::uint64_t j, std::uint32_t c) const {
        return std::visit([&](const auto& s) { return s.subset_select(j, c); }, impl_);
    }

    SpaceBreakdown space() const;
    std::uint64_t size_bits() const { return space().total(); }

    /// Container bytes: "DGRS", version, structure tag, header, components.
    std::vector<std::uint8_t> to_bytes() const;
    static SubsetIndex from_bytes(std::span<const std::uint8_t> bytes);

    void save(const std::string& path) const;
    static SubsetIndex load(const std::string& path);

    template <class T>
    const T* get_if() const { return std::get_if<T>(&impl_); }

private:
    std::variant<ReductionI, ReductionII, ReductionIII, DsdStructure> impl_;
};

}  // namespace degen
