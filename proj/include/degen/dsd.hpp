#pragma once

#include <cstdint>
#include <vector>

#include "degen/binary_io.hpp"
#include "degen/bitvector.hpp"
#include "degen/degenerate.hpp"
#include "degen/reductions.hpp"
#include "degen/symbol_index.hpp"

namespace degen {

/// Which symbol of a multi-symbol set stays in the base string.
enum class KeptSymbol { min, max };

/// Dense-sparse decomposition.
///
/// Every nonempty set keeps one symbol in a regular base string of length
/// n - n0; each other member c of set i sets bit i of overflow[c]. Empty sets
/// are marked in E. A subset-rank is three ranks:
///   base.rank(i - rank_E(i, 1), c) + rank_overflow[c](i, 1)
class DsdStructure {
public:
    DsdStructure() = default;
    DsdStructure(const DegenerateString& x, BaseSpec base, KeptSymbol kept = KeptSymbol::min);

    std::uint32_t sigma() const { return sigma_; }
    std::uint64_t length() const { return empties_.size(); }
    std::uint64_t total_size() const;
    std::uint64_t empty_sets() const { return empties_.count_ones(); }

    std::uint64_t subset_rank(std::uint64_t i, std::uint32_t c) const;
    /// Smallest i with subset_rank(i + 1, c) == j, by binary search over subset_rank.
    std::uint64_t subset_select(std::uint64_t j, std::uint32_t c) const;

    const SymbolIndex& base_string() const { return base_; }
    const SparseBitvector& empties() const { return empties_; }
    const SparseBitvector& overflow(std::uint32_t c) const { return overflow_[c]; }
    BaseSpec base() const { return base_.base(); }

    SpaceBreakdown space() const;
    std::uint64_t size_bits() const { return space().total(); }

    void serialize(io::ByteWriter& out) const;
    static DsdStructure deserialize(io::ByteReader& in);

private:
    std::uint64_t rank_unchecked(std::uint64_t i, std::uint32_t c) const {
        return base_.rank_unchecked(i - empties_.rank1_unchecked(i), c) + overflow_[c].rank1_unchecked(i);
    }

    std::uint32_t sigma_ = 0;
    SparseBitvector empties_;
    SymbolIndex base_;
    std::vector<SparseBitvector> overflow_;
};

}  // namespace degen
