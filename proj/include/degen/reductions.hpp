#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degen/binary_io.hpp"
#include "degen/bitvector.hpp"
#include "degen/degenerate.hpp"
#include "degen/symbol_index.hpp"

namespace degen {

/// Per-component space of a subset rank/select structure, in bits.
struct SpaceBreakdown {
    std::uint64_t symbols = 0;   // S: the regular-string structure (DSD: the base string)
    std::uint64_t starts = 0;    // R: set-start bitvector
    std::uint64_t empties = 0;   // E: empty-set bitvector
    std::uint64_t overflow = 0;  // DSD overflow bitvectors

    std::uint64_t total() const { return symbols + starts + empties + overflow; }
};

/// Subset rank/select for degenerate strings without empty sets.
///
/// S concatenates the (ascending) contents of every set; R has a 1 at the
/// start of each set's run in S plus a trailing 1, so |S| = N and |R| = N + 1.
///   subset_rank(i, c)   = rank_S(select_R(i + 1, 1), c)
///   subset_select(j, c) = rank_R(select_S(j, c) + 1, 1) - 1
/// (all positions 0-indexed, rank over the half-open prefix [0, i)).
class ReductionI {
public:
    ReductionI() = default;
    /// Throws PreconditionError if x has an empty set.
    ReductionI(const DegenerateString& x, BaseSpec base);
    /// S_i is run i as given, so callers pick the order inside each set.
    /// Runs must be nonempty, duplicate-free and inside [0, sigma).
    static ReductionI from_runs(std::uint32_t sigma, const std::vector<std::vector<std::uint32_t>>& runs,
                                BaseSpec base);

    std::uint32_t sigma() const { return sigma_; }
    std::uint64_t length() const { return starts_.count_ones() - 1; }  // n
    std::uint64_t total_size() const { return symbols_.size(); }      // N

    std::uint64_t subset_rank(std::uint64_t i, std::uint32_t c) const;
    std::uint64_t subset_select(std::uint64_t j, std::uint32_t c) const;

    const SymbolIndex& symbols() const { return symbols_; }
    const PlainBitvector& starts() const { return starts_; }
    BaseSpec base() const { return symbols_.base(); }

    SpaceBreakdown space() const { return {symbols_.size_bits(), starts_.size_bits(), 0, 0}; }
    std::uint64_t size_bits() const { return space().total(); }

    void serialize(io::ByteWriter& out) const;
    static ReductionI deserialize(io::ByteReader& in);

private:
    void assemble(std::span<const std::uint32_t> text, std::span<const std::uint64_t> starts, BaseSpec base);

    std::uint32_t sigma_ = 0;
    SymbolIndex symbols_;
    PlainBitvector starts_ = PlainBitvector::from_string("1");
};

/// Handles empty sets by mapping each to the singleton {sigma} of a private
/// extra symbol and applying ReductionI over sigma + 1 symbols.
class ReductionII {
public:
    ReductionII() = default;
    ReductionII(const DegenerateString& x, BaseSpec base);

    std::uint32_t sigma() const { return sigma_; }
    std::uint64_t length() const { return inner_.length(); }
    std::uint64_t total_size() const { return inner_.total_size() - empty_sets_; }
    std::uint64_t empty_sets() const { return empty_sets_; }

    std::uint64_t subset_rank(std::uint64_t i, std::uint32_t c) const;
    std::uint64_t subset_select(std::uint64_t j, std::uint32_t c) const;

    const ReductionI& inner() const { return inner_; }
    BaseSpec base() const { return inner_.base(); }

    SpaceBreakdown space() const { return inner_.space(); }
    std::uint64_t size_bits() const { return space().total(); }

    void serialize(io::ByteWriter& out) const;
    static ReductionII deserialize(io::ByteReader& in);

private:
    std::uint32_t sigma_ = 0;
    std::uint64_t empty_sets_ = 0;
    ReductionI inner_;
};

/// Handles empty sets with a separate sparse bitvector E (1 = empty set) and
/// ReductionI over the nonempty sets.
///   subset_rank(i, c)   = inner.subset_rank(i - rank_E(i, 1), c)
///   subset_select(j, c) = select_E(inner.subset_select(j, c) + 1, 0)
class ReductionIII {
public:
    ReductionIII() = default;
    ReductionIII(const DegenerateString& x, BaseSpec base);

    std::uint32_t sigma() const { return inner_.sigma(); }
    std::uint64_t length() const { return empties_.size(); }
    std::uint64_t total_size() const { return inner_.total_size(); }
    std::uint64_t empty_sets() const { return empties_.count_ones(); }

    std::uint64_t subset_rank(std::uint64_t i, std::uint32_t c) const;
    std::uint64_t subset_select(std::uint64_t j, std::uint32_t c) const;

    const ReductionI& inner() const { return inner_; }
    const SparseBitvector& empties() const { return empties_; }
    BaseSpec base() const { return inner_.base(); }

    SpaceBreakdown space() const {
        auto s = inner_.space();
        s.empties = empties_.size_bits();
        return s;
    }
    std::uint64_t size_bits() const { return space().total(); }

    void serialize(io::ByteWriter& out) const;
    static ReductionIII deserialize(io::ByteReader& in);

private:
    SparseBitvector empties_;
    ReductionI inner_;
};

/// The degenerate string with every empty set removed.
DegenerateString without_empty_sets(const DegenerateString& x);

}  // namespace degen
