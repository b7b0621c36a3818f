#pragma once

#include <cstdint>

#include "degen/degenerate.hpp"

namespace degen::oracle {

/// Number of sets among X_0..X_{i-1} containing c, by linear scan.
std::uint64_t subset_rank(const DegenerateString& x, std::uint64_t i, std::uint32_t c);

/// 0-indexed position of the j-th set containing c (j >= 1), by linear scan.
std::uint64_t subset_select(const DegenerateString& x, std::uint64_t j, std::uint32_t c);

}  // namespace degen::oracle
