#include "degen/oracle.hpp"

#include <string>

#include "degen/errors.hpp"

namespace degen::oracle {

std::uint64_t subset_rank(const DegenerateString& x, std::uint64_t i, std::uint32_t c) {
    if (i > x.length()) throw OutOfBounds("subset-rank index " + std::to_string(i) + " exceeds length " + std::to_string(x.length()));
    if (c >= x.sigma()) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet");
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < i; ++k)
        for (auto s : x.set(k))
            if (s == c) ++count;
    return count;
}

std::uint64_t subset_select(const DegenerateString& x, std::uint64_t j, std::uint32_t c) {
    if (c >= x.sigma()) throw OutOfBounds("symbol " + std::to_string(c) + " outside alphabet");
    if (j == 0) throw NotFound("subset-select ordinal must be >= 1");
    std::uint64_t seen = 0;
    for (std::uint64_t k = 0; k < x.length(); ++k)
        for (auto s : x.set(k))
            if (s == c && ++seen == j) return k;
    throw NotFound("subset-select(" + std::to_string(j) + ", " + std::to_string(c) + ") but only " +
                   std::to_string(seen) + " sets contain the symbol");
}

}  // namespace degen::oracle
