#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degen/degenerate.hpp"
#include "degen/oracle.hpp"
#include "degen/random.hpp"

namespace degen::fixtures {

// Each set is empty with probability empty_frac, otherwise a random nonempty subset.
inline DegenerateString random_instance(Rng& rng, std::uint64_t n, std::uint32_t sigma, double empty_frac) {
    DegenerateString x(sigma);
    std::vector<std::uint32_t> set;
    for (std::uint64_t i = 0; i < n; ++i) {
        set.clear();
        if (rng.unit() >= empty_frac) {
            while (set.empty())
                for (std::uint32_t c = 0; c < sigma; ++c)
                    if (rng.below(3) == 0) set.push_back(c);
        }
        x.push_back(set);
    }
    return x;
}

inline std::string random_bits(Rng& rng, std::uint64_t len, std::uint64_t one_in) {
    std::string s(len, '0');
    for (auto& ch : s)
        if (rng.below(one_in) == 0) ch = '1';
    return s;
}

inline std::vector<std::uint32_t> random_text(Rng& rng, std::uint64_t len, std::uint32_t sigma) {
    std::vector<std::uint32_t> t(len);
    for (auto& v : t) v = static_cast<std::uint32_t>(rng.below(sigma));
    return t;
}

// Golden example [{A,C,G},{A,T},{C},{T,G}] with A=0, C=1, G=2, T=3.
inline DegenerateString golden() { return DegenerateString(4, {{0, 1, 2}, {0, 3}, {1}, {3, 2}}); }

// Every in-range subset-rank and subset-select query compared with the oracle.
template <class S>
std::uint64_t count_mismatches(const S& s, const DegenerateString& x) {
    std::uint64_t bad = 0;
    for (std::uint32_t c = 0; c < x.sigma(); ++c) {
        std::uint64_t seen = 0;
        for (std::uint64_t i = 0; i <= x.length(); ++i) {
            bad += s.subset_rank(i, c) != seen;
            if (i < x.length() && x.contains(i, c)) {
                ++seen;
                bad += s.subset_select(seen, c) != i;
            }
        }
        bad += seen != oracle::subset_rank(x, x.length(), c);
    }
    return bad;
}

}  // namespace degen::fixtures
