#pragma once

#include <cstdint>

#include "degen/degenerate.hpp"

namespace degen {

/// Counting lower bound for any subset-rank or subset-select representation.
///
/// With k = floor(log2 N) and m = floor(N / k), the class of degenerate strings
/// made of m sets of exactly k symbols has C(sigma, k)^m members, so some
/// member needs at least m * log2 C(sigma, k) bits.
struct LowerBoundReport {
    std::uint64_t N = 0;
    std::uint64_t sigma = 0;
    unsigned log_n = 0;           // k
    std::uint64_t sets = 0;       // m
    double exact_bits = 0.0;      // m * log2 C(sigma, k)
    double relaxed_bits = 0.0;    // m * k * log2((sigma - k) / k), clamped at 0
    double headline_bits = 0.0;   // N * log2 sigma
    bool relaxed_vacuous = false; // sigma <= 2k: the relaxed form gives nothing
};

/// Requires N >= 2, sigma >= 2, sigma >= floor(log2 N); throws DomainError otherwise.
LowerBoundReport lower_bound(std::uint64_t N, std::uint64_t sigma);

/// log2 of the binomial coefficient C(n, k), k <= n.
double log2_binomial(std::uint64_t n, std::uint64_t k);

struct SpaceAudit {
    std::uint64_t measured_bits = 0;
    double bits_per_symbol = 0.0;       // measured / N
    double bits_per_set = 0.0;          // measured / n
    double headline_ratio = 0.0;        // measured / (N log2 sigma); 0 when undefined
    double entropy_ratio = 0.0;         // measured / (n * H); 0 when H = 0
};

/// Requires N > 0.
SpaceAudit space_audit(std::uint64_t measured_bits, const DegenStats& stats);

}  // namespace degen
