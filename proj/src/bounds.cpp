#include "degen/bounds.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "degen/errors.hpp"

namespace degen {

double log2_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError("binomial with k > n");
    if (k > n - k) k = n - k;
    // product of (n - t) / (k - t); each factor >= 1, summed in log space
    double sum = 0.0;
    for (std::uint64_t t = 0; t < k; ++t)
        sum += std::log2(static_cast<double>(n - t) / static_cast<double>(k - t));
    return sum;
}

LowerBoundReport lower_bound(std::uint64_t N, std::uint64_t sigma) {
    if (N < 2) throw DomainError("lower bound needs N >= 2");
    if (sigma < 2) throw DomainError("lower bound needs sigma >= 2");
    const auto k = static_cast<unsigned>(std::bit_width(N) - 1);
    if (sigma < k)
        throw DomainError("lower bound needs sigma >= floor(log2 N) = " + std::to_string(k));

    LowerBoundReport r;
    r.N = N;
    r.sigma = sigma;
    r.log_n = k;
    r.sets = N / k;
    r.exact_bits = static_cast<double>(r.sets) * log2_binomial(sigma, k);
    r.headline_bits = static_cast<double>(N) * std::log2(static_cast<double>(sigma));
    r.relaxed_vacuous = sigma <= 2ull * k;
    if (!r.relaxed_vacuous) {
        const double ratio = static_cast<double>(sigma - k) / static_cast<double>(k);
        r.relaxed_bits = static_cast<double>(r.sets) * k * std::log2(ratio);
    }
    return r;
}

SpaceAudit space_audit(std::uint64_t measured_bits, const DegenStats& stats) {
    if (stats.N == 0) throw DomainError("space audit needs N > 0");
    SpaceAudit a;
    a.measured_bits = measured_bits;
    const auto bits = static_cast<double>(measured_bits);
    a.bits_per_symbol = bits / static_cast<double>(stats.N);
    a.bits_per_set = stats.n == 0 ? 0.0 : bits / static_cast<double>(stats.n);
    const double headline = static_cast<double>(stats.N) * std::log2(static_cast<double>(stats.sigma));
    a.headline_ratio = headline > 0.0 ? bits / headline : 0.0;
    const double entropy = static_cast<double>(stats.n) * stats.empirical_entropy_bits;
    a.entropy_ratio = entropy > 0.0 ? bits / entropy : 0.0;
    return a;
}

}  // namespace degen
