#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degen/structure.hpp"

namespace degen::bench {

enum class QueryKind { rank, select };

std::string query_kind_name(QueryKind kind);
QueryKind parse_query_kind(const std::string& name);

struct BenchConfig {
    std::uint64_t query_count = 20'000'000;
    unsigned repeats = 5;
    std::uint64_t seed = 1;
    QueryKind query_kind = QueryKind::rank;
};

struct BenchResult {
    StructureSpec spec;
    std::uint64_t n = 0;
    std::uint64_t N = 0;
    std::uint64_t n0 = 0;
    std::uint32_t sigma = 0;
    QueryKind query_kind = QueryKind::rank;
    double ns_per_query = 0.0;     // mean over repeats
    double bits_per_symbol = 0.0;  // size_bits / N, 0 when N = 0
    std::uint64_t checksum = 0;
};

/// rank: arg = i in [0, n]; select: arg = j in [1, count(c)].
struct Query {
    std::uint64_t arg;
    std::uint32_t c;
};

/// Deterministic for (seed, n, sigma, per-symbol totals): i and c uniform for
/// rank; for select, c uniform among symbols that occur and j uniform in range.
/// `totals[c]` is subset_rank(n, c). Throws PreconditionError when no query can be formed.
std::vector<Query> make_queries(std::uint64_t seed, std::uint64_t count, QueryKind kind, std::uint64_t n,
                                std::span<const std::uint64_t> totals);

std::vector<Query> make_queries(const SubsetIndex& idx, const BenchConfig& cfg);

/// Wrapping sum over queries q of (answer_q XOR q).
template <class AnswerFn>
std::uint64_t fold_checksum(std::span<const Query> queries, AnswerFn&& answer) {
    std::uint64_t sum = 0;
    for (std::uint64_t q = 0; q < queries.size(); ++q) sum += answer(queries[q]) ^ q;
    return sum;
}

/// Times only the query loop; build, I/O, and query generation are excluded.
BenchResult run_bench(const SubsetIndex& idx, const BenchConfig& cfg);

std::string csv_header();
std::string to_csv_row(const BenchResult& r);
/// Inverse of to_csv_row; throws ParseError on malformed rows.
BenchResult parse_csv_row(const std::string& row);

}  // namespace degen::bench
