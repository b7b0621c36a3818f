#include "degen/bench.hpp"

#include <charconv>
#include <chrono>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/random.hpp"

namespace degen::bench {

std::string query_kind_name(QueryKind kind) { return kind == QueryKind::rank ? "rank" : "select"; }

QueryKind parse_query_kind(const std::string& name) {
    if (name == "rank") return QueryKind::rank;
    if (name == "select") return QueryKind::select;
    throw ParseError("unknown query kind '" + name + "' (expected rank or select)");
}

std::vector<Query> make_queries(std::uint64_t seed, std::uint64_t count, QueryKind kind, std::uint64_t n,
                                std::span<const std::uint64_t> totals) {
    const auto sigma = static_cast<std::uint32_t>(totals.size());
    if (sigma == 0) throw PreconditionError("queries need sigma >= 1");
    std::vector<Query> out;
    out.reserve(count);
    Rng rng(seed);
    if (kind == QueryKind::rank) {
        for (std::uint64_t q = 0; q < count; ++q) {
            const std::uint64_t i = rng.below(n + 1);
            const auto c = static_cast<std::uint32_t>(rng.below(sigma));
            out.push_back({i, c});
        }
        return out;
    }
    std::vector<std::uint32_t> present;
    for (std::uint32_t c = 0; c < sigma; ++c)
        if (totals[c] > 0) present.push_back(c);
    if (present.empty()) throw PreconditionError("select queries need at least one occurrence");
    for (std::uint64_t q = 0; q < count; ++q) {
        const std::uint32_t c = present[rng.below(present.size())];
        const std::uint64_t j = 1 + rng.below(totals[c]);
        out.push_back({j, c});
    }
    return out;
}

std::vector<Query> make_queries(const SubsetIndex& idx, const BenchConfig& cfg) {
    std::vector<std::uint64_t> totals(idx.sigma());
    for (std::uint32_t c = 0; c < idx.sigma(); ++c) totals[c] = idx.subset_rank(idx.length(), c);
    return make_queries(cfg.seed, cfg.query_count, cfg.query_kind, idx.length(), totals);
}

BenchResult run_bench(const SubsetIndex& idx, const BenchConfig& cfg) {
    if (cfg.query_count == 0 || cfg.repeats == 0) throw PreconditionError("query_count and repeats must be >= 1");
    const auto queries = make_queries(idx, cfg);

    BenchResult r;
    r.spec = idx.spec();
    r.n = idx.length();
    r.N = idx.total_size();
    r.n0 = idx.empty_sets();
    r.sigma = idx.sigma();
    r.query_kind = cfg.query_kind;
    r.bits_per_symbol = r.N == 0 ? 0.0 : static_cast<double>(idx.size_bits()) / static_cast<double>(r.N);

    double total_ns = 0.0;
    for (unsigned rep = 0; rep < cfg.repeats; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t sum;
        if (cfg.query_kind == QueryKind::rank)
            sum = fold_checksum(queries, [&](const Query& q) { return idx.subset_rank(q.arg, q.c); });
        else
            sum = fold_checksum(queries, [&](const Query& q) { return idx.subset_select(q.arg, q.c); });
        const auto stop = std::chrono::steady_clock::now();
        total_ns += std::chrono::duration<double, std::nano>(stop - start).count();
        if (rep > 0 && sum != r.checksum) throw Error("checksum changed between repeats");
        r.checksum = sum;
    }
    r.ns_per_query = total_ns / cfg.repeats / static_cast<double>(queries.size());
    return r;
}

std::string csv_header() { return "structure,base,n,N,n0,sigma,query_kind,ns_per_query,bits_per_symbol,checksum"; }

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_number(const std::string& field, const char* name) {
    T v{};
    const char* end = field.data() + field.size();
    const auto res = std::from_chars(field.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || field.empty())
        throw ParseError(std::string("bad CSV field ") + name + ": '" + field + "'");
    return v;
}

}  // namespace

std::string to_csv_row(const BenchResult& r) {
    std::ostringstream out;
    out << structure_name(r.spec.kind) << ',' << r.spec.base.name() << ',' << r.n << ',' << r.N << ',' << r.n0 << ','
        << r.sigma << ',' << query_kind_name(r.query_kind) << ',' << format_double(r.ns_per_query) << ','
        << format_double(r.bits_per_symbol) << ',' << r.checksum;
    return out.str();
}

BenchResult parse_csv_row(const std::string& row) {
    std::vector<std::string> f;
    std::string cur;
    for (char ch : row) {
        if (ch == ',') {
            f.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != '\n') {
            cur += ch;
        }
    }
    f.push_back(cur);
    if (f.size() != 10) throw ParseError("CSV row needs 10 fields, got " + std::to_string(f.size()));

    BenchResult r;
    r.spec.kind = parse_structure_kind(f[0]);
    r.spec.base = BaseSpec::parse(f[1]);
    r.n = parse_number<std::uint64_t>(f[2], "n");
    r.N = parse_number<std::uint64_t>(f[3], "N");
    r.n0 = parse_number<std::uint64_t>(f[4], "n0");
    r.sigma = parse_number<std::uint32_t>(f[5], "sigma");
    r.query_kind = parse_query_kind(f[6]);
    r.ns_per_query = parse_number<double>(f[7], "ns_per_query");
    r.bits_per_symbol = parse_number<double>(f[8], "bits_per_symbol");
    r.checksum = parse_number<std::uint64_t>(f[9], "checksum");
    return r;
}

}  // namespace degen::bench
