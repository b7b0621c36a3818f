// degen: build, verify and benchmark subset rank/select structures.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "degen/bench.hpp"
#include "degen/bounds.hpp"
#include "degen/errors.hpp"
#include "degen/oracle.hpp"
#include "degen/random.hpp"
#include "degen/structure.hpp"

using namespace degen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    std::string output;
    std::string container;
    std::string format = "sets-text";
    std::string structure = "dsd";
    std::string base = "bitplane";
    unsigned block_words = BitPlaneRank::kDefaultBlockWords;
    std::uint64_t queries = 20'000'000;
    std::uint64_t verify_queries = 10'000;
    unsigned repeats = 5;
    std::optional<std::uint64_t> seed;
    bool exhaustive = false;
    bool csv = false;
    std::string query_kind = "rank";
    std::optional<std::uint64_t> generate_n;
    std::uint64_t n = 0;
    std::uint32_t sigma = 4;
    std::string profile = "genomic-like";
    std::uint64_t big_n = 0;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("DEGEN_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw ParseError(std::string("DEGEN_SEED is not an integer: '") + env + "'");
        return v;
    }
    return 1;
}

StructureSpec resolve_spec(const Options& o) {
    StructureSpec spec;
    spec.kind = parse_structure_kind(o.structure);
    spec.base = BaseSpec::parse(o.base);
    if (spec.base.kind == BaseKind::bitplane && o.base == "bitplane") spec.base.block_words = o.block_words;
    return spec;
}

// "genomic-like" or "uniform:w0,w1,..." (weights indexed by set size)
GeneratorProfile parse_profile(const std::string& text) {
    if (text == "genomic-like") return GenomicLikeProfile{};
    if (text.rfind("uniform:", 0) == 0) {
        UniformProfile p;
        std::stringstream ss(text.substr(8));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                p.size_weights.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("bad weight '" + tok + "' in profile");
            }
        }
        return p;
    }
    throw ParseError("unknown profile '" + text + "' (expected genomic-like or uniform:w0,w1,...)");
}

bool is_container(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    char magic[4] = {};
    in.read(magic, 4);
    return in.gcount() == 4 && std::string(magic, 4) == "DGRS";
}

void print_space(const SubsetIndex& idx, const DegenerateString& x) {
    const auto st = compute_stats(x);
    const auto s = idx.space();
    std::printf("structure      %s\n", idx.spec().name().c_str());
    std::printf("n N n0 sigma   %llu %llu %llu %u\n", (unsigned long long)st.n, (unsigned long long)st.N,
                (unsigned long long)st.n0, st.sigma);
    std::printf("size bits      %llu (symbols %llu, starts %llu, empties %llu, overflow %llu)\n",
                (unsigned long long)s.total(), (unsigned long long)s.symbols, (unsigned long long)s.starts,
                (unsigned long long)s.empties, (unsigned long long)s.overflow);
    if (st.N == 0) return;
    const auto a = space_audit(s.total(), st);
    std::printf("bits/symbol    %.4f\n", a.bits_per_symbol);
    std::printf("bits/set       %.4f\n", a.bits_per_set);
    std::printf("vs N log sigma %.4f\n", a.headline_ratio);
    if (a.entropy_ratio > 0.0) std::printf("vs n H         %.4f (H = %.4f bits/set)\n", a.entropy_ratio, st.empirical_entropy_bits);
}

int cmd_build(const Options& o) {
    const auto x = read_degenerate_file(o.input, parse_text_format(o.format));
    const SubsetIndex idx(x, resolve_spec(o));
    idx.save(o.output);
    print_space(idx, x);
    return kExitOk;
}

int cmd_verify(const Options& o) {
    const auto x = read_degenerate_file(o.input, parse_text_format(o.format));
    const SubsetIndex idx = o.container.empty() ? SubsetIndex(x, resolve_spec(o)) : SubsetIndex::load(o.container);
    const auto label = idx.spec().name();
    if (idx.length() != x.length() || idx.sigma() != x.sigma()) {
        std::printf("FAIL %s: structure has n=%llu sigma=%u, input has n=%llu sigma=%u\n", label.c_str(),
                    (unsigned long long)idx.length(), idx.sigma(), (unsigned long long)x.length(), x.sigma());
        return kExitVerifyFailed;
    }
    std::uint64_t checked = 0;
    auto check = [&](const char* op, std::uint64_t arg, std::uint32_t c, std::uint64_t expect) {
        ++checked;
        std::uint64_t got;
        std::string got_text;
        try {
            got = std::string(op) == "subset-rank" ? idx.subset_rank(arg, c) : idx.subset_select(arg, c);
            got_text = std::to_string(got);
        } catch (const Error& e) {
            got = ~expect;
            got_text = std::string("error: ") + e.what();
        }
        if (got == expect) return true;
        std::printf("FAIL %s: %s(%llu, %u) = %s, oracle says %llu\n", label.c_str(), op, (unsigned long long)arg, c,
                    got_text.c_str(), (unsigned long long)expect);
        return false;
    };

    if (o.exhaustive) {
        for (std::uint32_t c = 0; c < x.sigma(); ++c) {
            std::uint64_t seen = 0;
            for (std::uint64_t i = 0; i <= x.length(); ++i) {
                if (!check("subset-rank", i, c, seen)) return kExitVerifyFailed;
                if (i < x.length() && x.contains(i, c) && !check("subset-select", ++seen, c, i)) return kExitVerifyFailed;
            }
        }
    } else if (x.sigma() > 0) {
        Rng rng(resolve_seed(o));
        std::vector<std::uint64_t> totals(x.sigma());
        for (std::uint32_t c = 0; c < x.sigma(); ++c) totals[c] = oracle::subset_rank(x, x.length(), c);
        for (std::uint64_t q = 0; q < o.verify_queries; ++q) {
            const auto c = static_cast<std::uint32_t>(rng.below(x.sigma()));
            const auto i = rng.below(x.length() + 1);
            if (!check("subset-rank", i, c, oracle::subset_rank(x, i, c))) return kExitVerifyFailed;
            if (totals[c] == 0) continue;
            const auto j = 1 + rng.below(totals[c]);
            if (!check("subset-select", j, c, oracle::subset_select(x, j, c))) return kExitVerifyFailed;
        }
    }
    std::printf("PASS %s: %llu queries match the oracle\n", label.c_str(), (unsigned long long)checked);
    return kExitOk;
}

int cmd_bench(const Options& o) {
    if (o.input.empty() == !o.generate_n) throw ParseError("bench needs exactly one of INPUT or --generate");
    const std::uint64_t seed = resolve_seed(o);
    std::optional<SubsetIndex> idx;
    if (!o.input.empty() && is_container(o.input)) {
        idx = SubsetIndex::load(o.input);
    } else {
        const auto x = o.input.empty() ? generate(seed, *o.generate_n, o.sigma, parse_profile(o.profile))
                                       : read_degenerate_file(o.input, parse_text_format(o.format));
        idx.emplace(x, resolve_spec(o));
    }
    bench::BenchConfig cfg;
    cfg.query_count = o.queries;
    cfg.repeats = o.repeats;
    cfg.seed = seed;
    cfg.query_kind = bench::parse_query_kind(o.query_kind);
    const auto r = bench::run_bench(*idx, cfg);
    if (o.csv) {
        std::printf("%s\n%s\n", bench::csv_header().c_str(), bench::to_csv_row(r).c_str());
    } else {
        std::printf("structure      %s\n", r.spec.name().c_str());
        std::printf("n N n0 sigma   %llu %llu %llu %u\n", (unsigned long long)r.n, (unsigned long long)r.N,
                    (unsigned long long)r.n0, r.sigma);
        std::printf("queries        %llu %s x %u repeats, seed %llu\n", (unsigned long long)cfg.query_count,
                    o.query_kind.c_str(), cfg.repeats, (unsigned long long)seed);
        std::printf("ns/query       %.2f\n", r.ns_per_query);
        std::printf("bits/symbol    %.4f\n", r.bits_per_symbol);
        std::printf("checksum       %llu\n", (unsigned long long)r.checksum);
    }
    return kExitOk;
}

int cmd_lowerbound(const Options& o) {
    const auto r = lower_bound(o.big_n, o.sigma);
    std::printf("N              %llu\n", (unsigned long long)r.N);
    std::printf("sigma          %llu\n", (unsigned long long)r.sigma);
    std::printf("k = floor(lg N) %u, m = floor(N/k) %llu\n", r.log_n, (unsigned long long)r.sets);
    std::printf("exact bits     %.6f\n", r.exact_bits);
    std::printf("relaxed bits   %.6f%s\n", r.relaxed_bits, r.relaxed_vacuous ? " (vacuous: sigma <= 2k)" : "");
    std::printf("N lg sigma     %.6f\n", r.headline_bits);
    std::printf("exact / N lg sigma %.6f\n", r.headline_bits > 0 ? r.exact_bits / r.headline_bits : 0.0);
    return kExitOk;
}

int cmd_gen(const Options& o) {
    const auto x = generate(resolve_seed(o), o.n, o.sigma, parse_profile(o.profile));
    const auto format = parse_text_format(o.format);
    if (o.output.empty() || o.output == "-") {
        const auto text = serialize_degenerate(x, format);
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_degenerate_file(o.output, x, format);
    }
    return kExitOk;
}

int cmd_stats(const Options& o) {
    const auto st = compute_stats(read_degenerate_file(o.input, parse_text_format(o.format)));
    std::printf("n              %llu\n", (unsigned long long)st.n);
    std::printf("N              %llu\n", (unsigned long long)st.N);
    std::printf("n0             %llu\n", (unsigned long long)st.n0);
    std::printf("sigma          %u\n", st.sigma);
    std::printf("entropy        %.6f bits/set\n", st.empirical_entropy_bits);
    std::printf("set sizes     ");
    for (std::size_t k = 0; k < st.set_size_histogram.size(); ++k)
        if (st.set_size_histogram[k] != 0) std::printf(" %zu:%llu", k, (unsigned long long)st.set_size_histogram[k]);
    std::printf("\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank and select on degenerate strings"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Input text format")->check(CLI::IsMember({"sets-text", "dna-text"}));
    };
    auto add_structure = [&](CLI::App* c) {
        c->add_option("--structure", o.structure, "reduction-i, reduction-ii, reduction-iii or dsd")
            ->check(CLI::IsMember({"reduction-i", "reduction-ii", "reduction-iii", "dsd"}));
        c->add_option("--base", o.base, "wavelet or bitplane (also bitplane(i))");
        c->add_option("--block-words", o.block_words, "Bit-plane block parameter i")
            ->check(CLI::Range(1u, BitPlaneRank::kMaxBlockWords));
    };
    auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "RNG seed (falls back to DEGEN_SEED, then 1)"); };

    auto* build = app.add_subcommand("build", "Build a structure and write its container");
    build->add_option("input", o.input, "Degenerate string file")->required();
    build->add_option("-o,--output", o.output, "Container path")->required();
    add_format(build);
    add_structure(build);

    auto* verify = app.add_subcommand("verify", "Compare a structure with the brute-force oracle");
    verify->add_option("input", o.input, "Degenerate string file")->required();
    verify->add_option("--container", o.container, "Verify this container instead of a fresh build");
    verify->add_option("--queries", o.verify_queries, "Random queries per kind")->check(CLI::PositiveNumber);
    verify->add_flag("--exhaustive", o.exhaustive, "Check every in-range query");
    add_format(verify);
    add_structure(verify);
    add_seed(verify);

    auto* bench_cmd = app.add_subcommand("bench", "Time random subset queries");
    bench_cmd->add_option("input", o.input, "Degenerate string file or container");
    bench_cmd->add_option("--generate", o.generate_n, "Benchmark a generated string of this many sets");
    bench_cmd->add_option("--sigma", o.sigma, "Alphabet size for --generate");
    bench_cmd->add_option("--profile", o.profile, "Generator profile for --generate");
    bench_cmd->add_option("--queries", o.queries, "Queries per repeat")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--repeats", o.repeats, "Timed repeats")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--query-kind", o.query_kind, "rank or select")->check(CLI::IsMember({"rank", "select"}));
    bench_cmd->add_flag("--csv", o.csv, "Print a CSV header and row");
    add_format(bench_cmd);
    add_structure(bench_cmd);
    add_seed(bench_cmd);

    auto* lb = app.add_subcommand("lowerbound", "Counting lower bound for size N over sigma symbols");
    lb->add_option("N", o.big_n, "Total set size N")->required();
    lb->add_option("sigma", o.sigma, "Alphabet size")->required();

    auto* gen = app.add_subcommand("gen", "Generate a random degenerate string");
    gen->add_option("--n", o.n, "Number of sets")->required();
    gen->add_option("--sigma", o.sigma, "Alphabet size");
    gen->add_option("--profile", o.profile, "genomic-like or uniform:w0,w1,... (weights by set size)");
    gen->add_option("-o,--output", o.output, "Output path (stdout when omitted)");
    add_format(gen);
    add_seed(gen);

    auto* stats = app.add_subcommand("stats", "Print n, N, n0, sigma, set sizes and entropy");
    stats->add_option("input", o.input, "Degenerate string file")->required();
    add_format(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) return cmd_build(o);
        if (*verify) return cmd_verify(o);
        if (*bench_cmd) return cmd_bench(o);
        if (*lb) return cmd_lowerbound(o);
        if (*gen) return cmd_gen(o);
        if (*stats) return cmd_stats(o);
    } catch (const Error& e) {
        std::fprintf(stderr, "degen: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "degen: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
