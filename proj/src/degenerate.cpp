#include "degen/degenerate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/random.hpp"

namespace degen {

namespace {

int dna_code(char ch) {
    switch (ch) {
        case 'A': case 'a': return 0;
        case 'C': case 'c': return 1;
        case 'G': case 'g': return 2;
        case 'T': case 't': return 3;
        default: return -1;
    }
}

std::uint64_t parse_uint(std::string_view tok, const char* what, std::uint64_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line) + ": bad " + what + " '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t p = 0;
    while (p < line.size()) {
        if (line[p] == ' ') {
            ++p;
            continue;
        }
        const std::size_t q = std::min(line.find(' ', p), line.size());
        out.push_back(line.substr(p, q - p));
        p = q;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- DegenerateString

DegenerateString::DegenerateString(std::uint32_t sigma, const std::vector<std::vector<std::uint32_t>>& sets)
    : sigma_(sigma) {
    for (const auto& s : sets) push_back(s);
}

void DegenerateString::push_back(std::span<const std::uint32_t> set) {
    const auto begin = symbols_.size();
    symbols_.insert(symbols_.end(), set.begin(), set.end());
    auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(begin);
    std::sort(first, symbols_.end());
    const bool dup = std::adjacent_find(first, symbols_.end()) != symbols_.end();
    const bool big = first != symbols_.end() && symbols_.back() >= sigma_;
    if (dup || big) {
        symbols_.resize(begin);
        throw PreconditionError(dup ? "duplicate symbol in set " + std::to_string(length())
                                    : "symbol outside alphabet in set " + std::to_string(length()));
    }
    if (set.empty()) ++empty_;
    offsets_.push_back(symbols_.size());
}

bool DegenerateString::contains(std::uint64_t i, std::uint32_t c) const {
    const auto s = set(i);
    return std::binary_search(s.begin(), s.end(), c);
}

// ---------------------------------------------------------------- text formats

TextFormat parse_text_format(const std::string& name) {
    if (name == "sets-text") return TextFormat::sets_text;
    if (name == "dna-text") return TextFormat::dna_text;
    throw ParseError("unknown format '" + name + "' (expected sets-text or dna-text)");
}

DegenerateString parse_degenerate(std::string_view text, TextFormat format) {
    if (format == TextFormat::dna_text) {
        if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
        DegenerateString x(4);
        for (std::size_t p = 0; p < text.size(); ++p) {
            const int c = dna_code(text[p]);
            if (c < 0) throw ParseError("position " + std::to_string(p) + ": not a DNA letter");
            const auto sym = static_cast<std::uint32_t>(c);
            x.push_back(std::span<const std::uint32_t>(&sym, 1));
        }
        return x;
    }

    const std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos) throw ParseError("line 1: missing header terminated by LF");
    const auto header = split_spaces(text.substr(0, eol));
    if (header.size() != 2) throw ParseError("line 1: header must be 'sigma n'");
    const std::uint64_t sigma = parse_uint(header[0], "alphabet size", 1);
    const std::uint64_t n = parse_uint(header[1], "length", 1);
    if (sigma > UINT32_MAX) throw ParseError("line 1: alphabet size too large");

    DegenerateString x(static_cast<std::uint32_t>(sigma));
    std::string_view body = text.substr(eol + 1);
    if (n == 0) {
        if (!body.empty()) throw ParseError("line 2: more set lines than declared");
        return x;
    }
    if (body.empty() || body.back() != '\n')
        throw ParseError("expected " + std::to_string(n) + " LF-terminated set lines");
    body.remove_suffix(1);

    std::vector<std::uint32_t> set;
    std::uint64_t lines = 0;
    for (std::size_t p = 0;;) {
        const std::size_t q = std::min(body.find('\n', p), body.size());
        const std::uint64_t lineno = lines + 2;
        if (lines == n) throw ParseError("line " + std::to_string(lineno) + ": more set lines than declared");
        set.clear();
        for (auto tok : split_spaces(body.substr(p, q - p))) {
            const std::uint64_t v = parse_uint(tok, "symbol", lineno);
            if (v >= sigma)
                throw ParseError("line " + std::to_string(lineno) + ": symbol " + std::to_string(v) + " >= sigma");
            set.push_back(static_cast<std::uint32_t>(v));
        }
        try {
            x.push_back(set);
        } catch (const PreconditionError&) {
            throw ParseError("line " + std::to_string(lineno) + ": duplicate symbol in set");
        }
        ++lines;
        if (q == body.size()) break;
        p = q + 1;
    }
    if (lines != n)
        throw ParseError("declared " + std::to_string(n) + " sets but found " + std::to_string(lines));
    return x;
}

std::string serialize_degenerate(const DegenerateString& x, TextFormat format) {
    std::string out;
    if (format == TextFormat::dna_text) {
        if (x.sigma() != 4) throw PreconditionError("dna-text needs sigma = 4");
        out.reserve(x.length() + 1);
        for (std::uint64_t i = 0; i < x.length(); ++i) {
            const auto s = x.set(i);
            if (s.size() != 1) throw PreconditionError("dna-text needs every set to be a singleton");
            out.push_back(dna_letter(s[0]));
        }
        out.push_back('\n');
        return out;
    }
    out = std::to_string(x.sigma()) + " " + std::to_string(x.length()) + "\n";
    for (std::uint64_t i = 0; i < x.length(); ++i) {
        bool first = true;
        for (auto c : x.set(i)) {
            if (!first) out.push_back(' ');
            out += std::to_string(c);
            first = false;
        }
        out.push_back('\n');
    }
    return out;
}

DegenerateString read_degenerate_file(const std::string& path, TextFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_degenerate(ss.str(), format);
}

void write_degenerate_file(const std::string& path, const DegenerateString& x, TextFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << serialize_degenerate(x, format);
    if (!out) throw Error("write failed for " + path);
}

char dna_letter(std::uint32_t c) { return "ACGT"[c & 3u]; }

// ---------------------------------------------------------------- stats

DegenStats compute_stats(const DegenerateString& x) {
    DegenStats st;
    st.n = x.length();
    st.N = x.total_size();
    st.n0 = x.empty_sets();
    st.sigma = x.sigma();
    st.set_size_histogram.assign(static_cast<std::size_t>(x.sigma()) + 1, 0);

    std::map<std::vector<std::uint32_t>, std::uint64_t> distinct;
    for (std::uint64_t i = 0; i < x.length(); ++i) {
        const auto s = x.set(i);
        ++st.set_size_histogram[s.size()];
        ++distinct[std::vector<std::uint32_t>(s.begin(), s.end())];
    }
    double h = 0.0;
    for (const auto& [set, count] : distinct) {
        const double p = static_cast<double>(count) / static_cast<double>(st.n);
        h -= p * std::log2(p);
    }
    st.empirical_entropy_bits = h > 0.0 ? h : 0.0;
    return st;
}

// ---------------------------------------------------------------- generators

DegenerateString generate(std::uint64_t seed, std::uint64_t n, std::uint32_t sigma, const GeneratorProfile& profile) {
    std::vector<double> weights;
    if (std::holds_alternative<GenomicLikeProfile>(profile)) {
        if (sigma != 4) throw PreconditionError("genomic-like profile is defined for sigma = 4");
        weights = {0.01, 0.80, 0.12, 0.05, 0.02};
    } else {
        weights = std::get<UniformProfile>(profile).size_weights;
    }
    if (weights.empty()) throw PreconditionError("set size distribution is empty");
    double total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) throw PreconditionError("set size weights must be finite and >= 0");
        if (weights[k] > 0.0 && k > sigma) throw PreconditionError("set size weight for a size larger than sigma");
        total += weights[k];
    }
    if (!(total > 0.0)) throw PreconditionError("set size weights sum to zero");

    std::vector<double> cdf(weights.size());
    std::partial_sum(weights.begin(), weights.end(), cdf.begin());

    Rng rng(seed);
    DegenerateString x(sigma);
    std::vector<std::uint32_t> pool(sigma);
    std::vector<std::uint32_t> set;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = rng.unit() * total;
        std::size_t k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        k = std::min(k, weights.size() - 1);
        while (weights[k] == 0.0) --k;  // u landed on a zero-width tail due to rounding
        std::iota(pool.begin(), pool.end(), 0u);
        set.clear();
        for (std::size_t t = 0; t < k; ++t) {
            const auto pick = t + rng.below(sigma - t);
            std::swap(pool[t], pool[pick]);
            set.push_back(pool[t]);
        }
        x.push_back(set);
    }
    return x;
}

}  // namespace degen
