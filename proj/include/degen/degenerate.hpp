#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace degen {

/// A sequence X_0..X_{n-1} of symbol sets over the alphabet [0, sigma).
///
/// Sets are stored ascending in one flat array with per-set offsets.
class DegenerateString {
public:
    DegenerateString() = default;
    explicit DegenerateString(std::uint32_t sigma) : sigma_(sigma) {}
    /// Sorts each set; throws PreconditionError on duplicates or symbols >= sigma.
    DegenerateString(std::uint32_t sigma, const std::vector<std::vector<std::uint32_t>>& sets);

    /// Appends one set (any order); same validation as the constructor.
    void push_back(std::span<const std::uint32_t> set);

    std::uint32_t sigma() const { return sigma_; }
    std::uint64_t length() const { return offsets_.size() - 1; }                 // n
    std::uint64_t total_size() const { return symbols_.size(); }                  // N
    std::uint64_t empty_sets() const { return empty_; }                           // n0

    std::span<const std::uint32_t> set(std::uint64_t i) const {
        return std::span<const std::uint32_t>(symbols_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
    }
    bool contains(std::uint64_t i, std::uint32_t c) const;

    friend bool operator==(const DegenerateString&, const DegenerateString&) = default;

private:
    std::uint32_t sigma_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<std::uint32_t> symbols_;
    std::uint64_t empty_ = 0;
};

struct DegenStats {
    std::uint64_t n = 0;
    std::uint64_t N = 0;
    std::uint64_t n0 = 0;
    std::uint32_t sigma = 0;
    std::vector<std::uint64_t> set_size_histogram;  // index = |X_i|, 0..sigma
    double empirical_entropy_bits = 0.0;             // per set, over distinct sets
};

enum class TextFormat { sets_text, dna_text };

TextFormat parse_text_format(const std::string& name);

/// sets-text: "sigma n" header, then one line of space-separated symbols per set.
/// dna-text: one line over {A,C,G,T}, each letter a singleton set, sigma = 4.
DegenerateString parse_degenerate(std::string_view text, TextFormat format);
std::string serialize_degenerate(const DegenerateString& x, TextFormat format);

DegenerateString read_degenerate_file(const std::string& path, TextFormat format);
void write_degenerate_file(const std::string& path, const DegenerateString& x, TextFormat format);

DegenStats compute_stats(const DegenerateString& x);

/// Set sizes drawn from `size_weights` (index = size, normalized internally).
struct UniformProfile {
    std::vector<double> size_weights;
};

/// sigma = 4 with P(|X|=0,1,2,3,4) = 0.01, 0.80, 0.12, 0.05, 0.02.
struct GenomicLikeProfile {};

using GeneratorProfile = std::variant<UniformProfile, GenomicLikeProfile>;

/// Deterministic for fixed arguments; symbols of a set are drawn uniformly without replacement.
DegenerateString generate(std::uint64_t seed, std::uint64_t n, std::uint32_t sigma, const GeneratorProfile& profile);

/// DNA letter codes: A=0, C=1, G=2, T=3.
char dna_letter(std::uint32_t c);

}  // namespace degen
