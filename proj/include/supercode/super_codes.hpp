#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "supercode/block_code.hpp"
#include "supercode/code_families.hpp"

namespace supercode {

// Segmented word [x1 | x2 | ... | xn].
struct SuperCodeword {
    std::vector<BitVector> segments;

    std::size_t total_length() const;
    std::string to_string() const;
    static SuperCodeword parse(std::string_view text);
    friend bool operator==(const SuperCodeword&, const SuperCodeword&) = default;
};

// The absent-cell token used between '|' separators.
inline constexpr std::string_view kAbsentToken = "\xC2\xB7";

// "101|·|11" -> {101, nullopt, 11}. Empty segments and stray characters throw.
std::vector<std::optional<BitVector>> parse_segments(std::string_view text);
std::string format_segments(const std::vector<std::optional<BitVector>>& segments);

struct SuperDecodeResult {
    SuperCodeword codeword;
    SuperCodeword error;
};

// Components share one check-symbol count.
class SuperRowCode {
public:
    const std::vector<LinearCode>& components() const { return c_; }
    std::size_t size() const { return c_.size(); }
    std::size_t check_symbols() const { return c_.front().checks(); }

private:
    explicit SuperRowCode(std::vector<LinearCode> c) : c_(std::move(c)) {}
    friend SuperRowCode row_new(std::vector<LinearCode> codes);
    std::vector<LinearCode> c_;
};

// Components share one length.
class SuperColumnCode {
public:
    const std::vector<LinearCode>& components() const { return c_; }
    std::size_t size() const { return c_.size(); }
    std::size_t length() const { return c_.front().n(); }

private:
    explicit SuperColumnCode(std::vector<LinearCode> c) : c_(std::move(c)) {}
    friend SuperColumnCode col_new(std::vector<LinearCode> codes);
    std::vector<LinearCode> c_;
};

SuperRowCode row_new(std::vector<LinearCode> codes);
SuperColumnCode col_new(std::vector<LinearCode> codes);

// sum of k_i; the code has 2^that members
std::size_t log2_cardinality(const SuperRowCode& rc);
std::size_t log2_cardinality(const SuperColumnCode& cc);
std::uint64_t cardinality(const SuperRowCode& rc);
std::uint64_t cardinality(const SuperColumnCode& cc);

SuperCodeword row_encode(const SuperRowCode& rc, const std::vector<BitVector>& messages);
std::vector<Syndrome> row_syndrome(const SuperRowCode& rc, const SuperCodeword& y);
bool row_contains(const SuperRowCode& rc, const SuperCodeword& y);
SuperDecodeResult row_decode(const SuperRowCode& rc, const SuperCodeword& y);

SuperCodeword col_encode(const SuperColumnCode& cc, const std::vector<BitVector>& messages);
std::vector<Syndrome> col_syndrome(const SuperColumnCode& cc, const SuperCodeword& y);
bool col_contains(const SuperColumnCode& cc, const SuperCodeword& y);
SuperDecodeResult col_decode(const SuperColumnCode& cc, const SuperCodeword& y);

std::size_t super_distance(const SuperCodeword& x, const SuperCodeword& y);
std::size_t super_weight(const SuperCodeword& x);
// Sum of the component minimum distances.
std::size_t super_min_distance(const SuperRowCode& rc);
std::size_t super_min_distance(const SuperColumnCode& cc);

// Needs n_i = 2 k_i for every component and one common length.
SuperRowCode row_dual(const SuperRowCode& rc);

struct SuperGeneratorResult {
    std::optional<SuperMatrix> generator;  // [G1 | ... | Gn]
    std::string reason;                    // set when generator is empty
    bool uniform_width = false;            // all n_i equal as well
    bool defined() const { return generator.has_value(); }
};

SuperGeneratorResult row_generator(const SuperRowCode& rc);
SuperMatrix row_parity(const SuperRowCode& rc);  // [H1 | ... | Hn]

// Standard forms stacked: [G1; ...; Gn].
SuperMatrix col_generator(const SuperColumnCode& cc);
SuperMatrix col_parity(const SuperColumnCode& cc);  // [H1; ...; Hn]

struct RepetitionFamily {
    std::size_t count = 0;
    std::size_t length = 0;
};
struct ParityFamily {
    std::vector<std::size_t> lengths;
};
struct HammingFamily {
    std::vector<std::size_t> orders;
};
struct CyclicFamily {
    std::vector<CyclicSpec> specs;
};
using FamilyParams = std::variant<RepetitionFamily, ParityFamily, HammingFamily, CyclicFamily>;

SuperRowCode row_family(const FamilyParams& params);
SuperColumnCode col_family(const FamilyParams& params);

Rational super_transmission_rate(const SuperRowCode& rc);
Rational super_transmission_rate(const SuperColumnCode& cc);

}  // namespace supercode
