#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "supercode/grid_code.hpp"

namespace supercode {

// xoshiro256** (Blackman and Vigna), state filled by splitmix64.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();
    // 53-bit uniform in [0, 1)
    double uniform();

private:
    std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t& state);
// Order-sensitive hash of a master seed and stream coordinates.
std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

struct ChannelConfig {
    double flip_probability = 0.0;
    std::uint64_t seed = 0;
};

BitVector bsc_corrupt(const ChannelConfig& cfg, const BitVector& x);
BitVector bsc_corrupt(Xoshiro256& rng, double p, const BitVector& x);
BitVector inject_errors(const BitVector& x, const std::vector<std::size_t>& positions);

enum class Strategy { per_cell_decode, majority_vote, simultaneous };

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t decode_success = 0;
    // received data passed every syndrome check yet differed from what was sent
    std::uint64_t undetected_error = 0;
    // bits still wrong after decoding, summed over trials
    std::uint64_t residual_bit_errors = 0;

    std::uint64_t failures() const { return trials - decode_success; }
    friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

// Trial t corrupts cell (i, j) of copy c with the stream mix_seed(seed, {t, i, j, c}).
// simultaneous sends a row-stream copy and a column-stream copy.
TrialReport run_trial(const GridCode& g, const GridCodeword& sent, Strategy strategy, const ChannelConfig& cfg,
                      std::uint64_t trials, unsigned threads = 1);

}  // namespace supercode
