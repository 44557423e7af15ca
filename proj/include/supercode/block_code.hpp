#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "supercode/gf2.hpp"

namespace supercode {

inline constexpr std::size_t kMaxEnumerableDimension = 24;
inline constexpr std::size_t kMaxCosetChecks = 20;

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// H y^T, length n - k.
using Syndrome = BitVector;

class CosetTable {
public:
    CosetTable(std::size_t checks, std::vector<BitVector> leaders);

    const BitVector& leader(const Syndrome& s) const;
    std::size_t size() const { return leaders_.size(); }
    std::size_t checks() const { return checks_; }
    // (syndrome, leader) pairs in increasing syndrome order
    std::vector<std::pair<Syndrome, BitVector>> entries() const;

private:
    std::size_t checks_;
    std::vector<BitVector> leaders_;  // indexed by Syndrome::to_u64()
};

struct DecodeResult {
    BitVector codeword;
    BitVector error;
};

class LinearCode {
public:
    static LinearCode from_parity(const BitMatrix& h);
    static LinearCode from_generator(const BitMatrix& g);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t checks() const { return n_ - k_; }
    const BitMatrix& parity() const { return h_; }
    const BitMatrix& generator() const { return g_; }

    BitVector encode(const BitVector& message) const;
    Syndrome syndrome(const BitVector& y) const;
    bool contains(const BitVector& y) const { return syndrome(y).is_zero(); }

    // All 2^k codewords, sorted.
    const std::vector<BitVector>& codewords() const;
    void for_each_codeword(const std::function<void(const BitVector&)>& fn) const;

    std::size_t min_distance() const;
    std::size_t error_capability() const;
    const CosetTable& coset_table() const;
    DecodeResult decode(const BitVector& y) const;

    LinearCode dual() const;
    bool is_cyclic() const;
    Rational transmission_rate() const { return Rational::make(k_, n_); }

    // Same set of codewords (matrices may differ).
    bool same_code(const LinearCode& other) const;

private:
    LinearCode(BitMatrix h, BitMatrix g);
    void check_length(const BitVector& y, const char* what) const;

    struct Cache;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    BitMatrix h_;
    BitMatrix g_;
    std::shared_ptr<Cache> cache_;
};

struct StandardForm {
    BitMatrix h;  // (A, I_{n-k})
    BitMatrix g;  // (I_k, A^T)
};

StandardForm standardize(const LinearCode& c);

// A code of minimum distance d corrects t and detects s further errors.
bool corrects_and_detects(std::size_t d, std::size_t t, std::size_t s);

}  // namespace supercode
