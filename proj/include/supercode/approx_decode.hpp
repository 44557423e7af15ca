#pragma once

#include <optional>
#include <vector>

#include "supercode/block_code.hpp"

namespace supercode {

class Basis {
public:
    explicit Basis(std::vector<BitVector> vectors);  // throws on dependence or ragged lengths
    static Basis rows_of(const BitMatrix& m) { return Basis(m.row_list()); }

    const std::vector<BitVector>& vectors() const { return v_; }
    std::size_t size() const { return v_.size(); }

private:
    std::vector<BitVector> v_;
};

bool pseudo_inner(const BitVector& x, const BitVector& y);

// sum_k <beta, a_k> a_k; nullopt when that sum vanishes for a nonzero beta.
std::optional<BitVector> pseudo_best_approx(const BitVector& beta, const Basis& basis);

// Codewords pass through. Otherwise approximate over the rows of G, then over
// G with row i replaced by row i + row (i+1 mod k) for i = 0, 1, ...
BitVector approx_decode(const LinearCode& c, const BitVector& y);

}  // namespace supercode
