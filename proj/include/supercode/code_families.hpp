#pragma once

#include <cstddef>

#include "supercode/block_code.hpp"

namespace supercode {

struct CyclicSpec {
    std::size_t n = 0;
    Gf2Poly g;
};

// H = (1-column | I_{n-1}).
LinearCode repetition(std::size_t n);
// H = (1 1 ... 1).
LinearCode parity_check(std::size_t n);
// Column j (1-based) of H is j in binary, most significant bit in row 0.
LinearCode hamming(std::size_t m);

// G rows are x^i g for i < k = n - deg g.
LinearCode cyclic_from_poly(const CyclicSpec& spec);
// (x^n - 1) / g
Gf2Poly parity_poly(const CyclicSpec& spec);
// Staircase of reversed h coefficients, (n - deg h) x n.
BitMatrix parity_matrix_from_h(std::size_t n, const Gf2Poly& h);

}  // namespace supercode
