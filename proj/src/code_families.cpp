#include "supercode/code_families.hpp"

#include <string>

namespace supercode {

LinearCode repetition(std::size_t n) {
    if (n < 2) throw ConstraintError("repetition code needs n >= 2, got " + std::to_string(n));
    BitMatrix h(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h.set(i, 0);
        h.set(i, i + 1);
    }
    return LinearCode::from_parity(h);
}

LinearCode parity_check(std::size_t n) {
    if (n < 2) throw ConstraintError("parity-check code needs n >= 2, got " + std::to_string(n));
    return LinearCode::from_parity(BitMatrix::from_rows({BitVector::ones(n)}));
}

LinearCode hamming(std::size_t m) {
    if (m < 2) throw ConstraintError("Hamming code needs m >= 2, got " + std::to_string(m));
    if (m > 16) throw CapacityError("Hamming order too large: " + std::to_string(m));
    const std::size_t n = (std::size_t{1} << m) - 1;
    BitMatrix h(m, n);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t r = 0; r < m; ++r)
            if ((j >> (m - 1 - r)) & 1u) h.set(r, j - 1);
    return LinearCode::from_parity(h);
}

namespace {

std::size_t checked_dimension(const CyclicSpec& spec) {
    if (spec.g.is_zero()) throw ConstraintError("generator polynomial is zero");
    const std::size_t deg = spec.g.degree();
    if (deg >= spec.n)
        throw ConstraintError("deg g = " + std::to_string(deg) + " leaves no message symbols for n = " +
                              std::to_string(spec.n));
    if (!poly_divide(Gf2Poly::x_n_minus_1(spec.n), spec.g).remainder.is_zero())
        throw ConstraintError("g = " + spec.g.to_algebraic() + " does not divide x^" + std::to_string(spec.n) +
                              " - 1");
    return spec.n - deg;
}

}  // namespace

LinearCode cyclic_from_poly(const CyclicSpec& spec) {
    const std::size_t k = checked_dimension(spec);
    const std::size_t deg = spec.g.degree();
    BitMatrix g(k, spec.n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= deg; ++j)
            if (spec.g.coeff(j)) g.set(i, i + j);
    return LinearCode::from_generator(g);
}

Gf2Poly parity_poly(const CyclicSpec& spec) {
    checked_dimension(spec);
    return poly_divide(Gf2Poly::x_n_minus_1(spec.n), spec.g).quotient;
}

BitMatrix parity_matrix_from_h(std::size_t n, const Gf2Poly& h) {
    if (h.is_zero()) throw ConstraintError("parity polynomial is zero");
    const std::size_t k = h.degree();
    if (k >= n)
        throw ConstraintError("deg h = " + std::to_string(k) + " must be below n = " + std::to_string(n));
    const std::size_t rows = n - k;
    BitMatrix out(rows, n);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t start = rows - 1 - i;
        for (std::size_t j = 0; j <= k; ++j)
            if (h.coeff(k - j)) out.set(i, start + j);
    }
    return out;
}

}  // namespace supercode
