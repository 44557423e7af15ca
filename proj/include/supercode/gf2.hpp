#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercode/errors.hpp"

namespace supercode {

// Dense GF(2) vector. Bit 0 is the leftmost printed symbol.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    static BitVector from_string(std::string_view s);
    static BitVector unit(std::size_t len, std::size_t i);
    static BitVector ones(std::size_t len);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const;
    bool operator[](std::size_t i) const { return get(i); }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i);

    std::size_t weight() const;
    bool is_zero() const;

    BitVector& operator^=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    BitVector operator~() const;

    // Shorter vectors order first; equal lengths compare as printed strings.
    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

    BitVector concat(const BitVector& tail) const;
    BitVector slice(std::size_t pos, std::size_t count) const;
    // Right cyclic shift: (a0..a_{n-1}) -> (a_{n-1}, a0, .., a_{n-2}).
    BitVector cyclic_shift() const;

    // Bit i of the result is bit i of the vector; requires size() <= 64.
    std::uint64_t to_u64() const;
    static BitVector from_u64(std::uint64_t v, std::size_t len);

    std::string to_string() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

bool dot(const BitVector& x, const BitVector& y);
std::size_t weight(const BitVector& x);
std::size_t distance(const BitVector& x, const BitVector& y);

// Row-major dense GF(2) matrix stored as a list of row vectors.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty() || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v = true);
    const BitVector& row(std::size_t r) const;
    BitVector& row(std::size_t r);
    BitVector column(std::size_t c) const;
    const std::vector<BitVector>& row_list() const { return rows_; }

    void append_row(BitVector r);
    BitMatrix hconcat(const BitMatrix& right) const;
    BitMatrix vconcat(const BitMatrix& below) const;
    BitMatrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

    bool is_zero() const;
    std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& a, const BitVector& x);  // a * x^T
BitVector vec_mat(const BitVector& x, const BitMatrix& a);  // x * a
BitMatrix transpose(const BitMatrix& a);
std::size_t rank(const BitMatrix& a);

enum class PivotOrder { left_to_right, right_to_left };

struct Echelon {
    BitMatrix reduced;                // rank x cols, fully reduced
    std::vector<std::size_t> pivots;  // pivot column of each reduced row
};

Echelon row_reduce(const BitMatrix& a, PivotOrder order = PivotOrder::left_to_right);

// Basis of {x : a x^T = 0}, one vector per free column in ascending order.
// Each vector has a 1 on its own free column and 0 on the other free columns.
BitMatrix null_space(const BitMatrix& a, PivotOrder order);

// The rows of a that are independent of the rows before them.
BitMatrix independent_rows(const BitMatrix& a);

// Polynomial over GF(2); coefficient i is that of x^i. Empty means zero.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::vector<bool> coeffs);

    static Gf2Poly from_string(std::string_view s);
    static Gf2Poly from_exponents(const std::vector<std::size_t>& exps);
    static Gf2Poly monomial(std::size_t e);
    static Gf2Poly x_n_minus_1(std::size_t n) { return from_exponents({n, 0}); }

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const;  // throws on zero
    bool coeff(std::size_t i) const { return i < c_.size() && c_[i]; }
    const std::vector<bool>& coeffs() const { return c_; }

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

    std::string to_string() const;     // "1011" for x^3+x^2+1
    std::string to_algebraic() const;  // "x^3 + x^2 + 1"

private:
    void trim();
    std::vector<bool> c_;
};

struct PolyDivision {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

PolyDivision poly_divide(const Gf2Poly& num, const Gf2Poly& den);

// A matrix with interior partition lines. Cuts are row/column indices in
// (0, dim) where a line is drawn before that index.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(BitMatrix body, std::vector<std::size_t> row_cuts, std::vector<std::size_t> col_cuts);

    const BitMatrix& body() const { return body_; }
    const std::vector<std::size_t>& row_cuts() const { return row_cuts_; }
    const std::vector<std::size_t>& col_cuts() const { return col_cuts_; }

    std::size_t block_rows() const { return row_cuts_.size() + 1; }
    std::size_t block_cols() const { return col_cuts_.size() + 1; }
    BitMatrix block(std::size_t bi, std::size_t bj) const;

    // '|' between column blocks, a dash row between row blocks.
    std::string to_display() const;

private:
    BitMatrix body_;
    std::vector<std::size_t> row_cuts_;
    std::vector<std::size_t> col_cuts_;
};

SuperMatrix super_transpose(const SuperMatrix& m);
bool super_equal(const SuperMatrix& a, const SuperMatrix& b, bool structural);

}  // namespace supercode

template <>
struct std::hash<supercode::BitVector> {
    std::size_t operator()(const supercode::BitVector& v) const noexcept;
};
