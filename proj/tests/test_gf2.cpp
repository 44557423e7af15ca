#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "supercode/gf2.hpp"

using namespace supercode;

namespace {

using Dense = std::vector<std::vector<int>>;

Dense to_dense(const BitMatrix& m) {
    Dense d(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j);
    return d;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
    return m;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

// Rank as log2 of the size of the row span, by enumeration.
std::size_t span_rank(const BitMatrix& m) {
    std::set<std::string> span;
    const std::size_t r = m.rows();
    for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
        BitVector acc(m.cols());
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) acc ^= m.row(i);
        span.insert(acc.to_string());
    }
    std::size_t k = 0;
    while ((1ULL << k) < span.size()) ++k;
    return k;
}

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t max_deg) {
    std::vector<bool> c(rng() % (max_deg + 1) + 1);
    for (auto&& b : c) b = rng() & 1;
    return Gf2Poly(c);
}

// Schoolbook division on coefficient vectors.
std::pair<std::vector<int>, std::vector<int>> long_divide(std::vector<int> num, const std::vector<int>& den) {
    std::size_t dd = den.size() - 1;
    while (!den[dd]) --dd;
    std::vector<int> q(num.size(), 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        if (!num[i]) continue;
        q[i - dd] = 1;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] ^= den[j];
    }
    return {q, num};
}

Gf2Poly from_ints(const std::vector<int>& v) {
    std::vector<bool> b(v.begin(), v.end());
    return Gf2Poly(b);
}

const std::vector<std::string> kPar73 = {"0101000", "1010100", "0010010", "0010001"};
const std::vector<std::string> kGen73 = {"1000100", "0101000", "0010111"};

}  // namespace

TEST_CASE("bit vector printing and indexing") {
    const auto v = BitVector::from_string("1011000");
    CHECK(v.size() == 7);
    CHECK(v[0]);
    CHECK_FALSE(v[1]);
    CHECK(v.to_string() == "1011000");
    CHECK(BitVector::from_string("").empty());
    CHECK_THROWS_AS(BitVector::from_string("10a1"), ParseError);
    CHECK_THROWS_AS(v.get(7), std::out_of_range);
}

TEST_CASE("bit vectors longer than a word") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 60 + rng() % 100;
        auto a = random_vector(rng, n), b = random_vector(rng, n);
        std::size_t naive = 0;
        for (std::size_t i = 0; i < n; ++i) naive += a[i] != b[i];
        CHECK(distance(a, b) == naive);
        CHECK(BitVector::from_string(a.to_string()) == a);
        CHECK((~a).weight() == n - a.weight());
        auto cut = rng() % n;
        CHECK(a.slice(0, cut).concat(a.slice(cut, n - cut)) == a);
    }
}

TEST_CASE("ordering is length first then printed string") {
    CHECK(BitVector::from_string("111") < BitVector::from_string("0000"));
    CHECK(BitVector::from_string("0111") < BitVector::from_string("1000"));
    CHECK(BitVector::from_string("0100") > BitVector::from_string("0011"));
}

TEST_CASE("weight and distance of printed words") {
    const auto x = BitVector::from_string("1011110");
    const auto y = BitVector::from_string("0111101");
    CHECK(distance(x, y) == 4);
    CHECK(weight(x) == 5);
    CHECK(distance(x, x) == 0);
    CHECK_THROWS_AS(distance(x, BitVector::from_string("101")), DimensionError);
}

TEST_CASE("cyclic shift moves the last symbol to the front") {
    CHECK(BitVector::from_string("1011000").cyclic_shift().to_string() == "0101100");
    CHECK(BitVector::from_string("0000001").cyclic_shift().to_string() == "1000000");
}

TEST_CASE("mat_mul of the generator and parity check transpose vanishes") {
    const auto g = BitMatrix::from_strings(kGen73);
    const auto h = BitMatrix::from_strings(kPar73);
    const auto p = mat_mul(g, transpose(h));
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 4);
    CHECK(p.is_zero());
    CHECK(mat_mul(BitMatrix::identity(3), g) == g);
    CHECK_THROWS_AS(mat_mul(g, g), DimensionError);
}

TEST_CASE("mat_mul matches a triple-loop oracle") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = 1 + rng() % 5, m = 1 + rng() % 70, c = 1 + rng() % 5;
        const auto a = random_matrix(rng, r, m), b = random_matrix(rng, m, c);
        const auto da = to_dense(a), db = to_dense(b), dp = to_dense(mat_mul(a, b));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                int s = 0;
                for (std::size_t k = 0; k < m; ++k) s ^= da[i][k] & db[k][j];
                CHECK(dp[i][j] == s);
            }
    }
}

TEST_CASE("mat_mul is associative and distributes over addition") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const std::size_t p = 1 + rng() % 6, q = 1 + rng() % 6, r = 1 + rng() % 6, s = 1 + rng() % 6;
        const auto a = random_matrix(rng, p, q), b = random_matrix(rng, q, r), c = random_matrix(rng, r, s);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
        const auto b2 = random_matrix(rng, q, r);
        BitMatrix sum(q, r);
        for (std::size_t i = 0; i < q; ++i) sum.row(i) = b.row(i) ^ b2.row(i);
        const auto lhs = mat_mul(a, sum);
        const auto x = mat_mul(a, b), y = mat_mul(a, b2);
        for (std::size_t i = 0; i < p; ++i) CHECK(lhs.row(i) == (x.row(i) ^ y.row(i)));
    }
}

TEST_CASE("mat_vec gives syndromes") {
    const auto h = BitMatrix::from_strings(kPar73);
    CHECK(mat_vec(h, BitVector::from_string("1101100")).is_zero());
    CHECK(mat_vec(h, BitVector(7)).is_zero());
    const auto h5 = BitMatrix::from_strings({"10110", "11001"});
    const auto y = BitVector::from_string("11110");
    const auto s = mat_vec(h5, y);
    CHECK_FALSE(s.is_zero());
    for (std::size_t i = 0; i < 2; ++i) CHECK(s[i] == dot(h5.row(i), y));
    CHECK_THROWS_AS(mat_vec(h, BitVector(6)), DimensionError);
    CHECK(vec_mat(BitVector::from_string("110"), BitMatrix::from_strings(kGen73)).to_string() == "1101100");
}

TEST_CASE("transpose swaps indices") {
    const auto a = BitMatrix::from_strings({"110", "001"});
    const auto t = transpose(a);
    CHECK(t.to_strings() == std::vector<std::string>{"10", "10", "01"});
    CHECK(transpose(t) == a);
    CHECK(transpose(BitMatrix::identity(5)) == BitMatrix::identity(5));
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::identity(4)) == 4);
    const auto g = BitMatrix::from_strings({"1011000", "0101100", "0010110", "0001011"});
    CHECK(rank(g) == 4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 8);
        CHECK(rank(a) == span_rank(a));
        CHECK(rank(a) == rank(transpose(a)));
    }
}

TEST_CASE("null space vectors are annihilated and independent") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 9);
        for (auto order : {PivotOrder::left_to_right, PivotOrder::right_to_left}) {
            const auto ns = null_space(a, order);
            CHECK(ns.rows() == a.cols() - rank(a));
            if (ns.rows() == 0) continue;
            CHECK(mat_mul(a, transpose(ns)).is_zero());
            CHECK(rank(ns) == ns.rows());
        }
    }
}

TEST_CASE("independent rows keep the first of each dependent run") {
    const auto a = BitMatrix::from_strings({"110", "011", "101", "001"});
    CHECK(independent_rows(a).to_strings() == std::vector<std::string>{"110", "011", "001"});
}

TEST_CASE("polynomial notation") {
    const auto g = Gf2Poly::from_string("1011");
    CHECK(g.degree() == 3);
    CHECK(g.to_algebraic() == "x^3 + x^2 + 1");
    CHECK(Gf2Poly::from_string("10110").to_string() == "1011");
    CHECK(Gf2Poly::from_string("000").is_zero());
    CHECK_THROWS(Gf2Poly().degree());
}

TEST_CASE("poly_divide known quotients") {
    const auto r = poly_divide(Gf2Poly::x_n_minus_1(7), Gf2Poly::from_string("1011"));
    CHECK(r.quotient == Gf2Poly::from_exponents({4, 3, 2, 0}));
    CHECK(r.remainder.is_zero());

    const auto p = Gf2Poly::from_string("110101");
    const auto one = poly_divide(p, Gf2Poly::monomial(0));
    CHECK(one.quotient == p);
    CHECK(one.remainder.is_zero());

    const auto [q, rem] = long_divide({1, 0, 0, 0, 0, 1}, {1, 0, 1});
    const auto d = poly_divide(Gf2Poly::x_n_minus_1(5), Gf2Poly::from_exponents({2, 0}));
    CHECK(d.quotient == from_ints(q));
    CHECK(d.remainder == from_ints(rem));
    CHECK(d.remainder == Gf2Poly::from_exponents({1, 0}));

    CHECK_THROWS_AS(poly_divide(p, Gf2Poly()), ConstraintError);
}

TEST_CASE("poly_divide reconstructs the dividend") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const auto num = random_poly(rng, 16);
        auto den = random_poly(rng, 16);
        if (den.is_zero()) den = Gf2Poly::monomial(rng() % 5);
        const auto d = poly_divide(num, den);
        CHECK(d.quotient * den + d.remainder == num);
        if (!d.remainder.is_zero()) CHECK(d.remainder.degree() < den.degree());
    }
}

namespace {

// Entries reduced mod 2.
const std::vector<std::string> kBlockB = {"01110", "00011", "11100", "00011", "10101", "00000", "10111"};
const std::vector<std::string> kA1113T = {"0010101", "1010000", "1010101", "1101001", "0101101"};
const std::vector<std::string> kBlockA = {"01001", "01010", "11101", "01010", "00101"};

}  // namespace

TEST_CASE("super_transpose of a partitioned matrix") {
    const SuperMatrix a(BitMatrix::from_strings(kBlockB), {3, 5}, {3});
    const auto t = super_transpose(a);
    CHECK(t.body().to_strings() == kA1113T);
    CHECK(t.row_cuts() == std::vector<std::size_t>{3});
    CHECK(t.col_cuts() == std::vector<std::size_t>{3, 5});
    CHECK(t.block(1, 0) == transpose(a.block(0, 1)));
    CHECK(super_equal(super_transpose(t), a, true));

    const SuperMatrix plain(BitMatrix::from_strings(kBlockA), {}, {});
    CHECK(super_transpose(plain).body() == transpose(plain.body()));
}

TEST_CASE("super_transpose is an involution on random partitions") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = 2 + rng() % 6, c = 2 + rng() % 6;
        std::vector<std::size_t> rc, cc;
        for (std::size_t i = 1; i < r; ++i)
            if (rng() & 1) rc.push_back(i);
        for (std::size_t j = 1; j < c; ++j)
            if (rng() & 1) cc.push_back(j);
        const SuperMatrix m(random_matrix(rng, r, c), rc, cc);
        CHECK(super_equal(super_transpose(super_transpose(m)), m, true));
    }
}

TEST_CASE("super_equal modes") {
    const auto body = BitMatrix::from_strings(kBlockA);
    const SuperMatrix a(body, {3}, {3});
    const SuperMatrix b(body, {4}, {4});
    CHECK(super_equal(a, b, false));
    CHECK_FALSE(super_equal(a, b, true));
    CHECK(super_equal(a, a, false));
    CHECK(super_equal(a, a, true));
}

TEST_CASE("supermatrix cuts are validated") {
    const auto body = BitMatrix::from_strings(kBlockA);
    CHECK_THROWS_AS(SuperMatrix(body, {0}, {}), ConstraintError);
    CHECK_THROWS_AS(SuperMatrix(body, {}, {5}), ConstraintError);
    CHECK_THROWS_AS(SuperMatrix(body, {3, 2}, {}), ConstraintError);
}

TEST_CASE("supermatrix display") {
    const SuperMatrix a(BitMatrix::from_strings({"101", "011"}), {1}, {2});
    const auto s = a.to_display();
    CHECK(s.find('|') != std::string::npos);
    CHECK(s.find("10|1") != std::string::npos);
}
