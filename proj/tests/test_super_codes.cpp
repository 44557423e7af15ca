#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "supercode/super_codes.hpp"

using namespace supercode;

namespace {

LinearCode from_h(std::initializer_list<const char*> rows) {
    return LinearCode::from_parity(BitMatrix::from_strings(std::vector<std::string>(rows.begin(), rows.end())));
}

LinearCode from_g(std::initializer_list<const char*> rows) {
    return LinearCode::from_generator(BitMatrix::from_strings(std::vector<std::string>(rows.begin(), rows.end())));
}

SuperCodeword sw(const char* s) { return SuperCodeword::parse(s); }

// Every word of the product, in segment order.
std::set<std::string> product_words(const std::vector<LinearCode>& cs) {
    std::set<std::string> out;
    std::vector<BitVector> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cs.size()) {
            out.insert(SuperCodeword{cur}.to_string());
            return;
        }
        for (const auto& w : cs[i].codewords()) {
            cur.push_back(w);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// min over pairs differing in every segment of the summed distance
std::size_t brute_super_distance(const std::vector<LinearCode>& cs) {
    std::size_t total = 0;
    for (const auto& c : cs) {
        std::size_t best = SIZE_MAX;
        const auto& ws = c.codewords();
        for (std::size_t a = 0; a < ws.size(); ++a)
            for (std::size_t b = a + 1; b < ws.size(); ++b) best = std::min(best, distance(ws[a], ws[b]));
        total += best;
    }
    return total;
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t r) {
    BitMatrix h(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) h.set(i, j, rng() & 1);
    return LinearCode::from_parity(h);
}

const std::vector<LinearCode>& row_8_8_8() {
    static const std::vector<LinearCode> cs = {
        from_h({"01101000", "10010100", "11100010", "10000001"}),
        from_h({"11001000", "11100100", "01100010", "01010001"}),
        from_h({"01111000", "00100100", "00110010", "10100001"})};
    return cs;
}

}  // namespace

TEST_CASE("super word text round trip") {
    const auto w = sw("1011|11011");
    REQUIRE(w.segments.size() == 2);
    CHECK(w.total_length() == 9);
    CHECK(w.to_string() == "1011|11011");
    CHECK_THROWS_AS(sw("10||1"), ParseError);
    CHECK_THROWS_AS(sw("10|2"), ParseError);
    CHECK_THROWS_AS(sw(""), ParseError);
    CHECK_THROWS_AS(sw("10|\xC2\xB7"), ParseError);

    const auto segs = parse_segments("101|\xC2\xB7|11");
    REQUIRE(segs.size() == 3);
    CHECK_FALSE(segs[1].has_value());
    CHECK(format_segments(segs) == "101|\xC2\xB7|11");
}

TEST_CASE("row composition cardinality and rate") {
    const auto rc = row_new({from_h({"011100", "101010", "110001"}), from_h({"0001100", "0110010", "1101001"}),
                             from_h({"11000100", "00110010", "10101001"})});
    CHECK(rc.check_symbols() == 3);
    CHECK(cardinality(rc) == 8 * 16 * 32);
    CHECK(log2_cardinality(rc) == 12);
    CHECK(super_transmission_rate(rc) == Rational::make(12, 21));
    CHECK(product_words(rc.components()).size() == cardinality(rc));

    CHECK_THROWS_AS(row_new({}), ConstraintError);
    CHECK_THROWS_AS(row_new({hamming(3), repetition(3)}), ConstraintError);
}

TEST_CASE("row decoding of a two segment code") {
    const auto rc = row_new({from_h({"1010", "1101"}), from_h({"10110", "01101"})});
    CHECK(product_words({rc.components()[0]}) == std::set<std::string>{"0000", "1011", "0101", "1110"});
    CHECK(cardinality(rc) == 32);
    CHECK(super_min_distance(rc) == 4);
    CHECK(super_min_distance(rc) == brute_super_distance(rc.components()));

    CHECK(row_encode(rc, {BitVector::from_string("10"), BitVector::from_string("110")}).to_string() ==
          "1011|11011");
    const auto d = row_decode(rc, sw("1111|11111"));
    CHECK(d.error.to_string() == "0100|00100");
    CHECK(d.codeword.to_string() == "1011|11011");
    CHECK(row_contains(rc, d.codeword));
    CHECK_FALSE(row_contains(rc, sw("1111|11111")));

    const auto s = row_syndrome(rc, sw("1111|11111"));
    REQUIRE(s.size() == 2);
    CHECK_FALSE(s[0].is_zero());

    CHECK_THROWS_AS(row_decode(rc, sw("1111")), DimensionError);
    CHECK_THROWS_AS(row_decode(rc, sw("111|11111")), DimensionError);
    CHECK_THROWS_AS(row_encode(rc, {BitVector::from_string("1"), BitVector::from_string("110")}), DimensionError);
}

TEST_CASE("super minimum distance follows the parity blocks") {
    // the printed value 7 assumes d = 3 for the first block, which its H does not give
    const auto rc = row_new(row_8_8_8());
    CHECK(rc.components()[0].min_distance() == 2);
    CHECK(super_min_distance(rc) == 6);
    CHECK(super_min_distance(rc) == brute_super_distance(row_8_8_8()));
    CHECK(super_min_distance(row_new({hamming(3)})) == 3);
}

TEST_CASE("super distance and weight") {
    const auto x = sw("1101010|11110000|111010|111100100");
    const auto e = sw("0111100|00001100|001111|000110000");
    const auto y = sw("1010110|11111100|110101|111010100");
    CHECK(super_weight(e) == 12);
    CHECK(super_distance(x, y) == 12);
    SuperCodeword sum = x;
    for (std::size_t i = 0; i < sum.segments.size(); ++i) sum.segments[i] ^= e.segments[i];
    CHECK(sum == y);
    CHECK(super_distance(x, x) == 0);
    CHECK_THROWS_AS(super_distance(x, sw("1")), DimensionError);
}

TEST_CASE("row generator exists only for equal message counts") {
    const auto rc = row_new({from_g({"1101000", "0110100", "0011010", "0001101"}),
                             from_g({"1000101", "0100111", "0010110", "0001011"})});
    const auto g = row_generator(rc);
    REQUIRE(g.defined());
    CHECK(g.uniform_width);
    CHECK(g.generator->col_cuts() == std::vector<std::size_t>{7});
    CHECK(g.generator->block(0, 0).to_strings() ==
          std::vector<std::string>{"1101000", "0110100", "0011010", "0001101"});
    const auto& c1 = rc.components()[0];
    CHECK(c1.codewords().size() == 16);
    CHECK(c1.contains(BitVector::from_string("1111111")));
    CHECK_FALSE(c1.contains(BitVector::from_string("1111101")));
    CHECK(rc.components()[1].contains(BitVector::from_string("1111111")));

    // equal check counts with equal k force equal lengths
    const auto mixed = row_new({from_h({"1001100", "0101010", "0011001", "1111000"}),
                                from_h({"11001000", "00110100", "10010010", "11110001"})});
    CHECK_FALSE(row_generator(mixed).defined());
}

TEST_CASE("row generator undefined for mixed dimensions") {
    const auto rc = row_new({from_h({"11000", "01100"}), from_h({"110000", "011000"}), from_h({"1100", "0110"})});
    const auto r = row_generator(rc);
    CHECK_FALSE(r.defined());
    CHECK(r.reason.find("message symbols") != std::string::npos);
    CHECK(row_generator(row_new({hamming(3)})).generator->body() == hamming(3).generator());
}

TEST_CASE("row parity stacks the blocks side by side") {
    const auto rc = row_new({from_h({"1010", "1101"}), from_h({"10110", "01101"})});
    const auto h = row_parity(rc);
    CHECK(h.body().to_strings() == std::vector<std::string>{"101010110", "110101101"});
    CHECK(h.col_cuts() == std::vector<std::size_t>{4});
}

TEST_CASE("row dual") {
    const auto c = from_h({"1011", "0110"});
    const auto rc = row_new({c, c});
    const auto d = row_dual(rc);
    for (std::size_t i = 0; i < 2; ++i) {
        for (const auto& a : rc.components()[i].codewords())
            for (const auto& b : d.components()[i].codewords()) CHECK_FALSE(dot(a, b));
        CHECK(d.components()[i].k() == 2);
    }
    CHECK_THROWS_AS(row_dual(row_new({hamming(3)})), ConstraintError);
    CHECK_THROWS_AS(row_dual(row_new({parity_check(2), from_h({"1100", "0011"})})), ConstraintError);
}

TEST_CASE("row families") {
    const auto rep = row_family(RepetitionFamily{4, 6});
    const auto words = product_words(rep.components());
    CHECK(words.size() == 16);
    for (const char* w : {"000000|111111|000000|111111", "111111|111111|111111|111111",
                          "111111|000000|111111|000000", "000000|000000|000000|111111"})
        CHECK(words.count(w));
    CHECK(rep.components()[0].parity().to_strings() ==
          std::vector<std::string>{"110000", "101000", "100100", "100010", "100001"});

    CHECK(cardinality(row_family(ParityFamily{{3, 3, 3}})) == 64);
    CHECK(cardinality(row_family(ParityFamily{{4, 3}})) == 32);
    CHECK(cardinality(row_family(ParityFamily{{4, 4}})) == 64);
    CHECK(product_words(row_family(ParityFamily{{4, 3}}).components()).size() == 32);

    const auto ham = row_family(HammingFamily{{3, 3, 3}});
    CHECK(ham.size() == 3);
    CHECK(cardinality(ham) == 1ULL << 12);
    CHECK_THROWS_AS(row_family(HammingFamily{{3, 4}}), ConstraintError);

    const auto cyc = row_family(CyclicFamily{{{7, Gf2Poly::from_string("1011")}, {7, Gf2Poly::from_string("1101")}}});
    CHECK(cyc.check_symbols() == 3);
    CHECK_THROWS_AS(row_family(CyclicFamily{{{7, Gf2Poly::from_string("1011")}, {7, Gf2Poly::from_string("11")}}}),
                    ConstraintError);
}

TEST_CASE("hamming rows correct one error per segment") {
    const auto rc = row_family(HammingFamily{{3, 3}});
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        std::vector<BitVector> msgs;
        for (int i = 0; i < 2; ++i) {
            BitVector m(4);
            for (std::size_t j = 0; j < 4; ++j) m.set(j, rng() & 1);
            msgs.push_back(m);
        }
        const auto x = row_encode(rc, msgs);
        auto y = x;
        for (auto& s : y.segments) s.flip(rng() % 7);
        const auto d = row_decode(rc, y);
        CHECK(d.codeword == x);
        CHECK(super_weight(d.error) == 2);
        CHECK(row_decode(rc, x).error == SuperCodeword{{BitVector(7), BitVector(7)}});
    }
}

TEST_CASE("super membership matches componentwise membership") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + rng() % 3;
        std::vector<LinearCode> cs;
        const std::size_t parts = 1 + rng() % 3;
        for (std::size_t i = 0; i < parts; ++i) {
            auto c = random_code(rng, r + 1 + rng() % 4, r);
            if (c.checks() != r) continue;
            cs.push_back(c);
        }
        if (cs.empty()) continue;
        const auto rc = row_new(cs);
        SuperCodeword y;
        bool all = true;
        for (const auto& c : cs) {
            BitVector v(c.n());
            if (rng() & 1) {
                v = c.codewords()[rng() % c.codewords().size()];
            } else {
                for (std::size_t j = 0; j < c.n(); ++j) v.set(j, rng() & 1);
            }
            all = all && c.contains(v);
            y.segments.push_back(v);
        }
        CHECK(row_contains(rc, y) == all);
        CHECK(product_words(cs).count(y.to_string()) == (all ? 1u : 0u));
    }
}

TEST_CASE("column composition") {
    const auto cc = col_new({from_h({"0011000", "0100100", "1110010", "1000001"}), from_h({"1100010", "1101001"}),
                             from_h({"1010100", "0110010", "1111001"})});
    CHECK(cc.length() == 7);
    CHECK(cardinality(cc) == 1ULL << 12);
    CHECK(product_words(cc.components()).size() == 1ULL << 12);
    CHECK_THROWS_AS(col_new({repetition(6), repetition(7)}), ConstraintError);
    CHECK_THROWS_AS(col_new({}), ConstraintError);
}

TEST_CASE("column generator in standard form") {
    const auto cc = col_new({from_h({"1010100", "0101010", "1110001"}), from_h({"0110100", "1001010", "1010001"}),
                             from_h({"1001100", "1110010", "1001001"}), from_h({"0110100", "1111010", "1011001"})});
    const auto g = col_generator(cc);
    CHECK(g.row_cuts() == std::vector<std::size_t>{4, 8, 12});
    CHECK(g.body().to_strings() ==
          std::vector<std::string>{"1000101", "0100011", "0010101", "0001010", "1000011", "0100100", "0010101",
                                   "0001010", "1000111", "0100010", "0010010", "0001101", "1000011", "0100110",
                                   "0010111", "0001011"});
    const auto h = col_parity(cc);
    CHECK(h.row_cuts() == std::vector<std::size_t>{3, 6, 9});
    for (std::size_t i = 0; i < 4; ++i) CHECK(mat_mul(g.block(i, 0), transpose(h.block(i, 0))).is_zero());

    const auto cc3 = col_new({from_h({"1011000", "1100100", "0100010", "1010001"}),
                              from_h({"0101000", "1000100", "0010010", "1010001"}),
                              from_h({"1011000", "1100100", "1010010", "1100001"}),
                              from_h({"1001000", "0100100", "1110010", "1010001"})});
    CHECK(col_generator(cc3).body().to_strings() ==
          std::vector<std::string>{"1001101", "0100110", "0011001", "1000101", "0101000", "0010011", "1001111",
                                   "0100101", "0011010", "1001011", "0100110", "0010011"});

    CHECK_THROWS_AS(col_generator(col_new({from_h({"1000", "0100"})})), ConstraintError);
}

TEST_CASE("column families") {
    const auto rep = col_family(RepetitionFamily{3, 6});
    const std::set<std::string> listed = {
        "000000|000000|000000", "111111|111111|111111", "000000|000000|111111", "000000|111111|111111",
        "111111|000000|000000", "111111|111111|000000", "111111|000000|111111", "000000|111111|000000"};
    CHECK(product_words(rep.components()) == listed);

    CHECK(cardinality(col_family(ParityFamily{{5, 5, 5, 5}})) == 16 * 16 * 16 * 16);
    CHECK(cardinality(col_family(ParityFamily{{4, 4, 4}})) == 512);
    CHECK_THROWS_AS(col_family(ParityFamily{{4, 5}}), ConstraintError);
    CHECK(cardinality(col_family(HammingFamily{{3, 3, 3}})) == 1ULL << 12);

    const auto two = col_new({hamming(3), from_h({"1110100", "0111010", "0011101"})});
    CHECK(cardinality(two) == 256);
    CHECK_FALSE(two.components()[0].same_code(two.components()[1]));
}

TEST_CASE("mixed column rate") {
    const auto cc = col_new({parity_check(7), repetition(7), hamming(3),
                             from_h({"1001000", "0110100", "1010010", "1110001"})});
    CHECK(super_transmission_rate(cc) == Rational::make(14, 28));
    CHECK(log2_cardinality(cc) == 14);
}

TEST_CASE("cyclic column code") {
    const auto cc = col_new({from_h({"001001", "010010", "100100"}),
                             from_h({"110000", "101000", "100100", "100010", "100001"}),
                             from_h({"000011", "000110", "001100", "011000", "110000"})});
    CHECK(cardinality(cc) == 32);
    CHECK(product_words({cc.components()[0]}) ==
          std::set<std::string>{"000000", "100100", "010010", "001001", "110110", "011011", "101101", "111111"});
    for (std::size_t i = 1; i < 3; ++i)
        CHECK(product_words({cc.components()[i]}) == std::set<std::string>{"000000", "111111"});
    for (const auto& c : cc.components()) CHECK(c.is_cyclic());
}

TEST_CASE("column encode and decode") {
    const auto cc = col_family(HammingFamily{{3, 3}});
    const auto x = col_encode(cc, {BitVector::from_string("1011"), BitVector::from_string("0110")});
    CHECK(col_contains(cc, x));
    auto y = x;
    y.segments[0].flip(2);
    y.segments[1].flip(6);
    CHECK_FALSE(col_contains(cc, y));
    const auto d = col_decode(cc, y);
    CHECK(d.codeword == x);
    CHECK(d.error.to_string() == "0010000|0000001");
    CHECK(col_syndrome(cc, y).size() == 2);
    CHECK_THROWS_AS(col_decode(cc, sw("0000000")), DimensionError);
}
