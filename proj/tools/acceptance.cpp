// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "supercode/approx_decode.hpp"
#include "supercode/channel_sim.hpp"
#include "supercode/code_families.hpp"
#include "supercode/grid_code.hpp"
#include "supercode/spec_io.hpp"
#include "supercode/super_codes.hpp"

using namespace supercode;

namespace {

BitVector bv(const std::string& s) { return BitVector::from_string(s); }

LinearCode from_h(const std::vector<std::string>& rows) { return LinearCode::from_parity(BitMatrix::from_strings(rows)); }
LinearCode from_g(const std::vector<std::string>& rows) {
    return LinearCode::from_generator(BitMatrix::from_strings(rows));
}

std::set<std::string> word_set(const std::vector<BitVector>& ws) {
    std::set<std::string> s;
    for (const auto& w : ws) s.insert(w.to_string());
    return s;
}

// Collects failed checks for one criterion.
struct Check {
    std::vector<std::string> failed;
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) failed.push_back(what);
    }
};

int g_failures = 0;

void report(int id, const char* title, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failed.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string line = (c.failed.empty() ? "PASS " : "FAIL ") + std::to_string(id) + " " + title;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
    line += buf;
    for (const auto& n : c.notes) line += "; " + n;
    for (const auto& f : c.failed) line += "; failed: " + f;
    std::puts(line.c_str());
    if (!c.failed.empty()) ++g_failures;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t r) {
    for (;;) {
        BitMatrix h(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) h.set(i, j, rng() & 1);
        if (rank(h) == r) return LinearCode::from_parity(h);
    }
}

// Every error pattern of weight <= t, by increasing weight.
void for_each_pattern(std::size_t n, std::size_t t, const std::function<void(const BitVector&)>& f) {
    std::vector<std::size_t> pos;
    const std::function<void(std::size_t)> rec = [&](std::size_t start) {
        BitVector e(n);
        for (auto p : pos) e.set(p, true);
        f(e);
        if (pos.size() == t) return;
        for (std::size_t i = start; i < n; ++i) {
            pos.push_back(i);
            rec(i + 1);
            pos.pop_back();
        }
    };
    rec(0);
}

void criterion1(Check& c) {
    const auto code = from_g({"1000100", "0101000", "0010111"});
    const std::set<std::string> printed = {"0000000", "1000100", "0101000", "0010111",
                                           "1101100", "1010011", "0111111", "1111011"};
    std::set<std::string> got;
    for (std::uint64_t m = 0; m < 8; ++m) got.insert(code.encode(BitVector::from_u64(m, 3)).to_string());
    c.expect(got == printed, "8 encoded messages");
    const auto h = BitMatrix::from_strings({"0101000", "1010100", "0010010", "0010001"});
    c.expect(mat_mul(code.generator(), transpose(h)).is_zero(), "G H^T = 0");
}

void criterion2(Check& c) {
    const auto code = from_h({"10110", "11001"});
    const auto d = code.decode(bv("11110"));
    c.expect(d.codeword.to_string() == "11010", "codeword 11010");
    c.expect(d.error.to_string() == "00100", "error 00100");
}

void criterion3(Check& c) {
    const CyclicSpec spec{7, Gf2Poly::from_exponents({3, 2, 0})};
    const auto code = cyclic_from_poly(spec);
    const std::set<std::string> listed = {"0000000", "1011000", "0101100", "0010110", "0001011", "1110100",
                                          "1001110", "1010011", "0111010", "0100111", "0011101", "1100010",
                                          "1111111", "1000101", "0110001", "1101001"};
    c.expect(word_set(code.codewords()) == listed, "16 codewords");
    c.expect(parity_poly(spec) == Gf2Poly::from_exponents({4, 3, 2, 0}), "h(x) = x^4+x^3+x^2+1");
    const auto h = parity_matrix_from_h(7, parity_poly(spec));
    bool all = true;
    for (const auto& w : code.codewords()) all = all && mat_vec(h, w).is_zero();
    c.expect(all, "H annihilates all 16 words");
    c.expect(code.is_cyclic(), "is_cyclic");
}

void criterion4(Check& c) {
    const auto a = pseudo_best_approx(bv("11111111"),
                                      Basis({bv("01001001"), bv("11000010"), bv("11100101"), bv("11111000")}));
    c.expect(a && a->to_string() == "10010110", "approximation 10010110");
    const auto b = pseudo_best_approx(bv("1111"), Basis({bv("0101"), bv("1011")}));
    c.expect(b && b->to_string() == "1011", "approximation 1011");
    c.expect(pseudo_inner(bv("1011"), bv("1111")) == true, "<1011,1111> = 1");
    c.expect(pseudo_inner(bv("1111"), bv("1111")) == false, "<1111,1111> = 0");
}

void criterion5(Check& c) {
    const auto row_4_5 = row_new({from_h({"1010", "1101"}), from_h({"10110", "01101"})});
    const auto d = row_decode(row_4_5, SuperCodeword::parse("1111|11111"));
    c.expect(d.codeword.to_string() == "1011|11011", "decode 1111|11111");
    c.expect(cardinality(row_4_5) == 32, "|C_s| = 32");

    const auto mixed_row = row_new({from_h({"011100", "101010", "110001"}), from_h({"0001100", "0110010", "1101001"}),
                               from_h({"11000100", "00110010", "10101001"})});
    c.expect(cardinality(mixed_row) == 8 * 16 * 32, "|C_s| = 8*16*32");
    c.expect(super_transmission_rate(mixed_row) == Rational::make(12, 21), "rate 12/21");

    const auto mixed_column = col_new({parity_check(7), repetition(7), hamming(3),
                                from_h({"1001000", "0110100", "1010010", "1110001"})});
    c.expect(super_transmission_rate(mixed_column) == Rational::make(1, 2), "rate 1/2");

    const std::vector<std::vector<std::string>> h_blocks = {{"01101000", "10010100", "11100010", "10000001"},
                                                        {"11001000", "11100100", "01100010", "01010001"},
                                                        {"01111000", "00100100", "00110010", "10100001"}};
    std::vector<LinearCode> comps;
    std::size_t brute = 0;
    std::string parts;
    for (const auto& rows : h_blocks) {
        comps.push_back(from_h(rows));
        // lightest nonzero word of the null space, straight from H
        const auto h = BitMatrix::from_strings(rows);
        std::size_t best = h.cols();
        for (std::uint64_t v = 1; v < (1ULL << h.cols()); ++v) {
            const auto y = BitVector::from_u64(v, h.cols());
            if (mat_vec(h, y).is_zero()) best = std::min(best, y.weight());
        }
        brute += best;
        parts += (parts.empty() ? "" : "+") + std::to_string(best);
    }
    const auto ds = super_min_distance(row_new(comps));
    c.notes.push_back("d_min^s from printed H blocks = " + parts + " = " + std::to_string(ds) +
                      " (printed value 7; printed subcode lists disagree with their H blocks)");
    c.expect(ds == brute, "d_min^s matches the null-space oracle");
}

void criterion6(Check& c) {
    c.expect(log2_cardinality(col_family(HammingFamily{{3, 3, 3}})) == 12, "|C_s| = 2^12");

    const auto rep = col_family(RepetitionFamily{3, 6});
    const std::set<std::string> listed = {
        "000000|000000|000000", "111111|111111|111111", "000000|000000|111111", "000000|111111|111111",
        "111111|000000|000000", "111111|111111|000000", "111111|000000|111111", "000000|111111|000000"};
    std::set<std::string> got;
    for (const auto& a : rep.components()[0].codewords())
        for (const auto& b : rep.components()[1].codewords())
            for (const auto& d : rep.components()[2].codewords()) {
                const SuperCodeword w{{a, b, d}};
                if (col_contains(rep, w)) got.insert(w.to_string());
            }
    c.expect(got == listed, "repetition column words");

    const auto cc = col_new({from_h({"001001", "010010", "100100"}),
                             from_h({"110000", "101000", "100100", "100010", "100001"}),
                             from_h({"000011", "000110", "001100", "011000", "110000"})});
    c.expect(cardinality(cc) == 32, "|C_s| = 32");
    const std::set<std::string> rep6 = {"000000", "111111"};
    c.expect(word_set(cc.components()[1].codewords()) == rep6, "C2 = {000000, 111111}");
    c.expect(word_set(cc.components()[2].codewords()) == rep6, "C3 = {000000, 111111}");
}

void criterion7(Check& c) {
    const auto g = grid_new({{from_h({"001100", "011010", "111001"}), from_h({"1001100", "0101010", "1110001"})},
                             {from_h({"101000", "110100", "010010", "100001"}),
                              from_h({"1111000", "0110100", "1010010", "1100001"})},
                             {from_h({"100100", "110010", "101001"}), from_h({"1101100", "0110010", "1111001"})}});
    const std::vector<std::string> rows = {"100001|0100101", "111011|1010101", "111100|1111100"};
    const std::vector<std::string> cols = {"100001|111011|111100", "0100101|1010101|1111100"};
    const auto x = from_row_stream(g, rows);
    c.expect(to_row_stream(x) == rows, "super row strings");
    c.expect(to_col_stream(x) == cols, "super column strings");
    c.expect(from_col_stream(g, cols) == x, "column stream parses to the same grid");

    const auto grid_of = [](const std::vector<std::vector<std::string>>& w) {
        GridCodeword out(w.size(), w[0].size());
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w[i].size(); ++j) out.at(i, j) = bv(w[i][j]);
        return out;
    };
    const auto a = grid_of({{"110", "111101"}, {"111", "011101"}, {"001", "100010"}, {"010", "011001"}});
    const auto b = grid_of({{"010", "110001"}, {"101", "100011"}, {"011", "101010"}, {"110", "010101"}});
    c.expect(grid_dot(a, b).to_strings() == std::vector<std::string>{"11", "01", "10", "10"}, "dot product grid");

    const auto g48 = uniform_grid(from_g({"1011", "0101"}), 2, 2);
    const auto o = orthogonal_grid(g48);
    const std::set<std::string> perp = {"0000", "1101", "0111", "1010"};
    bool cells = o.rows() == 2 && o.cols() == 2;
    for (std::size_t i = 0; cells && i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) cells = cells && word_set(o.cell(i, j).codewords()) == perp;
    c.expect(cells, "orthogonal grid cells");
    bool vanish = true;
    for (const auto& u : g48.cell(0, 0).codewords())
        for (const auto& v : o.cell(0, 0).codewords())
            vanish = vanish && grid_dot(GridCodeword::filled(2, 2, u), GridCodeword::filled(2, 2, v)).is_zero();
    c.expect(vanish, "cross dot products vanish");
}

void criterion8(Check& c) {
    std::mt19937_64 rng(8);
    std::size_t violations = 0, decodes = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 9, r = 1 + rng() % (n - 1);
        const auto code = random_code(rng, n, r);

        const std::size_t cap = code.error_capability();
        for (const auto& x : code.codewords())
            for_each_pattern(n, cap, [&](const BitVector& e) {
                ++decodes;
                if (code.decode(x ^ e).codeword != x) ++violations;
            });

        const auto dual = code.dual();
        if (dual.k() != n - code.k()) ++violations;
        if (!dual.dual().same_code(code)) ++violations;

        // super row code: components share the check count r
        std::vector<LinearCode> comps{code};
        for (std::size_t extra = rng() % 3; extra > 0; --extra) comps.push_back(random_code(rng, r + 1 + rng() % 6, r));
        const auto rc = row_new(comps);
        for (int s = 0; s < 20; ++s) {
            SuperCodeword y;
            bool each = true;
            for (const auto& comp : comps) {
                const auto& ws = comp.codewords();
                y.segments.push_back(rng() & 1 ? ws[rng() % ws.size()] : random_vector(rng, comp.n()));
                each = each && comp.contains(y.segments.back());
            }
            if (row_contains(rc, y) != each) ++violations;
        }

        // grid streams: column j has length len[j], row i has check count chk[i]
        const std::size_t m = 1 + rng() % 3, w = 1 + rng() % 3;
        std::vector<std::size_t> len(w), chk(m);
        for (auto& l : len) l = 4 + rng() % 5;
        for (auto& k : chk) k = 1 + rng() % 3;
        std::vector<std::vector<LinearCode>> cells(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < w; ++j) cells[i].push_back(random_code(rng, len[j], chk[i]));
        const auto g = grid_new(cells);
        GridCodeword x(m, w);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < w; ++j) x.at(i, j) = random_vector(rng, len[j]);
        if (from_row_stream(g, to_row_stream(x)) != x) ++violations;
        if (from_col_stream(g, to_col_stream(x)) != x) ++violations;
    }
    c.notes.push_back(std::to_string(violations) + " violations over 200 random codes, " +
                      std::to_string(decodes) + " decodes");
    c.expect(violations == 0, "zero violations");
}

void criterion9(Check& c) {
    const double p = 0.01;
    const double analytic = 1.0 - std::pow(1 - p, 7) - 7 * p * std::pow(1 - p, 6);
    const auto h1 = uniform_grid(hamming(3), 1, 1);
    const auto r1 = run_trial(h1, GridCodeword::filled(1, 1, BitVector(7)), Strategy::per_cell_decode, {p, 2024},
                              100000, 1);
    const double rate = double(r1.failures()) / double(r1.trials);
    char buf[160];
    std::snprintf(buf, sizeof buf, "Hamming(3) failure rate %.5f vs analytic %.5f", rate, analytic);
    c.notes.push_back(buf);
    c.expect(std::fabs(rate - analytic) <= 0.2 * analytic, "failure rate within 20%");

    const auto g = uniform_grid(hamming(3), 16, 17);
    const auto sent = GridCodeword::filled(16, 17, bv("1011010"));
    const auto r2 = run_trial(g, sent, Strategy::majority_vote, {0.05, 2024}, 1000, 1);
    std::snprintf(buf, sizeof buf, "16x17 majority vote recovered %llu of %llu",
                  static_cast<unsigned long long>(r2.decode_success), static_cast<unsigned long long>(r2.trials));
    c.notes.push_back(buf);
    c.expect(r2.decode_success * 100 >= 99 * r2.trials, "recovery >= 99%");
}

}  // namespace

int main() {
    report(1, "encoding golden set", criterion1);
    report(2, "coset decoding", criterion2);
    report(3, "cyclic machinery", criterion3);
    report(4, "pseudo best approximation", criterion4);
    report(5, "super row codes", criterion5);
    report(6, "super column codes", criterion6);
    report(7, "grid codes", criterion7);
    report(8, "property suites", criterion8);
    report(9, "Monte-Carlo", criterion9);
    return g_failures ? 1 : 0;
}
