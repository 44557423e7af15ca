#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "supercode/channel_sim.hpp"
#include "supercode/code_families.hpp"

using namespace supercode;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }

// 1 - P(at most t errors in n bits)
double block_failure(std::size_t n, std::size_t t, double p) {
    double ok = 0;
    for (std::size_t w = 0; w <= t; ++w) {
        double c = 1;
        for (std::size_t i = 0; i < w; ++i) c = c * double(n - i) / double(i + 1);
        ok += c * std::pow(p, double(w)) * std::pow(1 - p, double(n - w));
    }
    return 1 - ok;
}

}  // namespace

TEST_CASE("splitmix64 and xoshiro256** reference outputs") {
    std::uint64_t st = 1234567;
    CHECK(splitmix64(st) == 6457827717110365317ULL);
    CHECK(splitmix64(st) == 3203168211198807973ULL);
    CHECK(splitmix64(st) == 9817491932198370423ULL);

    Xoshiro256 a(0);
    CHECK(a.next() == 11091344671253066420ULL);
    CHECK(a.next() == 13793997310169335082ULL);
    CHECK(a.next() == 1900383378846508768ULL);
    CHECK(a.next() == 7684712102626143532ULL);
    Xoshiro256 b(42);
    CHECK(b.next() == 1546998764402558742ULL);

    Xoshiro256 u(7);
    for (int i = 0; i < 10000; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("mix_seed separates streams") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 20; ++t)
        for (std::uint64_t i = 0; i < 5; ++i)
            for (std::uint64_t j = 0; j < 5; ++j)
                for (std::uint64_t c = 0; c < 2; ++c) seen.insert(mix_seed(9, {t, i, j, c}));
    CHECK(seen.size() == 20 * 5 * 5 * 2);
    CHECK(mix_seed(9, {1, 2}) != mix_seed(9, {2, 1}));
    CHECK(mix_seed(9, {1, 2}) == mix_seed(9, {1, 2}));
    CHECK(mix_seed(9, {1}) != mix_seed(10, {1}));
}

TEST_CASE("binary symmetric channel") {
    const auto x = bv("1011001110001011");
    CHECK(bsc_corrupt({0.0, 5}, x) == x);
    auto comp = x;
    for (std::size_t i = 0; i < comp.size(); ++i) comp.flip(i);
    CHECK(bsc_corrupt({1.0, 5}, x) == comp);
    CHECK(bsc_corrupt({0.3, 5}, x) == bsc_corrupt({0.3, 5}, x));
    CHECK_THROWS_AS(bsc_corrupt({1.5, 5}, x), ConstraintError);
    CHECK_THROWS_AS(bsc_corrupt({-0.1, 5}, x), ConstraintError);
    CHECK_THROWS_AS(bsc_corrupt({std::nan(""), 5}, x), ConstraintError);
}

TEST_CASE("flip rate matches p") {
    for (double p : {0.01, 0.05, 0.3}) {
        Xoshiro256 rng(mix_seed(3, {static_cast<std::uint64_t>(p * 1000)}));
        std::uint64_t flips = 0;
        const BitVector zero(1000);
        for (int t = 0; t < 1000; ++t) flips += bsc_corrupt(rng, p, zero).weight();
        const double rate = double(flips) / 1e6;
        CHECK(std::abs(rate - p) <= 0.01 * p + 4 * std::sqrt(p * (1 - p) / 1e6));
    }
}

TEST_CASE("inject errors") {
    const auto x1 = bv("1101010");
    CHECK(inject_errors(x1, {1, 2, 3, 4}).to_string() == "1010110");
    const auto x = bv("110101011110000");
    CHECK(inject_errors(x, {}) == x);
    CHECK(distance(inject_errors(x, {0, 5, 14}), x) == 3);
    CHECK(inject_errors(inject_errors(x, {2, 9}), {2, 9}) == x);
    CHECK_THROWS_AS(inject_errors(x, {15}), DimensionError);
    CHECK_THROWS_AS(inject_errors(x, {3, 3}), ConstraintError);
}

TEST_CASE("run_trial is deterministic and thread independent") {
    const auto g = uniform_grid(hamming(3), 3, 4);
    const auto sent = GridCodeword::filled(3, 4, bv("1010101"));
    for (auto s : {Strategy::per_cell_decode, Strategy::majority_vote, Strategy::simultaneous}) {
        const auto a = run_trial(g, sent, s, {0.05, 11}, 300);
        CHECK(a == run_trial(g, sent, s, {0.05, 11}, 300));
        CHECK(a == run_trial(g, sent, s, {0.05, 11}, 300, 3));
        CHECK(a.trials == 300);
        CHECK(a.decode_success <= a.trials);
    }
    CHECK_FALSE(run_trial(g, sent, Strategy::per_cell_decode, {0.05, 11}, 300) ==
                run_trial(g, sent, Strategy::per_cell_decode, {0.05, 12}, 300));
}

TEST_CASE("run_trial edge probabilities") {
    const auto g = uniform_grid(hamming(3), 2, 2);
    const auto sent = GridCodeword::filled(2, 2, bv("1110000"));
    const auto clean = run_trial(g, sent, Strategy::per_cell_decode, {0.0, 1}, 50);
    CHECK(clean.decode_success == 50);
    CHECK(clean.residual_bit_errors == 0);
    CHECK(clean.undetected_error == 0);
    // all ones flips 1110000 to 0001111, a member
    const auto all = run_trial(g, sent, Strategy::per_cell_decode, {1.0, 1}, 10);
    CHECK(all.decode_success == 0);
    CHECK(all.undetected_error == 10);
    CHECK(all.residual_bit_errors == 10 * 4 * 7);
}

TEST_CASE("run_trial validation") {
    const auto g = uniform_grid(hamming(3), 2, 2);
    CHECK_THROWS_AS(run_trial(g, GridCodeword::filled(2, 2, bv("1000000")), Strategy::per_cell_decode, {0.1, 1}, 5),
                    ConstraintError);
    auto mixed = GridCodeword::filled(2, 2, bv("1110000"));
    mixed.at(1, 1) = bv("0000000");
    CHECK_THROWS_AS(run_trial(g, mixed, Strategy::majority_vote, {0.1, 1}, 5), ConstraintError);
    CHECK_NOTHROW(run_trial(g, mixed, Strategy::per_cell_decode, {0.1, 1}, 5));
    CHECK_THROWS_AS(run_trial(g, mixed, Strategy::per_cell_decode, {2.0, 1}, 5), ConstraintError);
}

TEST_CASE("single cell failure rate follows the binomial tail") {
    const auto g = uniform_grid(hamming(3), 1, 1);
    const auto sent = GridCodeword::filled(1, 1, bv("0000000"));
    const double p = 0.05, expect = block_failure(7, 1, p);
    const std::uint64_t n = 40000;
    const auto r = run_trial(g, sent, Strategy::per_cell_decode, {p, 2}, n);
    const double rate = double(r.failures()) / double(n);
    CHECK(std::abs(rate - expect) <= 4 * std::sqrt(expect * (1 - expect) / double(n)));
}

TEST_CASE("every cell error within t is corrected") {
    std::mt19937_64 rng(51);
    const auto c = hamming(3);
    const auto g = uniform_grid(c, 3, 3);
    for (int t = 0; t < 200; ++t) {
        GridCodeword x(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) x.at(i, j) = c.codewords()[rng() % 16];
        auto y = x;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (rng() & 1) y.at(i, j) = inject_errors(*y.at(i, j), {static_cast<std::size_t>(rng() % 7)});
        CHECK(grid_decode(g, y).codeword == x);
    }
}
