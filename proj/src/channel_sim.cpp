#include "supercode/channel_sim.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace supercode {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    state += kGolden;
    return finalize(state);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = finalize(master + kGolden);
    std::uint64_t k = 1;
    for (auto p : parts) h = finalize(h ^ finalize(p + kGolden * ++k));
    return h;
}

BitVector bsc_corrupt(Xoshiro256& rng, double p, const BitVector& x) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConstraintError("flip probability " + std::to_string(p) + " outside [0, 1]");
    BitVector y = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (rng.uniform() < p) y.flip(i);
    return y;
}

BitVector bsc_corrupt(const ChannelConfig& cfg, const BitVector& x) {
    Xoshiro256 rng(cfg.seed);
    return bsc_corrupt(rng, cfg.flip_probability, x);
}

BitVector inject_errors(const BitVector& x, const std::vector<std::size_t>& positions) {
    BitVector y = x;
    std::vector<bool> used(x.size(), false);
    for (auto p : positions) {
        if (p >= x.size())
            throw DimensionError("error position " + std::to_string(p) + " outside word of length " +
                                 std::to_string(x.size()));
        if (used[p]) throw ConstraintError("error position " + std::to_string(p) + " listed twice");
        used[p] = true;
        y.flip(p);
    }
    return y;
}

namespace {

GridCodeword corrupt_grid(const GridCodeword& x, double p, std::uint64_t seed, std::uint64_t trial,
                          std::uint64_t copy) {
    GridCodeword y = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (auto& w = y.at(i, j)) {
                Xoshiro256 rng(mix_seed(seed, {trial, i, j, copy}));
                w = bsc_corrupt(rng, p, *w);
            }
    return y;
}

std::uint64_t grid_bit_errors(const GridCodeword& a, const GridCodeword& b) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) && b.at(i, j)) e += distance(*a.at(i, j), *b.at(i, j));
    return e;
}

struct Context {
    const GridCode& g;
    const GridCodeword& sent;
    Strategy strategy;
    ChannelConfig cfg;
    BitVector vote_target;  // majority_vote only
};

void one_trial(const Context& cx, std::uint64_t t, TrialReport& r) {
    const double p = cx.cfg.flip_probability;
    ++r.trials;
    switch (cx.strategy) {
        case Strategy::per_cell_decode: {
            const GridCodeword y = corrupt_grid(cx.sent, p, cx.cfg.seed, t, 0);
            if (y != cx.sent && grid_contains(cx.g, y)) ++r.undetected_error;
            const GridCodeword out = grid_decode(cx.g, y).codeword;
            if (out == cx.sent) ++r.decode_success;
            r.residual_bit_errors += grid_bit_errors(out, cx.sent);
            break;
        }
        case Strategy::majority_vote: {
            const GridCodeword y = corrupt_grid(cx.sent, p, cx.cfg.seed, t, 0);
            if (y != cx.sent && grid_contains(cx.g, y)) ++r.undetected_error;
            const BitVector v = majority_vote(cx.g, y);
            if (v == cx.vote_target) ++r.decode_success;
            r.residual_bit_errors += distance(v, cx.vote_target);
            break;
        }
        case Strategy::simultaneous: {
            const GridCodeword a = corrupt_grid(cx.sent, p, cx.cfg.seed, t, 0);
            const GridCodeword b = corrupt_grid(cx.sent, p, cx.cfg.seed, t, 1);
            const ReconcileReport rec = simultaneous_reconcile(cx.g, to_row_stream(a), to_col_stream(b));
            if (rec.grid != cx.sent && grid_contains(cx.g, rec.grid)) ++r.undetected_error;
            const GridCodeword out = grid_decode(cx.g, rec.grid).codeword;
            if (out == cx.sent) ++r.decode_success;
            r.residual_bit_errors += grid_bit_errors(out, cx.sent);
            break;
        }
    }
}

}  // namespace

TrialReport run_trial(const GridCode& g, const GridCodeword& sent, Strategy strategy, const ChannelConfig& cfg,
                      std::uint64_t trials, unsigned threads) {
    const double p = cfg.flip_probability;
    if (!(p >= 0.0 && p <= 1.0)) throw ConstraintError("flip probability " + std::to_string(p) + " outside [0, 1]");
    if (!grid_contains(g, sent)) throw ConstraintError("sent grid is not a member of the grid code");
    Context cx{g, sent, strategy, cfg, {}};
    if (strategy == Strategy::majority_vote) {
        if (!g.is_uniform()) throw ConstraintError("majority vote needs a uniform grid");
        const BitVector* first = nullptr;
        for (std::size_t i = 0; i < sent.rows(); ++i)
            for (std::size_t j = 0; j < sent.cols(); ++j)
                if (const auto& w = sent.at(i, j)) {
                    if (first && *w != *first)
                        throw ConstraintError("majority vote needs the same word in every present cell");
                    if (!first) first = &*w;
                }
        if (!first) throw ConstraintError("sent grid has no present cells");
        cx.vote_target = *first;
    }

    threads = std::max(1u, threads);
    if (threads == 1 || trials < 2) {
        TrialReport r;
        for (std::uint64_t t = 0; t < trials; ++t) one_trial(cx, t, r);
        return r;
    }
    std::vector<TrialReport> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += threads) one_trial(cx, t, parts[w]);
        });
    for (auto& th : pool) th.join();
    TrialReport r;
    for (const auto& q : parts) {
        r.trials += q.trials;
        r.decode_success += q.decode_success;
        r.undetected_error += q.undetected_error;
        r.residual_bit_errors += q.residual_bit_errors;
    }
    return r;
}

}  // namespace supercode
