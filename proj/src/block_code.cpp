#include "supercode/block_code.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <optional>

namespace supercode {

struct LinearCode::Cache {
    std::once_flag words_once;
    std::vector<BitVector> words;
    std::once_flag cosets_once;
    std::optional<CosetTable> cosets;
    std::once_flag dist_once;
    std::size_t dist = 0;
};

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw ConstraintError("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return g ? Rational{num / g, den / g} : Rational{0, 1};
}

CosetTable::CosetTable(std::size_t checks, std::vector<BitVector> leaders)
    : checks_(checks), leaders_(std::move(leaders)) {}

const BitVector& CosetTable::leader(const Syndrome& s) const {
    if (s.size() != checks_)
        throw DimensionError("syndrome of length " + std::to_string(s.size()) + ", expected " +
                             std::to_string(checks_));
    return leaders_[s.to_u64()];
}

std::vector<std::pair<Syndrome, BitVector>> CosetTable::entries() const {
    std::vector<std::pair<Syndrome, BitVector>> out;
    out.reserve(leaders_.size());
    for (std::uint64_t i = 0; i < leaders_.size(); ++i) out.emplace_back(BitVector::from_u64(i, checks_), leaders_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

LinearCode::LinearCode(BitMatrix h, BitMatrix g)
    : n_(h.cols()), k_(g.rows()), h_(std::move(h)), g_(std::move(g)), cache_(std::make_shared<Cache>()) {
    if (g_.cols() != n_) throw DimensionError("generator and parity-check widths differ");
    if (h_.rows() + g_.rows() != n_)
        throw ConstraintError("parity-check rank " + std::to_string(h_.rows()) + " and dimension " +
                              std::to_string(g_.rows()) + " do not sum to length " + std::to_string(n_));
    if (!mat_mul(g_, transpose(h_)).is_zero()) throw ConstraintError("G H^T is not zero");
}

LinearCode LinearCode::from_parity(const BitMatrix& h) {
    if (h.empty()) throw DimensionError("parity-check matrix is empty");
    if (h.cols() < h.rows())
        throw DimensionError("parity-check matrix has more rows (" + std::to_string(h.rows()) + ") than columns (" +
                             std::to_string(h.cols()) + ")");
    BitMatrix hi = independent_rows(h);
    BitMatrix g = null_space(hi, PivotOrder::right_to_left);
    return LinearCode(std::move(hi), std::move(g));
}

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    if (g.cols() == 0) throw DimensionError("generator matrix has no columns");
    if (rank(g) != g.rows()) throw ConstraintError("generator rows are linearly dependent");
    BitMatrix h = null_space(g, PivotOrder::left_to_right);
    return LinearCode(std::move(h), g);
}

void LinearCode::check_length(const BitVector& y, const char* what) const {
    if (y.size() != n_)
        throw DimensionError(std::string(what) + ": word of length " + std::to_string(y.size()) +
                             ", code length " + std::to_string(n_));
}

BitVector LinearCode::encode(const BitVector& message) const {
    if (message.size() != k_)
        throw DimensionError("encode: message of length " + std::to_string(message.size()) + ", code dimension " +
                             std::to_string(k_));
    return vec_mat(message, g_);
}

Syndrome LinearCode::syndrome(const BitVector& y) const {
    check_length(y, "syndrome");
    return mat_vec(h_, y);
}

void LinearCode::for_each_codeword(const std::function<void(const BitVector&)>& fn) const {
    if (k_ > kMaxEnumerableDimension)
        throw CapacityError("codeword enumeration limited to k <= " + std::to_string(kMaxEnumerableDimension) +
                            ", got k = " + std::to_string(k_));
    // Gray-code walk: one row XOR per step
    BitVector w(n_);
    fn(w);
    const std::uint64_t total = std::uint64_t{1} << k_;
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= g_.row(static_cast<std::size_t>(std::countr_zero(i)));
        fn(w);
    }
}

const std::vector<BitVector>& LinearCode::codewords() const {
    if (k_ > kMaxEnumerableDimension)
        throw CapacityError("codeword enumeration limited to k <= " + std::to_string(kMaxEnumerableDimension));
    std::call_once(cache_->words_once, [this] {
        std::vector<BitVector> words;
        words.reserve(std::size_t{1} << k_);
        for_each_codeword([&](const BitVector& w) { words.push_back(w); });
        std::sort(words.begin(), words.end());
        cache_->words = std::move(words);
    });
    return cache_->words;
}

std::size_t LinearCode::min_distance() const {
    if (k_ == 0) throw ConstraintError("the zero code has no nonzero codeword");
    if (k_ > kMaxEnumerableDimension)
        throw CapacityError("minimum distance needs enumeration of 2^" + std::to_string(k_) + " codewords");
    std::call_once(cache_->dist_once, [this] {
        std::size_t best = n_;
        bool first = true;
        for_each_codeword([&](const BitVector& w) {
            if (first) {  // the zero word comes first
                first = false;
                return;
            }
            best = std::min(best, w.weight());
        });
        cache_->dist = best;
    });
    return cache_->dist;
}

std::size_t LinearCode::error_capability() const { return (min_distance() - 1) / 2; }

const CosetTable& LinearCode::coset_table() const {
    const std::size_t m = checks();
    if (m > kMaxCosetChecks)
        throw CapacityError("coset table limited to n - k <= " + std::to_string(kMaxCosetChecks) + ", got " +
                            std::to_string(m));
    std::call_once(cache_->cosets_once, [this, m] {
        const std::uint64_t total = std::uint64_t{1} << m;
        std::vector<std::uint64_t> col(n_);
        for (std::size_t j = 0; j < n_; ++j) col[j] = h_.column(j).to_u64();
        std::vector<BitVector> leaders(total);
        std::vector<bool> seen(total, false);
        std::uint64_t filled = 0;
        // Patterns by increasing weight; within a weight, supports in
        // lexicographic index order. First pattern per syndrome wins.
        std::vector<std::size_t> pos;
        std::function<void(std::size_t, std::size_t, std::uint64_t)> walk =
            [&](std::size_t start, std::size_t left, std::uint64_t s) {
                if (filled == total) return;
                if (left == 0) {
                    if (!seen[s]) {
                        seen[s] = true;
                        BitVector e(n_);
                        for (auto p : pos) e.set(p);
                        leaders[s] = std::move(e);
                        ++filled;
                    }
                    return;
                }
                for (std::size_t j = start; j + left <= n_ && filled < total; ++j) {
                    pos.push_back(j);
                    walk(j + 1, left - 1, s ^ col[j]);
                    pos.pop_back();
                }
            };
        for (std::size_t w = 0; w <= n_ && filled < total; ++w) walk(0, w, 0);
        cache_->cosets.emplace(m, std::move(leaders));
    });
    return *cache_->cosets;
}

DecodeResult LinearCode::decode(const BitVector& y) const {
    const Syndrome s = syndrome(y);
    const BitVector& e = coset_table().leader(s);
    return {y ^ e, e};
}

LinearCode LinearCode::dual() const { return LinearCode(g_, h_); }

bool LinearCode::is_cyclic() const {
    for (const auto& r : g_.row_list())
        if (!contains(r.cyclic_shift())) return false;
    return true;
}

bool LinearCode::same_code(const LinearCode& other) const {
    if (n_ != other.n_ || k_ != other.k_) return false;
    for (const auto& r : other.g_.row_list())
        if (!contains(r)) return false;
    return true;
}

StandardForm standardize(const LinearCode& c) {
    const std::size_t n = c.n(), k = c.k();
    Echelon e = row_reduce(c.parity(), PivotOrder::right_to_left);
    for (auto p : e.pivots)
        if (p < k)
            throw ConstraintError("parity-check matrix cannot be brought to (A, I) without column swaps");
    std::vector<std::pair<std::size_t, BitVector>> rows;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) rows.emplace_back(e.pivots[i], e.reduced.row(i));
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    BitMatrix h(0, n);
    for (auto& [p, r] : rows) h.append_row(std::move(r));
    BitMatrix g = null_space(h, PivotOrder::right_to_left);
    return {std::move(h), std::move(g)};
}

bool corrects_and_detects(std::size_t d, std::size_t t, std::size_t s) { return 2 * t + s + 1 <= d; }

}  // namespace supercode
