#include "supercode/approx_decode.hpp"

#include <string>

namespace supercode {

Basis::Basis(std::vector<BitVector> vectors) : v_(std::move(vectors)) {
    for (const auto& x : v_)
        if (x.size() != v_.front().size()) throw DimensionError("basis vectors of different lengths");
    if (!v_.empty() && rank(BitMatrix::from_rows(v_)) != v_.size())
        throw ConstraintError("basis vectors are linearly dependent");
}

bool pseudo_inner(const BitVector& x, const BitVector& y) { return dot(x, y); }

std::optional<BitVector> pseudo_best_approx(const BitVector& beta, const Basis& basis) {
    BitVector sum(beta.size());
    for (const auto& a : basis.vectors()) {
        if (a.size() != beta.size())
            throw DimensionError("basis vector of length " + std::to_string(a.size()) + " against word of length " +
                                 std::to_string(beta.size()));
        if (dot(beta, a)) sum ^= a;
    }
    if (sum.is_zero() && !beta.is_zero()) return std::nullopt;
    return sum;
}

BitVector approx_decode(const LinearCode& c, const BitVector& y) {
    if (c.contains(y)) return y;
    const auto& rows = c.generator().row_list();
    if (auto x = pseudo_best_approx(y, Basis(rows))) return *x;
    const std::size_t k = rows.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<BitVector> alt = rows;
        alt[i] ^= rows[(i + 1) % k];
        if (alt[i].is_zero()) continue;  // k = 1 folds a row onto itself
        if (auto x = pseudo_best_approx(y, Basis(std::move(alt)))) return *x;
    }
    throw ConstraintError("pseudo best approximation vanishes for every basis tried");
}

}  // namespace supercode
