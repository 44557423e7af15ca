#include "supercode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace supercode {

namespace {

constexpr std::size_t W = 64;

std::size_t word_count(std::size_t len) { return (len + W - 1) / W; }

void require_same(const BitVector& a, const BitVector& b, const char* what) {
    if (a.size() != b.size())
        throw DimensionError(std::string(what) + ": length " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i);
        else if (s[i] != '0')
            throw ParseError("bit string: illegal character '" + std::string(1, s[i]) + "' at offset " +
                             std::to_string(i));
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    BitVector v(len);
    v.set(i);
    return v;
}

BitVector BitVector::ones(std::size_t len) { return ~BitVector(len); }

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("bit index " + std::to_string(i) + " >= " + std::to_string(len_));
    return (words_[i / W] >> (i % W)) & 1u;
}

void BitVector::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("bit index " + std::to_string(i) + " >= " + std::to_string(len_));
    const std::uint64_t m = std::uint64_t{1} << (i % W);
    if (v)
        words_[i / W] |= m;
    else
        words_[i / W] &= ~m;
}

void BitVector::flip(std::size_t i) {
    if (i >= len_) throw std::out_of_range("bit index " + std::to_string(i) + " >= " + std::to_string(len_));
    words_[i / W] ^= std::uint64_t{1} << (i % W);
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

BitVector& BitVector::operator^=(const BitVector& o) {
    require_same(*this, o, "xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    require_same(*this, o, "and");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

BitVector BitVector::operator~() const {
    BitVector r(*this);
    for (auto& x : r.words_) x = ~x;
    if (len_ % W) r.words_.back() &= (std::uint64_t{1} << (len_ % W)) - 1;
    return r;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) return a.len_ <=> b.len_;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const std::uint64_t d = a.words_[i] ^ b.words_[i];
        if (d == 0) continue;
        // lowest differing bit is the leftmost differing symbol
        const std::uint64_t low = d & (~d + 1);
        return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector r(len_ + tail.len_);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) r.set(i);
    for (std::size_t i = 0; i < tail.len_; ++i)
        if (tail.get(i)) r.set(len_ + i);
    return r;
}

BitVector BitVector::slice(std::size_t pos, std::size_t count) const {
    if (pos + count > len_) throw DimensionError("slice past end of vector");
    BitVector r(count);
    for (std::size_t i = 0; i < count; ++i)
        if (get(pos + i)) r.set(i);
    return r;
}

BitVector BitVector::cyclic_shift() const {
    BitVector r(len_);
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) r.set((i + 1) % len_);
    return r;
}

std::uint64_t BitVector::to_u64() const {
    if (len_ > W) throw CapacityError("vector longer than 64 bits");
    return words_.empty() ? 0 : words_[0];
}

BitVector BitVector::from_u64(std::uint64_t v, std::size_t len) {
    if (len > W) throw CapacityError("vector longer than 64 bits");
    BitVector r(len);
    if (len) r.words_[0] = len == W ? v : v & ((std::uint64_t{1} << len) - 1);
    return r;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool dot(const BitVector& x, const BitVector& y) {
    require_same(x, y, "dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.words().size(); ++i) acc ^= x.words()[i] & y.words()[i];
    return std::popcount(acc) & 1;
}

std::size_t weight(const BitVector& x) { return x.weight(); }

std::size_t distance(const BitVector& x, const BitVector& y) {
    require_same(x, y, "distance");
    return (x ^ y).weight();
}

// ---- BitMatrix ----

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    BitMatrix m;
    m.cols_ = cols;
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    if (rows.empty()) throw DimensionError("matrix from no rows needs an explicit width");
    const std::size_t cols = rows.front().size();
    return from_rows(std::move(rows), cols);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (const auto& s : rows) v.push_back(BitVector::from_string(s));
    return from_rows(std::move(v));
}

bool BitMatrix::get(std::size_t r, std::size_t c) const { return row(r).get(c); }
void BitMatrix::set(std::size_t r, std::size_t c, bool v) { row(r).set(c, v); }

const BitVector& BitMatrix::row(std::size_t r) const {
    if (r >= rows_.size()) throw std::out_of_range("row " + std::to_string(r));
    return rows_[r];
}

BitVector& BitMatrix::row(std::size_t r) {
    if (r >= rows_.size()) throw std::out_of_range("row " + std::to_string(r));
    return rows_[r];
}

BitVector BitMatrix::column(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("column " + std::to_string(c));
    BitVector v(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].get(c)) v.set(r);
    return v;
}

void BitMatrix::append_row(BitVector r) {
    if (r.size() != cols_)
        throw DimensionError("row of length " + std::to_string(r.size()) + " in matrix with " +
                             std::to_string(cols_) + " columns");
    rows_.push_back(std::move(r));
}

BitMatrix BitMatrix::hconcat(const BitMatrix& right) const {
    if (rows() != right.rows()) throw DimensionError("hconcat: row counts differ");
    BitMatrix m;
    m.cols_ = cols_ + right.cols_;
    for (std::size_t r = 0; r < rows(); ++r) m.rows_.push_back(rows_[r].concat(right.rows_[r]));
    return m;
}

BitMatrix BitMatrix::vconcat(const BitMatrix& below) const {
    if (cols_ != below.cols_) throw DimensionError("vconcat: column counts differ");
    BitMatrix m = *this;
    for (const auto& r : below.rows_) m.rows_.push_back(r);
    return m;
}

BitMatrix BitMatrix::submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    if (r0 + nr > rows() || c0 + nc > cols_) throw DimensionError("submatrix out of range");
    BitMatrix m;
    m.cols_ = nc;
    for (std::size_t r = r0; r < r0 + nr; ++r) m.rows_.push_back(rows_[r].slice(c0, nc));
    return m;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) c.row(i) = vec_mat(a.row(i), b);
    return c;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.size())
        throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                             std::to_string(x.size()) + " bits");
    BitVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (dot(a.row(i), x)) y.set(i);
    return y;
}

BitVector vec_mat(const BitVector& x, const BitMatrix& a) {
    if (a.rows() != x.size())
        throw DimensionError("vec_mat: matrix has " + std::to_string(a.rows()) + " rows, vector has " +
                             std::to_string(x.size()) + " bits");
    BitVector y(a.cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.get(i)) y ^= a.row(i);
    return y;
}

BitMatrix transpose(const BitMatrix& a) {
    BitMatrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) t.set(c, r);
    return t;
}

Echelon row_reduce(const BitMatrix& a, PivotOrder order) {
    std::vector<BitVector> rows = a.row_list();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t n = a.cols();
    for (std::size_t step = 0; step < n && r < rows.size(); ++step) {
        const std::size_t c = order == PivotOrder::left_to_right ? step : n - 1 - step;
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {BitMatrix::from_rows(std::move(rows), n), std::move(pivots)};
}

std::size_t rank(const BitMatrix& a) { return row_reduce(a).pivots.size(); }

BitMatrix null_space(const BitMatrix& a, PivotOrder order) {
    const std::size_t n = a.cols();
    const Echelon e = row_reduce(a, order);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    BitMatrix basis(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced.get(i, f)) v.set(e.pivots[i]);
        basis.append_row(std::move(v));
    }
    return basis;
}

BitMatrix independent_rows(const BitMatrix& a) {
    // reduced basis kept with each vector's leading (leftmost) bit
    std::vector<std::pair<std::size_t, BitVector>> basis;
    BitMatrix out(0, a.cols());
    for (const auto& row : a.row_list()) {
        BitVector v = row;
        for (const auto& [lead, b] : basis)
            if (v.get(lead)) v ^= b;
        if (v.is_zero()) continue;
        std::size_t lead = 0;
        while (!v.get(lead)) ++lead;
        basis.emplace_back(lead, v);
        out.append_row(row);
    }
    return out;
}

// ---- Gf2Poly ----

Gf2Poly::Gf2Poly(std::vector<bool> coeffs) : c_(std::move(coeffs)) { trim(); }

void Gf2Poly::trim() {
    while (!c_.empty() && !c_.back()) c_.pop_back();
}

Gf2Poly Gf2Poly::from_string(std::string_view s) {
    std::vector<bool> c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw ParseError("polynomial string: illegal character '" + std::string(1, s[i]) + "'");
        c[i] = s[i] == '1';
    }
    return Gf2Poly(std::move(c));
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<std::size_t>& exps) {
    std::vector<bool> c;
    for (auto e : exps) {
        if (e >= c.size()) c.resize(e + 1, false);
        c[e] = !c[e];
    }
    return Gf2Poly(std::move(c));
}

Gf2Poly Gf2Poly::monomial(std::size_t e) { return from_exponents({e}); }

std::size_t Gf2Poly::degree() const {
    if (c_.empty()) throw ConstraintError("degree of the zero polynomial is undefined");
    return c_.size() - 1;
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    std::vector<bool> c(std::max(a.c_.size(), b.c_.size()), false);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) != b.coeff(i);
    return Gf2Poly(std::move(c));
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<bool> c(a.c_.size() + b.c_.size() - 1, false);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j]) c[i + j] = !c[i + j];
    }
    return Gf2Poly(std::move(c));
}

std::string Gf2Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (bool b : c_) s.push_back(b ? '1' : '0');
    return s;
}

std::string Gf2Poly::to_algebraic() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

PolyDivision poly_divide(const Gf2Poly& num, const Gf2Poly& den) {
    if (den.is_zero()) throw ConstraintError("division by the zero polynomial");
    std::vector<bool> rem = num.coeffs();
    const std::size_t dd = den.degree();
    if (rem.size() <= dd) return {Gf2Poly{}, num};
    std::vector<bool> quo(rem.size() - dd, false);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (!rem[i]) continue;
        const std::size_t shift = i - dd;
        quo[shift] = true;
        for (std::size_t j = 0; j <= dd; ++j)
            if (den.coeff(j)) rem[shift + j] = !rem[shift + j];
    }
    return {Gf2Poly(std::move(quo)), Gf2Poly(std::move(rem))};
}

// ---- SuperMatrix ----

namespace {

void check_cuts(const std::vector<std::size_t>& cuts, std::size_t dim, const char* what) {
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] == 0 || cuts[i] >= dim)
            throw ConstraintError(std::string(what) + " cut " + std::to_string(cuts[i]) + " not inside (0, " +
                                  std::to_string(dim) + ")");
        if (i && cuts[i] <= cuts[i - 1]) throw ConstraintError(std::string(what) + " cuts not strictly increasing");
    }
}

std::pair<std::size_t, std::size_t> span_of(const std::vector<std::size_t>& cuts, std::size_t dim, std::size_t b) {
    if (b > cuts.size()) throw std::out_of_range("block index " + std::to_string(b));
    const std::size_t lo = b == 0 ? 0 : cuts[b - 1];
    const std::size_t hi = b == cuts.size() ? dim : cuts[b];
    return {lo, hi - lo};
}

}  // namespace

SuperMatrix::SuperMatrix(BitMatrix body, std::vector<std::size_t> row_cuts, std::vector<std::size_t> col_cuts)
    : body_(std::move(body)), row_cuts_(std::move(row_cuts)), col_cuts_(std::move(col_cuts)) {
    check_cuts(row_cuts_, body_.rows(), "row");
    check_cuts(col_cuts_, body_.cols(), "column");
}

BitMatrix SuperMatrix::block(std::size_t bi, std::size_t bj) const {
    const auto [r0, nr] = span_of(row_cuts_, body_.rows(), bi);
    const auto [c0, nc] = span_of(col_cuts_, body_.cols(), bj);
    return body_.submatrix(r0, nr, c0, nc);
}

std::string SuperMatrix::to_display() const {
    std::ostringstream os;
    std::size_t next_row_cut = 0;
    for (std::size_t r = 0; r < body_.rows(); ++r) {
        if (next_row_cut < row_cuts_.size() && row_cuts_[next_row_cut] == r) {
            std::string rule;
            std::size_t next_col_cut = 0;
            for (std::size_t c = 0; c < body_.cols(); ++c) {
                if (next_col_cut < col_cuts_.size() && col_cuts_[next_col_cut] == c) {
                    rule += "+";
                    ++next_col_cut;
                }
                rule += "-";
            }
            os << rule << '\n';
            ++next_row_cut;
        }
        std::size_t next_col_cut = 0;
        for (std::size_t c = 0; c < body_.cols(); ++c) {
            if (next_col_cut < col_cuts_.size() && col_cuts_[next_col_cut] == c) {
                os << '|';
                ++next_col_cut;
            }
            os << (body_.get(r, c) ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

SuperMatrix super_transpose(const SuperMatrix& m) {
    return SuperMatrix(transpose(m.body()), m.col_cuts(), m.row_cuts());
}

bool super_equal(const SuperMatrix& a, const SuperMatrix& b, bool structural) {
    if (!(a.body() == b.body())) return false;
    if (!structural) return true;
    return a.row_cuts() == b.row_cuts() && a.col_cuts() == b.col_cuts();
}

}  // namespace supercode

std::size_t std::hash<supercode::BitVector>::operator()(const supercode::BitVector& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}
