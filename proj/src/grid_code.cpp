#include "supercode/grid_code.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "supercode/super_codes.hpp"

namespace supercode {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
    return "cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_shape(const GridCode& g, const GridCodeword& x) {
    if (x.rows() != g.rows() || x.cols() != g.cols())
        throw DimensionError("grid word is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                             ", code is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
}

void require_cell_length(const GridCode& g, const BitVector& w, std::size_t i, std::size_t j) {
    if (w.size() != g.cell(i, j).n())
        throw DimensionError(cell_name(i, j) + " has length " + std::to_string(w.size()) + ", code length " +
                             std::to_string(g.cell(i, j).n()));
}

}  // namespace

const LinearCode& GridCode::cell(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range(cell_name(i, j) + " outside grid");
    return cells_[i * cols_ + j];
}

bool GridCode::is_uniform() const {
    for (const auto& c : cells_)
        if (!c.same_code(cells_.front())) return false;
    return true;
}

GridCode grid_new(std::vector<std::vector<LinearCode>> cells) {
    if (cells.empty() || cells.front().empty()) throw ConstraintError("grid code needs at least one cell");
    const std::size_t m = cells.size(), n = cells.front().size();
    for (std::size_t i = 0; i < m; ++i)
        if (cells[i].size() != n)
            throw DimensionError("grid row " + std::to_string(i) + " has " + std::to_string(cells[i].size()) +
                                 " cells, row 0 has " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 1; i < m; ++i)
            if (cells[i][j].n() != cells[0][j].n())
                throw ConstraintError("grid column " + std::to_string(j) + ": " + cell_name(i, j) + " has length " +
                                      std::to_string(cells[i][j].n()) + ", " + cell_name(0, j) + " has " +
                                      std::to_string(cells[0][j].n()) + " (cells in a column need equal lengths)");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (cells[i][j].checks() != cells[i][0].checks())
                throw ConstraintError("grid row " + std::to_string(i) + ": " + cell_name(i, j) + " has " +
                                      std::to_string(cells[i][j].checks()) + " check symbols, " + cell_name(i, 0) +
                                      " has " + std::to_string(cells[i][0].checks()) +
                                      " (cells in a row need equal check-symbol counts)");
    std::vector<LinearCode> flat;
    flat.reserve(m * n);
    for (auto& row : cells)
        for (auto& c : row) flat.push_back(std::move(c));
    return GridCode(m, n, std::move(flat));
}

GridCode uniform_grid(const LinearCode& c, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw ConstraintError("uniform grid needs m, n >= 1");
    return grid_new(std::vector<std::vector<LinearCode>>(m, std::vector<LinearCode>(n, c)));
}

GridCodeword GridCodeword::filled(std::size_t rows, std::size_t cols, const BitVector& x) {
    GridCodeword w(rows, cols);
    for (auto& c : w.cells_) c = x;
    return w;
}

const std::optional<BitVector>& GridCodeword::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range(cell_name(i, j) + " outside grid word");
    return cells_[i * cols_ + j];
}

std::optional<BitVector>& GridCodeword::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range(cell_name(i, j) + " outside grid word");
    return cells_[i * cols_ + j];
}

const BitVector& GridCodeword::word(std::size_t i, std::size_t j) const {
    const auto& c = at(i, j);
    if (!c) throw ConstraintError(cell_name(i, j) + " is absent");
    return *c;
}

GridCodeword grid_encode(const GridCode& g, const GridCodeword& messages) {
    require_shape(g, messages);
    GridCodeword x(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (const auto& m = messages.at(i, j)) x.at(i, j) = g.cell(i, j).encode(*m);
    return x;
}

SyndromeGrid grid_syndrome(const GridCode& g, const GridCodeword& x) {
    require_shape(g, x);
    SyndromeGrid s(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (const auto& w = x.at(i, j)) {
                require_cell_length(g, *w, i, j);
                s.at(i, j) = g.cell(i, j).syndrome(*w);
            }
    return s;
}

bool grid_contains(const GridCode& g, const GridCodeword& x) {
    const SyndromeGrid s = grid_syndrome(g, x);
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (s.at(i, j) && !s.at(i, j)->is_zero()) return false;
    return true;
}

GridDecodeResult grid_decode(const GridCode& g, const GridCodeword& y) {
    require_shape(g, y);
    GridDecodeResult r{GridCodeword(g.rows(), g.cols()), GridCodeword(g.rows(), g.cols())};
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (const auto& w = y.at(i, j)) {
                require_cell_length(g, *w, i, j);
                auto d = g.cell(i, j).decode(*w);
                r.codeword.at(i, j) = std::move(d.codeword);
                r.error.at(i, j) = std::move(d.error);
            }
    return r;
}

std::vector<std::string> to_row_stream(const GridCodeword& x) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        std::vector<std::optional<BitVector>> segs;
        for (std::size_t j = 0; j < x.cols(); ++j) segs.push_back(x.at(i, j));
        out.push_back(format_segments(segs));
    }
    return out;
}

std::vector<std::string> to_col_stream(const GridCodeword& x) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < x.cols(); ++j) {
        std::vector<std::optional<BitVector>> segs;
        for (std::size_t i = 0; i < x.rows(); ++i) segs.push_back(x.at(i, j));
        out.push_back(format_segments(segs));
    }
    return out;
}

namespace {

GridCodeword parse_stream(const GridCode& g, const std::vector<std::string>& stream, bool by_rows) {
    const std::size_t lines = by_rows ? g.rows() : g.cols();
    const std::size_t per_line = by_rows ? g.cols() : g.rows();
    const char* unit = by_rows ? "row" : "column";
    if (stream.size() != lines)
        throw DimensionError(std::string(unit) + " stream has " + std::to_string(stream.size()) + " lines, expected " +
                             std::to_string(lines));
    GridCodeword x(g.rows(), g.cols());
    for (std::size_t a = 0; a < lines; ++a) {
        std::vector<std::optional<BitVector>> segs;
        try {
            segs = parse_segments(stream[a]);
        } catch (const ParseError& e) {
            throw ParseError(std::string(unit) + " " + std::to_string(a) + ": " + e.what());
        }
        if (segs.size() != per_line)
            throw DimensionError(std::string(unit) + " " + std::to_string(a) + " has " + std::to_string(segs.size()) +
                                 " segments, expected " + std::to_string(per_line));
        for (std::size_t b = 0; b < per_line; ++b) {
            const std::size_t i = by_rows ? a : b, j = by_rows ? b : a;
            if (segs[b]) require_cell_length(g, *segs[b], i, j);
            x.at(i, j) = std::move(segs[b]);
        }
    }
    return x;
}

}  // namespace

GridCodeword from_row_stream(const GridCode& g, const std::vector<std::string>& stream) {
    return parse_stream(g, stream, true);
}

GridCodeword from_col_stream(const GridCode& g, const std::vector<std::string>& stream) {
    return parse_stream(g, stream, false);
}

namespace {

BitVector vote(const LinearCode& c, const std::vector<BitVector>& values, std::size_t& top_count) {
    std::map<BitVector, std::size_t> freq;
    for (const auto& v : values) ++freq[v];
    const BitVector* best = nullptr;
    std::size_t best_n = 0, best_sw = 0;
    for (const auto& [v, n] : freq) {  // map order supplies the final lexicographic tie-break
        const std::size_t sw = c.syndrome(v).weight();
        if (!best || n > best_n || (n == best_n && sw < best_sw)) {
            best = &v;
            best_n = n;
            best_sw = sw;
        }
    }
    top_count = best_n;
    return *best;
}

}  // namespace

BitVector majority_vote(const GridCode& g, const GridCodeword& received) {
    require_shape(g, received);
    if (!g.is_uniform()) throw ConstraintError("majority vote needs a uniform grid");
    const LinearCode& c = g.cell(0, 0);
    std::vector<BitVector> values;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (const auto& w = received.at(i, j)) {
                require_cell_length(g, *w, i, j);
                values.push_back(*w);
            }
    if (values.empty()) throw ConstraintError("majority vote over a grid with no present cells");
    std::size_t top = 0;
    BitVector winner = vote(c, values, top);
    if (top > 1) return winner;
    for (auto& v : values) v = c.decode(v).codeword;
    return vote(c, values, top);
}

std::size_t best_row_select(const GridCode& g, const GridCodeword& received, RowCriterion criterion) {
    require_shape(g, received);
    std::size_t best = 0, best_score = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        std::size_t zeros = 0, err = 0;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const auto& w = received.at(i, j);
            if (!w) continue;
            require_cell_length(g, *w, i, j);
            if (criterion == RowCriterion::zero_syndromes)
                zeros += g.cell(i, j).contains(*w) ? 1 : 0;
            else
                err += g.cell(i, j).decode(*w).error.weight();
        }
        const bool better = criterion == RowCriterion::zero_syndromes ? zeros > best_score : err < best_score;
        if (i == 0 || better) {
            best = i;
            best_score = criterion == RowCriterion::zero_syndromes ? zeros : err;
        }
    }
    return best;
}

ReconcileReport simultaneous_reconcile(const GridCode& g, const std::vector<std::string>& row_stream,
                                       const std::vector<std::string>& col_stream) {
    const GridCodeword a = from_row_stream(g, row_stream);
    const GridCodeword b = from_col_stream(g, col_stream);
    ReconcileReport r{GridCodeword(g.rows(), g.cols()), {}};
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const auto& x = a.at(i, j);
            const auto& y = b.at(i, j);
            if (x == y) {
                r.grid.at(i, j) = x;
                continue;
            }
            CellConflict cf{i, j, x, y, CopySource::row};
            const LinearCode& c = g.cell(i, j);
            std::optional<BitVector> pick;
            if (!x || !y) {
                cf.chosen = x ? CopySource::row : CopySource::column;
                pick = x ? x : y;
            } else {
                const bool zx = c.contains(*x), zy = c.contains(*y);
                if (zx || zy) {
                    cf.chosen = zx ? CopySource::row : CopySource::column;
                    pick = zx ? *x : *y;
                } else {
                    const auto dx = c.decode(*x), dy = c.decode(*y);
                    const bool col_wins = dy.error.weight() < dx.error.weight();
                    cf.chosen = col_wins ? CopySource::column : CopySource::row;
                    pick = col_wins ? dy.codeword : dx.codeword;
                }
            }
            r.grid.at(i, j) = std::move(pick);
            r.conflicts.push_back(std::move(cf));
        }
    return r;
}

TrueChart::TrueChart(std::size_t rows, std::size_t cols, std::vector<bool> marks)
    : rows_(rows), cols_(cols), marks_(std::move(marks)) {
    if (marks_.size() != rows_ * cols_) throw DimensionError("chart marks do not fill " + std::to_string(rows_) + "x" +
                                                             std::to_string(cols_));
}

TrueChart TrueChart::parse(std::string_view text) {
    std::vector<bool> marks;
    std::size_t rows = 0, cols = 0, line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        if (line.empty()) continue;
        for (char ch : line) {
            if (ch != '*' && ch != '.')
                throw ParseError("chart line " + std::to_string(line_no) + ": illegal character '" +
                                 std::string(1, ch) + "'");
            marks.push_back(ch == '*');
        }
        if (rows == 0)
            cols = line.size();
        else if (line.size() != cols)
            throw ParseError("chart line " + std::to_string(line_no) + " has " + std::to_string(line.size()) +
                             " marks, expected " + std::to_string(cols));
        ++rows;
    }
    if (rows == 0) throw ParseError("chart is empty");
    return TrueChart(rows, cols, std::move(marks));
}

TrueChart TrueChart::all(std::size_t rows, std::size_t cols, bool value) {
    return TrueChart(rows, cols, std::vector<bool>(rows * cols, value));
}

std::size_t TrueChart::count() const { return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), true)); }

std::string TrueChart::to_text() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) ? '*' : '.';
        s += '\n';
    }
    return s;
}

std::vector<BitVector> apply_chart(const GridCodeword& x, const TrueChart& chart) {
    if (x.rows() != chart.rows() || x.cols() != chart.cols())
        throw DimensionError("chart is " + std::to_string(chart.rows()) + "x" + std::to_string(chart.cols()) +
                             ", grid word is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (chart.at(i, j)) out.push_back(x.word(i, j));
    return out;
}

CellMask::CellMask(std::vector<std::size_t> cells) : cells_(std::move(cells)) {
    std::set<std::size_t> seen;
    for (auto c : cells_) {
        if (c == 0) throw ConstraintError("mask cells are numbered from 1");
        if (!seen.insert(c).second) throw ConstraintError("mask lists cell " + std::to_string(c) + " twice");
    }
}

CellMask CellMask::from_positions(const std::vector<std::pair<std::size_t, std::size_t>>& rc, std::size_t cols) {
    std::vector<std::size_t> cells;
    for (auto [r, c] : rc) {
        if (c >= cols) throw DimensionError("mask column " + std::to_string(c) + " outside " + std::to_string(cols));
        cells.push_back(r * cols + c + 1);
    }
    return CellMask(std::move(cells));
}

CellMask CellMask::from_ap(std::size_t first, std::size_t diff, std::size_t last) {
    if (first == 0) throw ConstraintError("progression must start at cell 1 or later");
    if (diff == 0) throw ConstraintError("progression difference must be at least 1");
    if (last < first) throw ConstraintError("progression ends before it starts");
    if ((last - first) % diff != 0)
        throw ConstraintError("last term " + std::to_string(last) + " is not reached from " + std::to_string(first) +
                              " in steps of " + std::to_string(diff));
    std::vector<std::size_t> cells;
    for (std::size_t v = first; v <= last; v += diff) cells.push_back(v);
    return CellMask(std::move(cells));
}

CellMask CellMask::merged(const CellMask& other) const {
    std::vector<std::size_t> cells = cells_;
    for (auto c : other.cells_)
        if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
    return CellMask(std::move(cells));
}

std::vector<BitVector> apply_mask(const GridCodeword& x, const CellMask& mask) {
    const std::size_t total = x.rows() * x.cols();
    std::vector<BitVector> out;
    for (auto c : mask.cells()) {
        if (c > total)
            throw DimensionError("mask cell " + std::to_string(c) + " outside the " + std::to_string(x.rows()) + "x" +
                                 std::to_string(x.cols()) + " grid");
        out.push_back(x.word((c - 1) / x.cols(), (c - 1) % x.cols()));
    }
    return out;
}

BitMatrix grid_dot(const GridCodeword& x, const GridCodeword& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionError("grid dot of " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " and " +
                             std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
    BitMatrix d(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (dot(x.word(i, j), y.word(i, j))) d.set(i, j);
    return d;
}

GridCode orthogonal_grid(const GridCode& g) {
    std::vector<LinearCode> cells;
    cells.reserve(g.rows() * g.cols());
    for (const auto& c : g.cells_) cells.push_back(c.dual());
    return GridCode(g.rows(), g.cols(), std::move(cells));
}

bool is_cyclic_grid(const GridCode& g) {
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!g.cell(i, j).is_cyclic()) return false;
    return true;
}

GridCode block_layout(const std::vector<GridBlock>& blocks) {
    if (blocks.empty()) throw ConstraintError("block layout needs at least one block");
    std::size_t m = 0, n = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        if (blk.height == 0 || blk.width == 0)
            throw ConstraintError("block " + std::to_string(b) + " has an empty span");
        m = std::max(m, blk.row + blk.height);
        n = std::max(n, blk.col + blk.width);
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(m * n, none);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        for (std::size_t i = blk.row; i < blk.row + blk.height; ++i)
            for (std::size_t j = blk.col; j < blk.col + blk.width; ++j) {
                auto& o = owner[i * n + j];
                if (o != none)
                    throw ConstraintError("blocks " + std::to_string(o) + " and " + std::to_string(b) + " overlap at " +
                                          cell_name(i, j));
                o = b;
            }
    }
    std::vector<std::vector<LinearCode>> cells(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto o = owner[i * n + j];
            if (o == none) throw ConstraintError("no block covers " + cell_name(i, j));
            cells[i].push_back(blocks[o].code);
        }
    return grid_new(std::move(cells));
}

}  // namespace supercode
