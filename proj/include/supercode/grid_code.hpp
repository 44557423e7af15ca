#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercode/block_code.hpp"

namespace supercode {

// m x n array of codes: one length per column, one check count per row.
class GridCode {
public:
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const LinearCode& cell(std::size_t i, std::size_t j) const;
    std::size_t column_length(std::size_t j) const { return cell(0, j).n(); }
    std::size_t row_checks(std::size_t i) const { return cell(i, 0).checks(); }
    // Every cell holds the same code.
    bool is_uniform() const;

private:
    GridCode(std::size_t rows, std::size_t cols, std::vector<LinearCode> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {}
    friend GridCode grid_new(std::vector<std::vector<LinearCode>> cells);
    friend GridCode orthogonal_grid(const GridCode& g);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LinearCode> cells_;  // row-major
};

GridCode grid_new(std::vector<std::vector<LinearCode>> cells);
GridCode uniform_grid(const LinearCode& c, std::size_t m, std::size_t n);

// Grid of cell words; a cell may be absent (sender-side empty marker).
class GridCodeword {
public:
    GridCodeword() = default;
    GridCodeword(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}
    static GridCodeword filled(std::size_t rows, std::size_t cols, const BitVector& x);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::optional<BitVector>& at(std::size_t i, std::size_t j) const;
    std::optional<BitVector>& at(std::size_t i, std::size_t j);
    // Present cell or throw.
    const BitVector& word(std::size_t i, std::size_t j) const;

    friend bool operator==(const GridCodeword&, const GridCodeword&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::optional<BitVector>> cells_;
};

using SyndromeGrid = GridCodeword;

struct GridDecodeResult {
    GridCodeword codeword;
    GridCodeword error;
};

GridCodeword grid_encode(const GridCode& g, const GridCodeword& messages);
SyndromeGrid grid_syndrome(const GridCode& g, const GridCodeword& x);
bool grid_contains(const GridCode& g, const GridCodeword& x);
GridDecodeResult grid_decode(const GridCode& g, const GridCodeword& y);

std::vector<std::string> to_row_stream(const GridCodeword& x);
GridCodeword from_row_stream(const GridCode& g, const std::vector<std::string>& stream);
std::vector<std::string> to_col_stream(const GridCodeword& x);
GridCodeword from_col_stream(const GridCode& g, const std::vector<std::string>& stream);

// Most frequent present cell; ties go to the smaller syndrome weight, then
// the smaller word. With no repeated value every cell is decoded first.
BitVector majority_vote(const GridCode& g, const GridCodeword& received);

enum class RowCriterion { zero_syndromes, error_weight };

// zero_syndromes: most cells with zero syndrome. error_weight: least total
// coset-leader weight. Ties go to the lowest index.
std::size_t best_row_select(const GridCode& g, const GridCodeword& received,
                            RowCriterion criterion = RowCriterion::zero_syndromes);

enum class CopySource { row, column };

struct CellConflict {
    std::size_t row = 0;
    std::size_t col = 0;
    std::optional<BitVector> row_copy;
    std::optional<BitVector> col_copy;
    CopySource chosen = CopySource::row;
};

struct ReconcileReport {
    GridCodeword grid;
    std::vector<CellConflict> conflicts;
};

ReconcileReport simultaneous_reconcile(const GridCode& g, const std::vector<std::string>& row_stream,
                                       const std::vector<std::string>& col_stream);

class TrueChart {
public:
    TrueChart(std::size_t rows, std::size_t cols, std::vector<bool> marks);
    // Lines of '*' (true) and '.' (false); blank lines are ignored.
    static TrueChart parse(std::string_view text);
    static TrueChart all(std::size_t rows, std::size_t cols, bool value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool at(std::size_t i, std::size_t j) const { return marks_.at(i * cols_ + j); }
    std::size_t count() const;
    std::string to_text() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<bool> marks_;
};

std::vector<BitVector> apply_chart(const GridCodeword& x, const TrueChart& chart);

// Cells as 1-based row-major numbers: (i, j) is i * cols + j + 1.
class CellMask {
public:
    explicit CellMask(std::vector<std::size_t> cells);  // throws on duplicates or 0
    static CellMask from_positions(const std::vector<std::pair<std::size_t, std::size_t>>& rc, std::size_t cols);
    static CellMask from_ap(std::size_t first, std::size_t diff, std::size_t last);

    const std::vector<std::size_t>& cells() const { return cells_; }
    CellMask merged(const CellMask& other) const;  // union, first-seen order

private:
    std::vector<std::size_t> cells_;
};

inline CellMask mask_from_ap(std::size_t first, std::size_t diff, std::size_t last) {
    return CellMask::from_ap(first, diff, last);
}
std::vector<BitVector> apply_mask(const GridCodeword& x, const CellMask& mask);

BitMatrix grid_dot(const GridCodeword& x, const GridCodeword& y);
// Cellwise duals. Row check counts match only when all column lengths do,
// so the result is not re-validated.
GridCode orthogonal_grid(const GridCode& g);
bool is_cyclic_grid(const GridCode& g);

struct GridBlock {
    std::size_t row = 0;  // top-left cell
    std::size_t col = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    LinearCode code;
};

GridCode block_layout(const std::vector<GridBlock>& blocks);

}  // namespace supercode
