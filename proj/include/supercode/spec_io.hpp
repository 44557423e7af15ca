#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "supercode/grid_code.hpp"
#include "supercode/super_codes.hpp"

namespace supercode {

enum class CodeKind { parity, generator, hamming, repetition, parity_check, cyclic };

struct CodeSpec {
    CodeKind kind = CodeKind::parity;
    std::vector<std::string> matrix;  // parity / generator rows
    std::size_t size = 0;             // m for hamming, n otherwise
    std::string poly;                 // cyclic generator, coefficient of x^i at index i
    std::string ref;                  // name when taken from "defs"
    std::string where;                // location for error messages
};

struct BlockSpec {
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    CodeSpec code;
};

enum class Shape { row, column, grid };

struct CompositionSpec {
    Shape shape = Shape::row;
    std::vector<CodeSpec> codes;               // row / column
    std::vector<std::vector<CodeSpec>> cells;  // grid
    std::vector<BlockSpec> blocks;             // grid given as a block layout
    std::string where;
};

using Spec = std::variant<CodeSpec, CompositionSpec>;

// source names the document in error messages (usually the file path).
Spec parse_spec(std::string_view text, const std::string& source = "<spec>");
Spec load_spec(const std::string& path);

LinearCode build_code(const CodeSpec& s);
SuperRowCode build_row(const CompositionSpec& s);
SuperColumnCode build_column(const CompositionSpec& s);
GridCode build_grid(const CompositionSpec& s);
// A single code becomes a 1x1 grid.
GridCode build_grid(const Spec& s);

// Row / column words: '|'-separated segments, no absent cells.
SuperCodeword parse_super_word(std::string_view text);
std::string format_super_word(const SuperCodeword& w);

// Non-blank lines with trailing whitespace and CR stripped.
std::vector<std::string> split_lines(std::string_view text);

// "grid R C" then one 0-based "row col" pair per line; '#' starts a comment.
struct Stencil {
    std::size_t rows = 0;
    std::size_t cols = 0;
    CellMask mask;
};
Stencil parse_stencil(std::string_view text, const std::string& source = "<stencil>");
std::string read_file(const std::string& path);

}  // namespace supercode
