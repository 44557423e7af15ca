#include "supercode/spec_io.hpp"

#include <cctype>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace supercode {

using nlohmann::json;

namespace {

// Maps JSON pointers to the line where their value starts. Only run on text
// that already parsed, so the scanner can stay small.
class LineIndex {
public:
    explicit LineIndex(std::string_view text) : t_(text) {
        try {
            value("");
        } catch (...) {
            // positions are best effort
        }
    }

    std::size_t line_of(const std::string& ptr) const {
        auto it = lines_.find(ptr);
        return it == lines_.end() ? 0 : it->second;
    }

private:
    char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
    void advance() {
        if (pos_ >= t_.size()) throw std::out_of_range("eof");
        if (t_[pos_++] == '\n') ++line_;
    }
    void ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) advance();
    }
    std::string str() {
        std::string out;
        advance();  // opening quote
        while (peek() != '"') {
            if (peek() == '\\') {
                advance();
                out += peek();
            } else {
                out += peek();
            }
            advance();
        }
        advance();
        return out;
    }
    void value(const std::string& ptr) {
        ws();
        lines_.emplace(ptr, line_);
        const char c = peek();
        if (c == '{') {
            advance();
            ws();
            while (peek() != '}') {
                ws();
                const std::string key = str();
                ws();
                advance();  // ':'
                value(ptr + "/" + key);
                ws();
                if (peek() == ',') advance();
                ws();
            }
            advance();
        } else if (c == '[') {
            advance();
            ws();
            std::size_t i = 0;
            while (peek() != ']') {
                value(ptr + "/" + std::to_string(i++));
                ws();
                if (peek() == ',') advance();
                ws();
            }
            advance();
        } else if (c == '"') {
            str();
        } else {
            while (pos_ < t_.size() && !std::strchr(",]} \t\r\n", t_[pos_])) advance();
        }
    }

    std::string_view t_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::map<std::string, std::size_t> lines_;
};

struct Ctx {
    std::string source;
    LineIndex index;
    std::map<std::string, CodeSpec> defs;

    std::string where(const std::string& ptr) const {
        const std::size_t line = index.line_of(ptr);
        return source + (line ? ":" + std::to_string(line) : "") + " (" + (ptr.empty() ? "/" : ptr) + ")";
    }
    [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
        throw ParseError(where(ptr) + ": " + msg);
    }
};

void check_keys(const Ctx& cx, const json& j, const std::string& ptr, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()) && it.key() != "note") cx.fail(ptr + "/" + it.key(), "unknown key \"" + it.key() + "\"");
}

const json& field(const Ctx& cx, const json& j, const std::string& ptr, const char* key) {
    if (!j.contains(key)) cx.fail(ptr, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t count_field(const Ctx& cx, const json& j, const std::string& ptr, const char* key) {
    const json& v = field(cx, j, ptr, key);
    if (!v.is_number_unsigned()) cx.fail(ptr + "/" + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

std::string string_field(const Ctx& cx, const json& j, const std::string& ptr, const char* key) {
    const json& v = field(cx, j, ptr, key);
    if (!v.is_string()) cx.fail(ptr + "/" + key, "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> rows_field(const Ctx& cx, const json& j, const std::string& ptr, const char* key) {
    const json& v = field(cx, j, ptr, key);
    const std::string p = ptr + "/" + key;
    if (!v.is_array() || v.empty()) cx.fail(p, "expected a non-empty array of bit strings");
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) cx.fail(p + "/" + std::to_string(i), "expected a bit string");
        std::string s = v[i].get<std::string>();
        for (char ch : s)
            if (ch != '0' && ch != '1') cx.fail(p + "/" + std::to_string(i), "illegal character '" + std::string(1, ch) + "'");
        if (!rows.empty() && s.size() != rows.front().size())
            cx.fail(p + "/" + std::to_string(i), "row has " + std::to_string(s.size()) + " bits, row 0 has " +
                                                     std::to_string(rows.front().size()));
        rows.push_back(std::move(s));
    }
    return rows;
}

CodeSpec code_spec(const Ctx& cx, const json& j, const std::string& ptr) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        auto it = cx.defs.find(name);
        if (it == cx.defs.end()) cx.fail(ptr, "no code named \"" + name + "\" in defs");
        return it->second;
    }
    if (!j.is_object()) cx.fail(ptr, "expected a code object or a name from defs");
    CodeSpec s;
    s.where = cx.where(ptr);
    const std::string kind = string_field(cx, j, ptr, "kind");
    if (kind == "parity") {
        check_keys(cx, j, ptr, {"kind", "h"});
        s.kind = CodeKind::parity;
        s.matrix = rows_field(cx, j, ptr, "h");
    } else if (kind == "generator") {
        check_keys(cx, j, ptr, {"kind", "g"});
        s.kind = CodeKind::generator;
        s.matrix = rows_field(cx, j, ptr, "g");
    } else if (kind == "hamming") {
        check_keys(cx, j, ptr, {"kind", "m"});
        s.kind = CodeKind::hamming;
        s.size = count_field(cx, j, ptr, "m");
    } else if (kind == "repetition" || kind == "parity_check") {
        check_keys(cx, j, ptr, {"kind", "n"});
        s.kind = kind == "repetition" ? CodeKind::repetition : CodeKind::parity_check;
        s.size = count_field(cx, j, ptr, "n");
    } else if (kind == "cyclic") {
        check_keys(cx, j, ptr, {"kind", "n", "g"});
        s.kind = CodeKind::cyclic;
        s.size = count_field(cx, j, ptr, "n");
        s.poly = string_field(cx, j, ptr, "g");
        for (char ch : s.poly)
            if (ch != '0' && ch != '1') cx.fail(ptr + "/g", "illegal character '" + std::string(1, ch) + "'");
    } else {
        cx.fail(ptr + "/kind", "unknown kind \"" + kind +
                                   "\" (expected parity, generator, hamming, repetition, parity_check or cyclic)");
    }
    return s;
}

CompositionSpec composition_spec(Ctx& cx, const json& j) {
    CompositionSpec s;
    s.where = cx.where("");
    const std::string shape = string_field(cx, j, "", "shape");
    if (j.contains("defs")) {
        const json& d = j.at("defs");
        if (!d.is_object()) cx.fail("/defs", "expected an object of named codes");
        for (auto it = d.begin(); it != d.end(); ++it) {
            CodeSpec c = code_spec(cx, it.value(), "/defs/" + it.key());
            c.ref = it.key();
            cx.defs[it.key()] = std::move(c);
        }
    }
    if (shape == "row" || shape == "column") {
        check_keys(cx, j, "", {"shape", "defs", "codes"});
        s.shape = shape == "row" ? Shape::row : Shape::column;
        const json& codes = field(cx, j, "", "codes");
        if (!codes.is_array() || codes.empty()) cx.fail("/codes", "expected a non-empty array");
        for (std::size_t i = 0; i < codes.size(); ++i) s.codes.push_back(code_spec(cx, codes[i], "/codes/" + std::to_string(i)));
        return s;
    }
    if (shape != "grid") cx.fail("/shape", "unknown shape \"" + shape + "\" (expected row, column or grid)");
    s.shape = Shape::grid;
    check_keys(cx, j, "", {"shape", "defs", "cells", "uniform", "blocks"});
    const int forms = int(j.contains("cells")) + int(j.contains("uniform")) + int(j.contains("blocks"));
    if (forms != 1) cx.fail("", "a grid needs exactly one of \"cells\", \"uniform\" or \"blocks\"");
    if (j.contains("cells")) {
        const json& rows = j.at("cells");
        if (!rows.is_array() || rows.empty()) cx.fail("/cells", "expected a non-empty array of rows");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string rp = "/cells/" + std::to_string(i);
            if (!rows[i].is_array() || rows[i].empty()) cx.fail(rp, "expected a non-empty array of codes");
            std::vector<CodeSpec> row;
            for (std::size_t c = 0; c < rows[i].size(); ++c) row.push_back(code_spec(cx, rows[i][c], rp + "/" + std::to_string(c)));
            s.cells.push_back(std::move(row));
        }
    } else if (j.contains("uniform")) {
        const json& u = j.at("uniform");
        if (!u.is_object()) cx.fail("/uniform", "expected an object");
        check_keys(cx, u, "/uniform", {"code", "rows", "cols"});
        CodeSpec c = code_spec(cx, field(cx, u, "/uniform", "code"), "/uniform/code");
        if (c.ref.empty()) c.ref = "\x01uniform";
        const std::size_t m = count_field(cx, u, "/uniform", "rows"), n = count_field(cx, u, "/uniform", "cols");
        if (m == 0 || n == 0) cx.fail("/uniform", "rows and cols must be at least 1");
        s.cells.assign(m, std::vector<CodeSpec>(n, c));
    } else {
        const json& b = j.at("blocks");
        if (!b.is_array() || b.empty()) cx.fail("/blocks", "expected a non-empty array of blocks");
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::string bp = "/blocks/" + std::to_string(i);
            if (!b[i].is_object()) cx.fail(bp, "expected a block object");
            check_keys(cx, b[i], bp, {"row", "col", "height", "width", "code"});
            s.blocks.push_back(BlockSpec{count_field(cx, b[i], bp, "row"), count_field(cx, b[i], bp, "col"),
                                         count_field(cx, b[i], bp, "height"), count_field(cx, b[i], bp, "width"),
                                         code_spec(cx, field(cx, b[i], bp, "code"), bp + "/code")});
        }
    }
    return s;
}

template <class F>
auto located(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConstraintError(where + ": " + e.what());
    }
}

// Builds each named code once so grid cells share caches.
class CodeCache {
public:
    const LinearCode& get(const CodeSpec& s) {
        if (s.ref.empty()) {
            own_.push_back(std::make_unique<LinearCode>(build_code(s)));
            return *own_.back();
        }
        auto it = named_.find(s.ref);
        if (it == named_.end()) it = named_.emplace(s.ref, build_code(s)).first;
        return it->second;
    }

private:
    std::map<std::string, LinearCode> named_;
    std::vector<std::unique_ptr<LinearCode>> own_;
};

}  // namespace

Spec parse_spec(std::string_view text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
    Ctx cx{source, LineIndex(text), {}};
    if (!j.is_object()) cx.fail("", "expected a JSON object");
    if (j.contains("shape")) return composition_spec(cx, j);
    if (j.contains("kind")) return code_spec(cx, j, "");
    cx.fail("", "expected a code (\"kind\") or a composition (\"shape\")");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open file");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Spec load_spec(const std::string& path) { return parse_spec(read_file(path), path); }

LinearCode build_code(const CodeSpec& s) {
    return located(s.where, [&] {
        switch (s.kind) {
            case CodeKind::parity:
                return LinearCode::from_parity(BitMatrix::from_strings(s.matrix));
            case CodeKind::generator:
                return LinearCode::from_generator(BitMatrix::from_strings(s.matrix));
            case CodeKind::hamming:
                return hamming(s.size);
            case CodeKind::repetition:
                return repetition(s.size);
            case CodeKind::parity_check:
                return parity_check(s.size);
            case CodeKind::cyclic:
                return cyclic_from_poly({s.size, Gf2Poly::from_string(s.poly)});
        }
        throw ConstraintError("unhandled code kind");
    });
}

namespace {

std::vector<LinearCode> build_list(const CompositionSpec& s) {
    CodeCache cache;
    std::vector<LinearCode> out;
    for (const auto& c : s.codes) out.push_back(cache.get(c));
    return out;
}

// Composition errors name the offending component; point at its entry.
template <class F>
auto located_component(const CompositionSpec& s, F&& f) {
    try {
        return f();
    } catch (const ConstraintError& e) {
        const std::string msg = e.what();
        const auto at = msg.find("component ");
        if (at != std::string::npos) {
            const auto i = std::strtoul(msg.c_str() + at + 10, nullptr, 10);
            if (i < s.codes.size() && !s.codes[i].where.empty()) throw ConstraintError(s.codes[i].where + ": " + msg);
        }
        throw ConstraintError(s.where + ": " + msg);
    }
}

}  // namespace

SuperRowCode build_row(const CompositionSpec& s) {
    if (s.shape != Shape::row) throw ConstraintError(s.where + ": not a row composition");
    return located_component(s, [&] { return row_new(build_list(s)); });
}

SuperColumnCode build_column(const CompositionSpec& s) {
    if (s.shape != Shape::column) throw ConstraintError(s.where + ": not a column composition");
    return located_component(s, [&] { return col_new(build_list(s)); });
}

GridCode build_grid(const CompositionSpec& s) {
    if (s.shape != Shape::grid) throw ConstraintError(s.where + ": not a grid composition");
    CodeCache cache;
    if (!s.blocks.empty()) {
        std::vector<GridBlock> blocks;
        for (const auto& b : s.blocks) blocks.push_back(GridBlock{b.row, b.col, b.height, b.width, cache.get(b.code)});
        return located(s.where, [&] { return block_layout(blocks); });
    }
    std::vector<std::vector<LinearCode>> cells;
    for (const auto& row : s.cells) {
        cells.emplace_back();
        for (const auto& c : row) cells.back().push_back(cache.get(c));
    }
    return located(s.where, [&] { return grid_new(std::move(cells)); });
}

GridCode build_grid(const Spec& s) {
    if (const auto* c = std::get_if<CodeSpec>(&s)) return uniform_grid(build_code(*c), 1, 1);
    return build_grid(std::get<CompositionSpec>(s));
}

SuperCodeword parse_super_word(std::string_view text) { return SuperCodeword::parse(text); }
std::string format_super_word(const SuperCodeword& w) { return w.to_string(); }

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> out;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        if (!line.empty()) out.emplace_back(line);
    }
    return out;
}

Stencil parse_stencil(std::string_view text, const std::string& source) {
    std::vector<std::string> lines;
    for (auto& l : split_lines(text)) {
        const auto hash = l.find('#');
        if (hash != std::string::npos) l.erase(hash);
        lines.push_back(l);
    }
    std::size_t rows = 0, cols = 0, line_no = 0;
    bool have_header = false;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (const auto& l : lines) {
        ++line_no;
        std::istringstream in(l);
        std::string first;
        if (!(in >> first)) continue;
        const auto fail = [&](const std::string& msg) {
            throw ParseError(source + ": entry " + std::to_string(line_no) + ": " + msg);
        };
        if (first == "grid") {
            if (have_header) fail("second grid header");
            if (!(in >> rows >> cols) || rows == 0 || cols == 0) fail("grid header needs two positive sizes");
            have_header = true;
        } else {
            if (!have_header) fail("cell listed before the grid header");
            std::size_t r = 0, c = 0;
            std::istringstream pair(l);
            if (!(pair >> r >> c)) fail("expected \"row col\"");
            std::string extra;
            if (pair >> extra) fail("unexpected text after \"row col\"");
            if (r >= rows || c >= cols)
                fail("cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + std::to_string(rows) +
                     "x" + std::to_string(cols));
            cells.emplace_back(r, c);
        }
    }
    if (!have_header) throw ParseError(source + ": missing \"grid R C\" header");
    try {
        return Stencil{rows, cols, CellMask::from_positions(cells, cols)};
    } catch (const ConstraintError& e) {
        throw ParseError(source + ": " + e.what());
    }
}

}  // namespace supercode
