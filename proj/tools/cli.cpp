#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "supercode/approx_decode.hpp"
#include "supercode/channel_sim.hpp"
#include "supercode/spec_io.hpp"

namespace supercode::cli {

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
};

std::vector<std::string> lines_or_stdin(const std::vector<std::string>& given, std::istream& in) {
    if (!given.empty()) return given;
    std::ostringstream os;
    os << in.rdbuf();
    return split_lines(os.str());
}

std::vector<std::string> stream_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return lines_or_stdin({}, in);
    return split_lines(read_file(path));
}

BitVector bits(const std::string& s, const char* what) {
    if (s.empty()) throw ParseError(std::string(what) + ": empty word");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != '0' && s[i] != '1')
            throw ParseError(std::string(what) + " \"" + s + "\": illegal character at offset " + std::to_string(i));
    return BitVector::from_string(s);
}

void print_rows(std::ostream& out, const BitMatrix& m) {
    for (const auto& r : m.to_strings()) out << r << '\n';
}

std::string cardinality_text(std::size_t log2) {
    std::string s = "2^" + std::to_string(log2);
    if (log2 < 64) s += " = " + std::to_string(std::uint64_t{1} << log2);
    return s;
}

// ---- code ----

LinearCode spec_code(const std::string& path) {
    const Spec s = load_spec(path);
    if (const auto* c = std::get_if<CodeSpec>(&s)) return build_code(*c);
    const GridCode g = build_grid(s);
    if (g.rows() != 1 || g.cols() != 1) throw ConstraintError(path + ": expected a single code, found a composition");
    return g.cell(0, 0);
}

void code_info(const LinearCode& c, bool cosets, bool words, std::ostream& out) {
    out << "n " << c.n() << "\nk " << c.k() << "\nchecks " << c.checks() << '\n';
    if (c.k() <= kMaxEnumerableDimension) {
        out << "d_min " << c.min_distance() << "\ncorrects " << c.error_capability() << '\n';
        out << "cyclic " << (c.is_cyclic() ? "yes" : "no") << '\n';
    }
    out << "rate " << c.transmission_rate().to_string() << "\nH\n";
    print_rows(out, c.parity());
    out << "G\n";
    print_rows(out, c.generator());
    if (words) {
        out << "words\n";
        for (const auto& w : c.codewords()) out << w.to_string() << '\n';
    }
    if (cosets) {
        out << "cosets\n";
        for (const auto& [s, leader] : c.coset_table().entries())
            out << (s.size() ? s.to_string() : "-") << ' ' << leader.to_string() << '\n';
    }
}

int code_decode(const LinearCode& c, const std::vector<std::string>& words, const std::string& strategy,
                std::ostream& out) {
    bool detected = false;
    for (const auto& w : words) {
        const BitVector y = bits(w, "received word");
        const Syndrome s = c.syndrome(y);
        detected = detected || !s.is_zero();
        BitVector x = strategy == "approx" ? approx_decode(c, y) : c.decode(y).codeword;
        out << "codeword=" << x.to_string() << " error=" << (x ^ y).to_string()
            << " syndrome=" << (s.size() ? s.to_string() : "-") << '\n';
    }
    return detected ? kDetected : kOk;
}

// ---- super ----

struct AnySuper {
    std::optional<SuperRowCode> row;
    std::optional<SuperColumnCode> col;
    const std::vector<LinearCode>& components() const { return row ? row->components() : col->components(); }
};

AnySuper spec_super(const std::string& path) {
    const Spec s = load_spec(path);
    const auto* c = std::get_if<CompositionSpec>(&s);
    if (!c || c->shape == Shape::grid) throw ConstraintError(path + ": expected a row or column composition");
    AnySuper a;
    if (c->shape == Shape::row)
        a.row = build_row(*c);
    else
        a.col = build_column(*c);
    return a;
}

std::string rate_text(const AnySuper& a) {
    return (a.row ? super_transmission_rate(*a.row) : super_transmission_rate(*a.col)).to_string();
}

void super_info(const AnySuper& a, std::ostream& out) {
    const auto& cs = a.components();
    out << "shape " << (a.row ? "row" : "column") << "\ncomponents " << cs.size() << '\n';
    bool small = true;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out << "component " << i << " n=" << cs[i].n() << " k=" << cs[i].k() << " checks=" << cs[i].checks();
        if (cs[i].k() <= kMaxEnumerableDimension)
            out << " d=" << cs[i].min_distance();
        else
            small = false;
        out << '\n';
    }
    out << "cardinality " << cardinality_text(a.row ? log2_cardinality(*a.row) : log2_cardinality(*a.col)) << '\n';
    out << "rate " << rate_text(a) << '\n';
    if (small) out << "d_min " << (a.row ? super_min_distance(*a.row) : super_min_distance(*a.col)) << '\n';
    out << "H\n" << (a.row ? row_parity(*a.row) : col_parity(*a.col)).to_display();
    if (a.row) {
        const auto g = row_generator(*a.row);
        if (g.defined())
            out << "G\n" << g.generator->to_display();
        else
            out << "G undefined: " << g.reason << '\n';
    } else {
        try {
            out << "G\n" << col_generator(*a.col).to_display();
        } catch (const ConstraintError& e) {
            out << "G undefined: " << e.what() << '\n';
        }
    }
}

// ---- grid ----

GridCode spec_grid(const std::string& path) { return build_grid(load_spec(path)); }

GridCodeword read_grid(const GridCode& g, const std::string& path, const std::string& from, std::istream& in) {
    const auto lines = stream_input(path, in);
    return from == "col" ? from_col_stream(g, lines) : from_row_stream(g, lines);
}

void write_grid(const GridCodeword& x, const std::string& to, std::ostream& out) {
    for (const auto& l : to == "col" ? to_col_stream(x) : to_row_stream(x)) out << l << '\n';
}

// Messages come as a row stream whose segments are the cell messages.
GridCodeword read_messages(const GridCode& g, const std::string& path, std::istream& in) {
    const auto lines = stream_input(path, in);
    if (lines.size() != g.rows())
        throw DimensionError("message stream has " + std::to_string(lines.size()) + " lines, grid has " +
                             std::to_string(g.rows()) + " rows");
    GridCodeword m(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        auto segs = parse_segments(lines[i]);
        if (segs.size() != g.cols())
            throw DimensionError("message row " + std::to_string(i) + " has " + std::to_string(segs.size()) +
                                 " segments, grid has " + std::to_string(g.cols()) + " columns");
        for (std::size_t j = 0; j < g.cols(); ++j) m.at(i, j) = std::move(segs[j]);
    }
    return m;
}

bool any_nonzero(const SyndromeGrid& s) {
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (s.at(i, j) && !s.at(i, j)->is_zero()) return true;
    return false;
}

CellMask parse_ap(const std::string& text) {
    std::vector<std::size_t> v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        unsigned long long n = 0;
        try {
            n = std::stoull(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw ParseError("--ap \"" + text + "\": expected first,diff,last");
        v.push_back(static_cast<std::size_t>(n));
    }
    if (v.size() != 3) throw ParseError("--ap \"" + text + "\": expected first,diff,last");
    return mask_from_ap(v[0], v[1], v[2]);
}

Strategy parse_strategy(const std::string& s) {
    if (s == "per_cell") return Strategy::per_cell_decode;
    if (s == "majority") return Strategy::majority_vote;
    return Strategy::simultaneous;
}

void build_app(CLI::App& app, Io io, int& status) {
    app.require_subcommand(1);
    app.fallthrough(false);

    // code
    auto* code = app.add_subcommand("code", "single linear codes");
    code->require_subcommand(1);
    {
        auto* info = code->add_subcommand("info", "parameters, H and G");
        auto spec = std::make_shared<std::string>();
        auto cosets = std::make_shared<bool>(false);
        info->add_option("--spec", *spec, "code spec file")->required();
        auto list_words = std::make_shared<bool>(false);
        info->add_flag("--cosets", *cosets, "also print the coset leader table");
        info->add_flag("--words", *list_words, "also list every codeword");
        info->callback([=] { code_info(spec_code(*spec), *cosets, *list_words, io.out); });

        auto* enc = code->add_subcommand("encode", "message -> codeword");
        auto espec = std::make_shared<std::string>();
        auto msgs = std::make_shared<std::vector<std::string>>();
        enc->add_option("--spec", *espec, "code spec file")->required();
        enc->add_option("messages", *msgs, "messages (stdin when omitted)");
        enc->callback([=] {
            const auto c = spec_code(*espec);
            for (const auto& m : lines_or_stdin(*msgs, io.in))
                io.out << c.encode(bits(m, "message")).to_string() << '\n';
        });

        auto* dec = code->add_subcommand("decode", "received word -> codeword and error");
        auto dspec = std::make_shared<std::string>();
        auto words = std::make_shared<std::vector<std::string>>();
        auto strategy = std::make_shared<std::string>("coset");
        dec->add_option("--spec", *dspec, "code spec file")->required();
        dec->add_option("--strategy", *strategy, "coset or approx")->check(CLI::IsMember({"coset", "approx"}));
        dec->add_option("words", *words, "received words (stdin when omitted)");
        dec->callback([=, &status] {
            status = code_decode(spec_code(*dspec), lines_or_stdin(*words, io.in), *strategy, io.out);
        });

        auto* apx = code->add_subcommand("approx", "pseudo best approximation over an explicit basis");
        auto basis = std::make_shared<std::string>();
        auto betas = std::make_shared<std::vector<std::string>>();
        apx->add_option("--basis", *basis, "basis vectors, comma separated")->required();
        apx->add_option("vectors", *betas, "vectors to approximate (stdin when omitted)");
        apx->callback([=] {
            std::vector<BitVector> vs;
            std::stringstream ss(*basis);
            for (std::string b; std::getline(ss, b, ',');) vs.push_back(bits(b, "basis vector"));
            const Basis bs(vs);
            for (const auto& b : lines_or_stdin(*betas, io.in)) {
                const auto a = pseudo_best_approx(bits(b, "vector"), bs);
                io.out << (a ? a->to_string() : "vanishes") << '\n';
            }
        });

        auto* dotc = code->add_subcommand("dot", "pseudo inner product of two words");
        auto xy = std::make_shared<std::vector<std::string>>();
        dotc->add_option("words", *xy, "two words")->required()->expected(2);
        dotc->callback([=] { io.out << pseudo_inner(bits((*xy)[0], "word"), bits((*xy)[1], "word")) << '\n'; });
    }

    // super
    auto* sup = app.add_subcommand("super", "row and column compositions");
    sup->require_subcommand(1);
    {
        auto add = [&](const char* name, const char* desc) {
            auto* s = sup->add_subcommand(name, desc);
            auto spec = std::make_shared<std::string>();
            s->add_option("--spec", *spec, "composition spec file")->required();
            return std::make_pair(s, spec);
        };
        auto [nw, nspec] = add("new", "validate and describe");
        nw->callback([=, spec = nspec] { super_info(spec_super(*spec), io.out); });

        auto [rt, rspec] = add("rate", "transmission rate");
        rt->callback([=, spec = rspec] { io.out << rate_text(spec_super(*spec)) << '\n'; });

        auto [enc, espec] = add("encode", "segment messages -> super codeword");
        auto msgs = std::make_shared<std::vector<std::string>>();
        enc->add_option("messages", *msgs, "super words of messages (stdin when omitted)");
        enc->callback([=, spec = espec] {
            const auto a = spec_super(*spec);
            for (const auto& m : lines_or_stdin(*msgs, io.in)) {
                const auto segs = parse_super_word(m).segments;
                io.out << (a.row ? row_encode(*a.row, segs) : col_encode(*a.col, segs)).to_string() << '\n';
            }
        });

        auto [dec, dspec] = add("decode", "super word -> codeword and error");
        auto words = std::make_shared<std::vector<std::string>>();
        dec->add_option("words", *words, "received super words (stdin when omitted)");
        dec->callback([=, &status, spec = dspec] {
            const auto a = spec_super(*spec);
            bool detected = false;
            for (const auto& w : lines_or_stdin(*words, io.in)) {
                const auto y = parse_super_word(w);
                const auto ok = a.row ? row_contains(*a.row, y) : col_contains(*a.col, y);
                detected = detected || !ok;
                const auto d = a.row ? row_decode(*a.row, y) : col_decode(*a.col, y);
                io.out << "codeword=" << d.codeword.to_string() << " error=" << d.error.to_string() << '\n';
            }
            status = detected ? kDetected : kOk;
        });

        auto [ws, wspec] = add("words", "list every super codeword");
        ws->callback([=, spec = wspec] {
            const auto a = spec_super(*spec);
            const auto& cs = a.components();
            std::size_t log2 = 0;
            for (const auto& c : cs) log2 += c.k();
            if (log2 > 16) throw CapacityError("super code has 2^" + std::to_string(log2) + " words, listing stops at 2^16");
            SuperCodeword cur;
            const std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == cs.size()) {
                    io.out << cur.to_string() << '\n';
                    return;
                }
                for (const auto& w : cs[i].codewords()) {
                    cur.segments.push_back(w);
                    walk(i + 1);
                    cur.segments.pop_back();
                }
            };
            walk(0);
        });

        auto [du, duspec] = add("dual", "componentwise dual of a row code");
        du->callback([=, spec = duspec] {
            const auto a = spec_super(*spec);
            if (!a.row) throw ConstraintError(*spec + ": dual is defined for row compositions");
            const auto d = row_dual(*a.row);
            for (std::size_t i = 0; i < d.size(); ++i) {
                io.out << "component " << i << '\n';
                print_rows(io.out, d.components()[i].generator());
            }
        });
    }

    // grid
    auto* grid = app.add_subcommand("grid", "m x n grid codes");
    grid->require_subcommand(1);
    {
        struct Common {
            std::string spec, in, from = "row", to = "row";
        };
        auto add = [&](const char* name, const char* desc, bool with_input) {
            auto* s = grid->add_subcommand(name, desc);
            auto c = std::make_shared<Common>();
            s->add_option("--spec", c->spec, "grid or code spec file")->required();
            if (with_input) {
                s->add_option("--in", c->in, "input stream file (stdin when omitted)");
                s->add_option("--from", c->from, "input stream layout")->check(CLI::IsMember({"row", "col"}));
            }
            return std::make_pair(s, c);
        };

        auto [info, ic] = add("info", "grid shape and constraints", false);
        info->callback([=, c = ic] {
            const auto g = spec_grid(c->spec);
            io.out << "rows " << g.rows() << "\ncols " << g.cols() << "\ncolumn_lengths";
            for (std::size_t j = 0; j < g.cols(); ++j) io.out << ' ' << g.column_length(j);
            io.out << "\nrow_checks";
            for (std::size_t i = 0; i < g.rows(); ++i) io.out << ' ' << g.row_checks(i);
            io.out << "\nuniform " << (g.is_uniform() ? "yes" : "no") << "\ncyclic "
                   << (is_cyclic_grid(g) ? "yes" : "no") << '\n';
        });

        auto [enc, ec] = add("encode", "row stream of messages -> grid codeword", false);
        enc->add_option("--in", ec->in, "message stream file (stdin when omitted)");
        enc->add_option("--to", ec->to, "output stream layout")->check(CLI::IsMember({"row", "col"}));
        enc->callback([=, c = ec] {
            const auto g = spec_grid(c->spec);
            write_grid(grid_encode(g, read_messages(g, c->in, io.in)), c->to, io.out);
        });

        auto [dec, dc] = add("decode", "per-cell syndrome decoding", true);
        auto syn = std::make_shared<bool>(false);
        dec->add_option("--to", dc->to, "output stream layout")->check(CLI::IsMember({"row", "col"}));
        dec->add_flag("--syndromes", *syn, "print the syndrome grid instead");
        dec->callback([=, &status, c = dc] {
            const auto g = spec_grid(c->spec);
            const auto y = read_grid(g, c->in, c->from, io.in);
            const auto s = grid_syndrome(g, y);
            write_grid(*syn ? s : grid_decode(g, y).codeword, c->to, io.out);
            status = any_nonzero(s) ? kDetected : kOk;
        });

        auto [str, sc] = add("stream", "convert between row and column streams", true);
        str->add_option("--to", sc->to, "output stream layout")->check(CLI::IsMember({"row", "col"}));
        str->callback([=, c = sc] {
            const auto g = spec_grid(c->spec);
            write_grid(read_grid(g, c->in, c->from, io.in), c->to, io.out);
        });

        auto [vote, vc] = add("vote", "majority vote over a uniform grid", true);
        vote->callback([=, c = vc] {
            const auto g = spec_grid(c->spec);
            io.out << majority_vote(g, read_grid(g, c->in, c->from, io.in)).to_string() << '\n';
        });

        auto [best, bc] = add("best-row", "row with the most consistent cells", true);
        auto by_weight = std::make_shared<bool>(false);
        best->add_flag("--by-weight", *by_weight, "rank rows by total decoded error weight");
        best->callback([=, c = bc] {
            const auto g = spec_grid(c->spec);
            io.out << best_row_select(g, read_grid(g, c->in, c->from, io.in),
                                      *by_weight ? RowCriterion::error_weight : RowCriterion::zero_syndromes)
                   << '\n';
        });

        auto [rec, rc] = add("reconcile", "merge a row stream copy and a column stream copy", false);
        auto rows = std::make_shared<std::string>(), cols = std::make_shared<std::string>();
        auto report = std::make_shared<bool>(false);
        rec->add_option("--rows", *rows, "row stream file")->required();
        rec->add_option("--cols", *cols, "column stream file")->required();
        rec->add_option("--to", rc->to, "output stream layout")->check(CLI::IsMember({"row", "col"}));
        rec->add_flag("--report", *report, "list disagreeing cells after the grid");
        rec->callback([=, c = rc] {
            const auto g = spec_grid(c->spec);
            const auto r = simultaneous_reconcile(g, split_lines(read_file(*rows)), split_lines(read_file(*cols)));
            write_grid(r.grid, c->to, io.out);
            if (!*report) return;
            for (const auto& cf : r.conflicts) {
                const auto show = [](const std::optional<BitVector>& v) {
                    return v ? v->to_string() : std::string(kAbsentToken);
                };
                io.out << "# conflict " << cf.row << ' ' << cf.col << " row=" << show(cf.row_copy)
                       << " col=" << show(cf.col_copy) << " chose=" << (cf.chosen == CopySource::row ? "row" : "col")
                       << '\n';
            }
        });

        auto [chart, cc] = add("chart", "cells marked in a true chart", true);
        auto chart_file = std::make_shared<std::string>();
        chart->add_option("--chart", *chart_file, "chart file of '*' and '.'")->required();
        chart->callback([=, c = cc] {
            const auto g = spec_grid(c->spec);
            const auto x = read_grid(g, c->in, c->from, io.in);
            for (const auto& w : apply_chart(x, TrueChart::parse(read_file(*chart_file)))) io.out << w.to_string() << '\n';
        });

        auto [mask, mc] = add("mask", "cells selected by progressions or a stencil", true);
        auto aps = std::make_shared<std::vector<std::string>>();
        auto stencil = std::make_shared<std::string>();
        mask->add_option("--ap", *aps, "first,diff,last (1-based row-major cells); repeatable");
        mask->add_option("--stencil", *stencil, "stencil file of 0-based row col pairs");
        mask->callback([=, c = mc] {
            if (aps->empty() == stencil->empty()) throw CLI::ValidationError("give either --ap or --stencil");
            const auto g = spec_grid(c->spec);
            const auto x = read_grid(g, c->in, c->from, io.in);
            std::optional<CellMask> m;
            if (!stencil->empty()) {
                const auto st = parse_stencil(read_file(*stencil), *stencil);
                if (st.rows != g.rows() || st.cols != g.cols())
                    throw DimensionError(*stencil + ": stencil is " + std::to_string(st.rows) + "x" +
                                         std::to_string(st.cols) + ", grid is " + std::to_string(g.rows()) + "x" +
                                         std::to_string(g.cols()));
                m = st.mask;
            }
            for (const auto& a : *aps) m = m ? m->merged(parse_ap(a)) : parse_ap(a);
            const auto words = apply_mask(x, *m);
            for (std::size_t i = 0; i < words.size(); ++i)
                io.out << 'y' << m->cells()[i] << ' ' << words[i].to_string() << '\n';
        });

        auto [dot, dotc] = add("dot", "cellwise dot product of two grid words", true);
        auto with = std::make_shared<std::string>();
        dot->add_option("--with", *with, "second grid word stream file")->required();
        dot->callback([=, c = dotc] {
            const auto g = spec_grid(c->spec);
            const auto x = read_grid(g, c->in, c->from, io.in);
            const auto lines = split_lines(read_file(*with));
            const auto y = c->from == "col" ? from_col_stream(g, lines) : from_row_stream(g, lines);
            print_rows(io.out, grid_dot(x, y));
        });

        auto [dual, duc] = add("dual", "cellwise orthogonal grid", false);
        auto list = std::make_shared<bool>(false);
        dual->add_flag("--words", *list, "list the codewords of every cell");
        dual->callback([=, c = duc] {
            const auto o = orthogonal_grid(spec_grid(c->spec));
            for (std::size_t i = 0; i < o.rows(); ++i)
                for (std::size_t j = 0; j < o.cols(); ++j) {
                    const auto& cell = o.cell(i, j);
                    io.out << "cell " << i << ' ' << j << " n=" << cell.n() << " k=" << cell.k();
                    if (*list) {
                        for (const auto& w : cell.codewords()) io.out << ' ' << w.to_string();
                    }
                    io.out << '\n';
                }
        });
    }

    // sim
    auto* sim = app.add_subcommand("sim", "binary symmetric channel experiments");
    sim->require_subcommand(1);
    {
        auto* run = sim->add_subcommand("run", "repeat transmission over a BSC");
        struct Opts {
            std::string spec, sent, word, strategy = "per_cell";
            double p = 0.0;
            std::uint64_t trials = 1000, seed = 1;
            unsigned threads = 1;
        };
        auto o = std::make_shared<Opts>();
        run->add_option("--spec", o->spec, "grid or code spec file")->required();
        run->add_option("--p", o->p, "flip probability")->required()->check(CLI::Range(0.0, 1.0));
        run->add_option("--trials", o->trials, "number of trials");
        run->add_option("--seed", o->seed, "master seed");
        run->add_option("--strategy", o->strategy, "per_cell, majority or simultaneous")
            ->check(CLI::IsMember({"per_cell", "majority", "simultaneous"}));
        run->add_option("--threads", o->threads, "worker threads (results do not depend on it)");
        auto* s1 = run->add_option("--sent", o->sent, "row stream file of the sent grid word");
        auto* s2 = run->add_option("--word", o->word, "codeword placed in every cell");
        s1->excludes(s2);
        run->callback([=] {
            const auto g = spec_grid(o->spec);
            GridCodeword sent(g.rows(), g.cols());
            if (!o->sent.empty()) {
                sent = from_row_stream(g, split_lines(read_file(o->sent)));
            } else if (!o->word.empty()) {
                sent = GridCodeword::filled(g.rows(), g.cols(), bits(o->word, "--word"));
            } else {
                for (std::size_t i = 0; i < g.rows(); ++i)
                    for (std::size_t j = 0; j < g.cols(); ++j) sent.at(i, j) = BitVector(g.column_length(j));
            }
            const auto r = run_trial(g, sent, parse_strategy(o->strategy), {o->p, o->seed}, o->trials, o->threads);
            const double rate = r.trials ? double(r.failures()) / double(r.trials) : 0.0;
            io.out << "trials " << r.trials << "\nsuccess " << r.decode_success << "\nfailures " << r.failures()
                   << "\nfailure_rate " << std::setprecision(6) << rate << "\nundetected " << r.undetected_error
                   << "\nresidual_bit_errors " << r.residual_bit_errors << '\n';
        });
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear block codes and their row, column and grid compositions", "supercode"};
    int status = kOk;
    build_app(app, Io{in, out}, status);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        app.exit(e, out, err);
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return status;
}

}  // namespace supercode::cli
