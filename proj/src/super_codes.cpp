#include "supercode/super_codes.hpp"

#include <numeric>
#include <type_traits>

namespace supercode {

std::size_t SuperCodeword::total_length() const {
    std::size_t n = 0;
    for (const auto& s : segments) n += s.size();
    return n;
}

std::string SuperCodeword::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out += '|';
        out += segments[i].to_string();
    }
    return out;
}

SuperCodeword SuperCodeword::parse(std::string_view text) {
    SuperCodeword w;
    for (auto& s : parse_segments(text)) {
        if (!s) throw ParseError("super word: absent cell not allowed here");
        w.segments.push_back(std::move(*s));
    }
    return w;
}

std::vector<std::optional<BitVector>> parse_segments(std::string_view text) {
    std::vector<std::optional<BitVector>> out;
    std::size_t start = 0;
    std::size_t index = 0;
    while (true) {
        const std::size_t bar = text.find('|', start);
        const std::string_view seg = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
        if (seg.empty()) throw ParseError("segment " + std::to_string(index) + " is empty");
        if (seg == kAbsentToken) {
            out.emplace_back(std::nullopt);
        } else {
            for (std::size_t i = 0; i < seg.size(); ++i)
                if (seg[i] != '0' && seg[i] != '1')
                    throw ParseError("segment " + std::to_string(index) + ": illegal character at offset " +
                                     std::to_string(start + i));
            out.emplace_back(BitVector::from_string(seg));
        }
        if (bar == std::string_view::npos) break;
        start = bar + 1;
        ++index;
    }
    return out;
}

std::string format_segments(const std::vector<std::optional<BitVector>>& segments) {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out += '|';
        out += segments[i] ? segments[i]->to_string() : std::string(kAbsentToken);
    }
    return out;
}

SuperRowCode row_new(std::vector<LinearCode> codes) {
    if (codes.empty()) throw ConstraintError("row composition needs at least one component");
    const std::size_t m = codes.front().checks();
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (codes[i].checks() != m)
            throw ConstraintError("row composition: component " + std::to_string(i) + " has " +
                                  std::to_string(codes[i].checks()) + " check symbols, component 0 has " +
                                  std::to_string(m) + " (row codes need equal check-symbol counts)");
    return SuperRowCode(std::move(codes));
}

SuperColumnCode col_new(std::vector<LinearCode> codes) {
    if (codes.empty()) throw ConstraintError("column composition needs at least one component");
    const std::size_t n = codes.front().n();
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (codes[i].n() != n)
            throw ConstraintError("column composition: component " + std::to_string(i) + " has length " +
                                  std::to_string(codes[i].n()) + ", component 0 has " + std::to_string(n) +
                                  " (column codes need equal lengths)");
    return SuperColumnCode(std::move(codes));
}

namespace {

std::size_t sum_k(const std::vector<LinearCode>& cs) {
    std::size_t s = 0;
    for (const auto& c : cs) s += c.k();
    return s;
}

std::uint64_t pow2_checked(std::size_t e) {
    if (e >= 64) throw CapacityError("cardinality 2^" + std::to_string(e) + " does not fit in 64 bits");
    return std::uint64_t{1} << e;
}

std::vector<Syndrome> syndromes(const std::vector<LinearCode>& cs, const SuperCodeword& y) {
    if (y.segments.size() != cs.size())
        throw DimensionError("word has " + std::to_string(y.segments.size()) + " segments, code has " +
                             std::to_string(cs.size()) + " components");
    std::vector<Syndrome> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (y.segments[i].size() != cs[i].n())
            throw DimensionError("segment " + std::to_string(i) + " has length " +
                                 std::to_string(y.segments[i].size()) + ", component length " +
                                 std::to_string(cs[i].n()));
        out.push_back(cs[i].syndrome(y.segments[i]));
    }
    return out;
}

SuperCodeword encode_all(const std::vector<LinearCode>& cs, const std::vector<BitVector>& msgs) {
    if (msgs.size() != cs.size())
        throw DimensionError(std::to_string(msgs.size()) + " messages for " + std::to_string(cs.size()) +
                             " components");
    SuperCodeword w;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (msgs[i].size() != cs[i].k())
            throw DimensionError("message " + std::to_string(i) + " has length " + std::to_string(msgs[i].size()) +
                                 ", component dimension " + std::to_string(cs[i].k()));
        w.segments.push_back(cs[i].encode(msgs[i]));
    }
    return w;
}

SuperDecodeResult decode_all(const std::vector<LinearCode>& cs, const SuperCodeword& y) {
    syndromes(cs, y);  // shape check
    SuperDecodeResult r;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto d = cs[i].decode(y.segments[i]);
        r.codeword.segments.push_back(std::move(d.codeword));
        r.error.segments.push_back(std::move(d.error));
    }
    return r;
}

bool all_zero(const std::vector<Syndrome>& ss) {
    for (const auto& s : ss)
        if (!s.is_zero()) return false;
    return true;
}

Rational rate_of(const std::vector<LinearCode>& cs) {
    std::size_t n = 0;
    for (const auto& c : cs) n += c.n();
    return Rational::make(sum_k(cs), n);
}

std::size_t min_distance_sum(const std::vector<LinearCode>& cs) {
    std::size_t d = 0;
    for (const auto& c : cs) d += c.min_distance();
    return d;
}

std::vector<std::size_t> cumulative_cuts(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> cuts;
    std::size_t at = 0;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        at += sizes[i];
        if (at > 0 && (cuts.empty() || cuts.back() < at)) cuts.push_back(at);
    }
    const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    while (!cuts.empty() && cuts.back() >= total) cuts.pop_back();
    return cuts;
}

}  // namespace

std::size_t log2_cardinality(const SuperRowCode& rc) { return sum_k(rc.components()); }
std::size_t log2_cardinality(const SuperColumnCode& cc) { return sum_k(cc.components()); }
std::uint64_t cardinality(const SuperRowCode& rc) { return pow2_checked(log2_cardinality(rc)); }
std::uint64_t cardinality(const SuperColumnCode& cc) { return pow2_checked(log2_cardinality(cc)); }

SuperCodeword row_encode(const SuperRowCode& rc, const std::vector<BitVector>& m) {
    return encode_all(rc.components(), m);
}
std::vector<Syndrome> row_syndrome(const SuperRowCode& rc, const SuperCodeword& y) {
    return syndromes(rc.components(), y);
}
bool row_contains(const SuperRowCode& rc, const SuperCodeword& y) { return all_zero(row_syndrome(rc, y)); }
SuperDecodeResult row_decode(const SuperRowCode& rc, const SuperCodeword& y) { return decode_all(rc.components(), y); }

SuperCodeword col_encode(const SuperColumnCode& cc, const std::vector<BitVector>& m) {
    return encode_all(cc.components(), m);
}
std::vector<Syndrome> col_syndrome(const SuperColumnCode& cc, const SuperCodeword& y) {
    return syndromes(cc.components(), y);
}
bool col_contains(const SuperColumnCode& cc, const SuperCodeword& y) { return all_zero(col_syndrome(cc, y)); }
SuperDecodeResult col_decode(const SuperColumnCode& cc, const SuperCodeword& y) {
    return decode_all(cc.components(), y);
}

std::size_t super_distance(const SuperCodeword& x, const SuperCodeword& y) {
    if (x.segments.size() != y.segments.size())
        throw DimensionError("super words with " + std::to_string(x.segments.size()) + " and " +
                             std::to_string(y.segments.size()) + " segments");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.segments.size(); ++i) d += distance(x.segments[i], y.segments[i]);
    return d;
}

std::size_t super_weight(const SuperCodeword& x) {
    std::size_t w = 0;
    for (const auto& s : x.segments) w += s.weight();
    return w;
}

std::size_t super_min_distance(const SuperRowCode& rc) { return min_distance_sum(rc.components()); }
std::size_t super_min_distance(const SuperColumnCode& cc) { return min_distance_sum(cc.components()); }

SuperRowCode row_dual(const SuperRowCode& rc) {
    const auto& cs = rc.components();
    std::vector<LinearCode> duals;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].n() != 2 * cs[i].k())
            throw ConstraintError("row dual: component " + std::to_string(i) + " is (" + std::to_string(cs[i].n()) +
                                  "," + std::to_string(cs[i].k()) + "), needs n = 2k");
        if (cs[i].n() != cs[0].n())
            throw ConstraintError("row dual: component " + std::to_string(i) + " has length " +
                                  std::to_string(cs[i].n()) + ", component 0 has " + std::to_string(cs[0].n()));
        duals.push_back(cs[i].dual());
    }
    return row_new(std::move(duals));
}

SuperGeneratorResult row_generator(const SuperRowCode& rc) {
    const auto& cs = rc.components();
    SuperGeneratorResult r;
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i].k() != cs[0].k()) {
            r.reason = "component " + std::to_string(i) + " has " + std::to_string(cs[i].k()) +
                       " message symbols, component 0 has " + std::to_string(cs[0].k());
            return r;
        }
    BitMatrix g = cs[0].generator();
    std::vector<std::size_t> widths{cs[0].n()};
    r.uniform_width = true;
    for (std::size_t i = 1; i < cs.size(); ++i) {
        g = g.hconcat(cs[i].generator());
        widths.push_back(cs[i].n());
        if (cs[i].n() != cs[0].n()) r.uniform_width = false;
    }
    r.generator = SuperMatrix(std::move(g), {}, cumulative_cuts(widths));
    return r;
}

SuperMatrix row_parity(const SuperRowCode& rc) {
    const auto& cs = rc.components();
    BitMatrix h = cs[0].parity();
    std::vector<std::size_t> widths{cs[0].n()};
    for (std::size_t i = 1; i < cs.size(); ++i) {
        h = h.hconcat(cs[i].parity());
        widths.push_back(cs[i].n());
    }
    return SuperMatrix(std::move(h), {}, cumulative_cuts(widths));
}

SuperMatrix col_generator(const SuperColumnCode& cc) {
    const auto& cs = cc.components();
    BitMatrix g(0, cc.length());
    std::vector<std::size_t> heights;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        StandardForm sf;
        try {
            sf = standardize(cs[i]);
        } catch (const ConstraintError& e) {
            throw ConstraintError("column generator: component " + std::to_string(i) + ": " + e.what());
        }
        g = g.vconcat(sf.g);
        heights.push_back(sf.g.rows());
    }
    return SuperMatrix(std::move(g), cumulative_cuts(heights), {});
}

SuperMatrix col_parity(const SuperColumnCode& cc) {
    const auto& cs = cc.components();
    BitMatrix h(0, cc.length());
    std::vector<std::size_t> heights;
    for (const auto& c : cs) {
        h = h.vconcat(c.parity());
        heights.push_back(c.checks());
    }
    return SuperMatrix(std::move(h), cumulative_cuts(heights), {});
}

namespace {

std::vector<LinearCode> family_members(const FamilyParams& params) {
    std::vector<LinearCode> out;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RepetitionFamily>) {
                for (std::size_t i = 0; i < p.count; ++i) out.push_back(repetition(p.length));
            } else if constexpr (std::is_same_v<T, ParityFamily>) {
                for (auto n : p.lengths) out.push_back(parity_check(n));
            } else if constexpr (std::is_same_v<T, HammingFamily>) {
                for (auto m : p.orders) out.push_back(hamming(m));
            } else {
                for (const auto& s : p.specs) out.push_back(cyclic_from_poly(s));
            }
        },
        params);
    return out;
}

}  // namespace

SuperRowCode row_family(const FamilyParams& params) { return row_new(family_members(params)); }
SuperColumnCode col_family(const FamilyParams& params) { return col_new(family_members(params)); }

Rational super_transmission_rate(const SuperRowCode& rc) { return rate_of(rc.components()); }
Rational super_transmission_rate(const SuperColumnCode& cc) { return rate_of(cc.components()); }

}  // namespace supercode
