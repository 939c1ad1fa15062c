#include "rxc/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "rxc/error.hpp"

namespace rxc::io {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Content lines, without comments ('#' or, when given, `alt_comment`).
std::vector<Line> content_lines(std::string_view text, char alt_comment = '#') {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        ++number;
        std::string t = trim(text.substr(pos, end - pos));
        if (!t.empty() && t[0] != '#' && t[0] != alt_comment) out.push_back({number, std::move(t)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
    throw Error("line " + std::to_string(l.number) + ": " + what);
}

std::vector<std::string> split(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::size_t to_size(const Line& l, std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(l, "expected a nonnegative integer, got '" + std::string(s) + "'");
    return v;
}

long long to_int(const Line& l, std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(l, "expected an integer, got '" + std::string(s) + "'");
    return v;
}

// "key = value" split at the first '='.
std::optional<std::pair<std::string, std::string>> key_value(const std::string& t) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) return std::nullopt;
    return std::make_pair(trim(std::string_view(t).substr(0, eq)), trim(std::string_view(t).substr(eq + 1)));
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("write to '" + path + "' failed");
}

// ---------------------------------------------------------------- puzzles

Puzzle parse_puzzle(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> rows, cols;
    std::optional<Regex> row_uniform, col_uniform;
    std::vector<Regex> row_list, col_list;
    for (const Line& l : content_lines(text)) {
        auto kv = key_value(l.text);
        if (!kv) fail(l, "expected 'key = value'");
        const auto& [key, value] = *kv;
        auto expr = [&]() -> Regex {
            if (!alphabet) fail(l, "expression before the alphabet line");
            try {
                return parse(value, *alphabet);
            } catch (const Error& e) {
                fail(l, e.what());
            }
        };
        if (key == "alphabet") {
            if (alphabet) fail(l, "alphabet given twice");
            try {
                alphabet = Alphabet(split(value));
            } catch (const Error& e) {
                fail(l, e.what());
            }
        } else if (key == "rows") {
            rows = to_size(l, value);
        } else if (key == "cols") {
            cols = to_size(l, value);
        } else if (key == "R*") {
            if (row_uniform || !row_list.empty()) fail(l, "row expressions given twice");
            row_uniform = expr();
        } else if (key == "R") {
            if (row_uniform) fail(l, "mixes 'R*' and 'R' lines");
            row_list.push_back(expr());
        } else if (key == "C*") {
            if (col_uniform || !col_list.empty()) fail(l, "column expressions given twice");
            col_uniform = expr();
        } else if (key == "C") {
            if (col_uniform) fail(l, "mixes 'C*' and 'C' lines");
            col_list.push_back(expr());
        } else {
            fail(l, "unknown key '" + key + "'");
        }
    }
    if (!alphabet) throw Error("puzzle has no alphabet line");
    if (!row_uniform && row_list.empty()) throw Error("puzzle has no row expressions");
    if (!col_uniform && col_list.empty()) throw Error("puzzle has no column expressions");
    Puzzle p{*alphabet, row_uniform ? LineSpec::uniform(*row_uniform) : LineSpec::per_line(std::move(row_list)),
             col_uniform ? LineSpec::uniform(*col_uniform) : LineSpec::per_line(std::move(col_list)), rows, cols};
    p.validate();
    return p;
}

std::string format_puzzle(const Puzzle& p, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "alphabet =";
    for (const auto& t : p.alphabet.tokens()) out << ' ' << t;
    out << '\n';
    if (p.fixed_m) out << "rows = " << *p.fixed_m << '\n';
    if (p.fixed_n) out << "cols = " << *p.fixed_n << '\n';
    auto spec = [&](const LineSpec& s, const char* name) {
        if (s.is_uniform()) {
            out << name << "* = " << print(s.expressions().front()) << '\n';
        } else {
            for (const auto& r : s.expressions()) out << name << " = " << print(r) << '\n';
        }
    };
    spec(p.rows, "R");
    spec(p.cols, "C");
    return out.str();
}

// ---------------------------------------------------------------- grids

Grid parse_grid(std::string_view text, const Alphabet& alphabet) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error("grid file is empty");
    const auto dims = split(lines[0].text);
    if (dims.size() != 2) fail(lines[0], "expected 'm n'");
    const std::size_t m = to_size(lines[0], dims[0]), n = to_size(lines[0], dims[1]);
    if (m == 0 || n == 0) fail(lines[0], "dimensions must be positive");
    if (lines.size() != m + 1) {
        throw Error("grid declares " + std::to_string(m) + " rows but has " + std::to_string(lines.size() - 1));
    }
    std::vector<Symbol> cells;
    for (std::size_t i = 0; i < m; ++i) {
        const Line& l = lines[i + 1];
        const auto toks = split(l.text);
        if (toks.size() != n) fail(l, "expected " + std::to_string(n) + " symbols, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            auto s = alphabet.find(t);
            if (!s) fail(l, "unknown symbol '" + t + "'");
            cells.push_back(*s);
        }
    }
    return Grid(alphabet, m, n, std::move(cells));
}

std::string format_grid(const Grid& g) {
    std::ostringstream out;
    out << g.m() << ' ' << g.n() << '\n';
    for (std::size_t i = 0; i < g.m(); ++i) out << g.alphabet().spell(g.row(i)) << '\n';
    return out.str();
}

// ---------------------------------------------------------------- machines

TuringMachine parse_machine(std::string_view text) {
    std::optional<std::string> blank, start, halt;
    std::optional<std::vector<std::string>> tape;
    std::vector<TuringMachine::Rule> rules;
    for (const Line& l : content_lines(text)) {
        const auto toks = split(l.text);
        if (toks.front() == "delta") {
            // delta q g = q' g' L|R
            if (toks.size() != 7 || toks[3] != "=") fail(l, "expected 'delta q g = q2 g2 L|R'");
            Move mv;
            if (toks[6] == "L") mv = Move::Left;
            else if (toks[6] == "R") mv = Move::Right;
            else fail(l, "move must be L or R");
            rules.push_back({toks[1], toks[2], toks[4], toks[5], mv});
            continue;
        }
        auto kv = key_value(l.text);
        if (!kv) fail(l, "expected 'key = value' or a delta line");
        const auto& [key, value] = *kv;
        auto single = [&]() {
            const auto v = split(value);
            if (v.size() != 1) fail(l, "'" + key + "' takes one name");
            return v.front();
        };
        if (key == "blank") blank = single();
        else if (key == "start") start = single();
        else if (key == "halt") halt = single();
        else if (key == "tape") tape = split(value);
        else fail(l, "unknown key '" + key + "'");
    }
    if (!blank || !start || !halt || !tape) throw Error("machine needs blank, start, halt and tape lines");
    return TuringMachine(*tape, *blank, *start, *halt, std::move(rules));
}

std::string format_machine(const TuringMachine& m) {
    std::ostringstream out;
    out << "blank = " << m.symbol_name(m.blank()) << '\n';
    out << "start = " << m.state_name(m.start()) << '\n';
    out << "halt = " << m.state_name(m.halt()) << '\n';
    out << "tape =";
    for (const auto& a : m.symbol_names()) out << ' ' << a;
    out << '\n';
    for (const auto& r : m.rules()) {
        out << "delta " << r.state << ' ' << r.read << " = " << r.next << ' ' << r.write << ' '
            << (r.move == Move::Left ? 'L' : 'R') << '\n';
    }
    return out.str();
}

Tape parse_tape(const TuringMachine& m, std::string_view text) {
    const auto toks = split(text);
    if (toks.size() == 1 && !m.find_symbol(toks[0])) {
        Tape t;
        for (char c : toks[0]) t.push_back(m.symbol(std::string(1, c)));
        return t;
    }
    return m.tape_from_names(toks);
}

// ---------------------------------------------------------------- DIMACS

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    std::optional<std::size_t> declared_clauses;
    std::vector<Literal> current;
    for (const Line& l : content_lines(text, 'c')) {
        const auto toks = split(l.text);
        if (toks.front() == "p") {
            if (declared_clauses) fail(l, "second problem line");
            if (toks.size() != 4 || toks[1] != "cnf") fail(l, "expected 'p cnf V C'");
            f.variables = to_size(l, toks[2]);
            declared_clauses = to_size(l, toks[3]);
            continue;
        }
        if (toks.front() == "%") break;  // end marker used by some benchmark sets
        if (!declared_clauses) fail(l, "clause before the problem line");
        for (const auto& t : toks) {
            const long long v = to_int(l, t);
            if (v == 0) {
                if (current.empty()) fail(l, "empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
            if (var > f.variables) fail(l, "variable " + std::to_string(var) + " out of range");
            current.push_back({static_cast<std::uint32_t>(var - 1), v > 0});
        }
    }
    if (!declared_clauses) throw Error("missing 'p cnf' line");
    if (!current.empty()) f.clauses.push_back(std::move(current));
    if (f.clauses.size() != *declared_clauses) {
        throw Error("declared " + std::to_string(*declared_clauses) + " clauses, found " +
                    std::to_string(f.clauses.size()));
    }
    f.validate();
    return f;
}

std::string format_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const Literal& lit : c) out << (lit.positive ? "" : "-") << lit.var + 1 << ' ';
        out << "0\n";
    }
    return out.str();
}

// ---------------------------------------------------------------- graphs

GraphInstance parse_graph(std::string_view text, std::size_t k) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error("graph file is empty");
    const auto head = split(lines[0].text);
    if (head.size() != 2) fail(lines[0], "expected 'V E'");
    GraphInstance g;
    g.vertices = to_size(lines[0], head[0]);
    const std::size_t e = to_size(lines[0], head[1]);
    if (lines.size() != e + 1) {
        throw Error("graph declares " + std::to_string(e) + " edges but has " + std::to_string(lines.size() - 1));
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto t = split(lines[i].text);
        if (t.size() != 2) fail(lines[i], "expected 'u v'");
        g.edges.emplace_back(to_size(lines[i], t[0]), to_size(lines[i], t[1]));
    }
    g.k = k;
    g.validate();
    return g;
}

std::string format_graph(const GraphInstance& g) {
    std::ostringstream out;
    out << g.vertices << ' ' << g.edges.size() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace rxc::io
