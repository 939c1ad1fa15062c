// rxc: command-line front end.
//
// Exit status: 0 yes/success, 1 no (decision verbs), 2 usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rxc/binary_code.hpp"
#include "rxc/error.hpp"
#include "rxc/io.hpp"
#include "rxc/merge.hpp"
#include "rxc/np_reductions.hpp"
#include "rxc/sat_pipeline.hpp"
#include "rxc/solver.hpp"
#include "rxc/tableau_reduction.hpp"
#include "rxc/turing.hpp"

namespace {

using namespace rxc;

constexpr int kYes = 0;
constexpr int kNo = 1;

struct Options {
    std::string puzzle, grid, machine, cnf, graph;
    std::string input;
    std::string out, out_binary;
    std::optional<std::size_t> m, n;
    std::optional<std::size_t> cap;
    std::optional<std::size_t> k;
    std::size_t steps = 10000;
    std::size_t profile_limit = DecideOptions{}.profile_limit;
    bool square = false;
    bool binary = false;
    bool serial = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else io::write_file(o.out, text);
}

Puzzle load_puzzle(const Options& o) { return io::parse_puzzle(io::read_file(o.puzzle)); }

std::pair<std::size_t, std::size_t> dimensions(const Options& o, const Puzzle& p) {
    auto pick = [](std::optional<std::size_t> flag, std::optional<std::size_t> fixed,
                   std::optional<std::size_t> listed, const char* name) {
        if (flag) return *flag;
        if (fixed) return *fixed;
        if (listed) return *listed;
        throw Error(std::string("dimension ") + name + " is not fixed by the puzzle; pass -" + name);
    };
    return {pick(o.m, p.fixed_m, p.rows.line_count(), "m"), pick(o.n, p.fixed_n, p.cols.line_count(), "n")};
}

Execution execution(const Options& o) { return o.serial ? Execution::Serial : Execution::Parallel; }

const Regex& uniform_expr(const LineSpec& s, const char* what) {
    if (!s.is_uniform()) throw Error(std::string(what) + " must be a single uniform expression");
    return s.expressions().front();
}

// ---------------------------------------------------------------- puzzles

int cmd_solve(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const auto [m, n] = dimensions(o, p);
    const auto g = solve(p, m, n);
    if (!g) {
        std::cerr << "no solution at " << m << "x" << n << '\n';
        return kNo;
    }
    emit(o, io::format_grid(*g));
    return kYes;
}

int cmd_enum(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const auto [m, n] = dimensions(o, p);
    const auto grids = enumerate(p, m, n, o.cap, execution(o));
    std::ostringstream out;
    for (std::size_t i = 0; i < grids.size(); ++i) {
        out << "# solution " << i + 1 << '\n' << io::format_grid(grids[i]);
    }
    emit(o, out.str());
    return grids.empty() ? kNo : kYes;
}

int cmd_count(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const auto [m, n] = dimensions(o, p);
    std::cout << count(p, m, n, execution(o)) << '\n';
    return kYes;
}

int cmd_unique(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const auto [m, n] = dimensions(o, p);
    const bool u = is_unique(p, m, n);
    std::cout << (u ? "unique" : "not unique") << '\n';
    return u ? kYes : kNo;
}

int cmd_verify(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const Grid g = io::parse_grid(io::read_file(o.grid), p.alphabet);
    try {
        p.check_dimensions(g.m(), g.n());
    } catch (const DimensionError& e) {
        std::cout << "invalid (" << e.what() << ")\n";
        return kNo;
    }
    const bool ok = verify(p, g);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kYes : kNo;
}

int cmd_plural(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const bool ok = is_plural(uniform_expr(p.rows, "rows"), uniform_expr(p.cols, "columns"));
    std::cout << (ok ? "plural" : "not plural") << '\n';
    return ok ? kYes : kNo;
}

int cmd_decide_width(const Options& o) {
    const Puzzle p = load_puzzle(o);
    std::vector<Regex> rows;
    if (p.rows.is_uniform()) {
        const std::size_t m = o.m ? *o.m : p.fixed_m ? *p.fixed_m : 0;
        if (m == 0) throw Error("uniform rows need -m");
        rows.assign(m, p.rows.expressions().front());
    } else {
        rows = p.rows.expressions();
    }
    const auto d = decide_unbounded_width(rows, uniform_expr(p.cols, "columns"), DecideOptions{o.profile_limit});
    if (!d.exists) {
        std::cout << "no crossword of any width (" << d.profiles_explored << " profiles)\n";
        return kNo;
    }
    std::cout << "# least width " << *d.width << '\n';
    std::cout << io::format_grid(*d.witness);
    return kYes;
}

int cmd_merge(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const Merged mg = merge_rc(uniform_expr(p.rows, "rows"), uniform_expr(p.cols, "columns"));
    Puzzle out = Puzzle::uniform(mg.e, mg.e);
    if (p.fixed_m) out.fixed_m = *p.fixed_m + 1;
    if (p.fixed_n) out.fixed_n = *p.fixed_n + 1;
    emit(o, io::format_puzzle(out, {"edge-marked merge of " + o.puzzle + " into one expression"}));
    return kYes;
}

std::size_t code_size(const Options& o, const Alphabet& a) { return o.k ? *o.k : std::max<std::size_t>(2, a.size()); }

int cmd_binarize(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const BinaryCode code(code_size(o, p.alphabet));
    auto convert = [&](const LineSpec& s) {
        std::vector<Regex> rs;
        for (const auto& r : s.expressions()) rs.push_back(binarize_expr(code, r));
        return s.is_uniform() ? LineSpec::uniform(rs.front()) : LineSpec::per_line(std::move(rs));
    };
    auto side = [&](std::optional<std::size_t> d) -> std::optional<std::size_t> {
        if (!d) return std::nullopt;
        return (*d + 1) * code.ell() + 1;
    };
    const Puzzle out{code.bits(), convert(p.rows), convert(p.cols), side(p.fixed_m), side(p.fixed_n)};
    emit(o, io::format_puzzle(out, {"binary encoding of " + o.puzzle + " with k = " + std::to_string(code.k())}));
    return kYes;
}

int cmd_encode_grid(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const Grid x = io::parse_grid(io::read_file(o.grid), p.alphabet);
    emit(o, io::format_grid(psi_encode(BinaryCode(code_size(o, p.alphabet)), x)));
    return kYes;
}

int cmd_decode_grid(const Options& o) {
    const Puzzle p = load_puzzle(o);
    const BinaryCode code(code_size(o, p.alphabet));
    const Grid y = io::parse_grid(io::read_file(o.grid), code.bits());
    try {
        emit(o, io::format_grid(psi_decode(code, y, p.alphabet)));
    } catch (const DecodeError& e) {
        std::cerr << "not an encoded grid: " << e.what() << '\n';
        return kNo;
    }
    return kYes;
}

// ---------------------------------------------------------------- machines

struct LoadedMachine {
    std::shared_ptr<const TuringMachine> m;
    Tape w;
};

LoadedMachine load_machine(const Options& o) {
    auto m = std::make_shared<const TuringMachine>(io::parse_machine(io::read_file(o.machine)));
    Tape w = io::parse_tape(*m, o.input);
    return {std::move(m), std::move(w)};
}

const char* outcome_name(RunOutcome r) {
    switch (r) {
        case RunOutcome::Halted: return "halted";
        case RunOutcome::Stuck: return "stuck";
        case RunOutcome::Timeout: return "timeout";
    }
    return "?";
}

int cmd_tm_simulate(const Options& o) {
    const auto [m, w] = load_machine(o);
    const auto run = simulate(*m, w, o.steps);
    const auto& tr = run.trace;
    for (std::size_t t = 0; t < tr.configs.size(); ++t) {
        const auto& cfg = tr.configs[t];
        std::cout << t << ' ' << m->state_name(cfg.state) << ' ' << cfg.head << " :";
        for (std::size_t i = 0; i < cfg.tape.size(); ++i) {
            const bool here = tr.window_left + static_cast<std::int64_t>(i) == cfg.head;
            std::cout << ' ' << (here ? "^" : "") << m->symbol_name(cfg.tape[i]);
        }
        std::cout << '\n';
    }
    std::cout << "# " << outcome_name(run.outcome) << " after " << run.steps << " steps\n";
    return run.halted() ? kYes : kNo;
}

int cmd_tm_validate(const Options& o) {
    const auto [m, w] = load_machine(o);
    const auto rep = validate_assumptions(*m, w, o.steps);
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
        const auto& it = rep.items[i];
        const char* v = it.verdict == Verdict::Pass ? "pass" : it.verdict == Verdict::Fail ? "FAIL" : "unknown";
        std::cout << "assumption " << i + 1 << ": " << v;
        if (!it.detail.empty()) std::cout << " (" << it.detail << ')';
        std::cout << '\n';
    }
    for (const auto& note : rep.notes) std::cout << "note: " << note << '\n';
    return rep.all_pass() ? kYes : kNo;
}

std::optional<Grid> halting_tableau(const LoadedMachine& lm, const MarkerAlphabet& markers, const Options& o) {
    const auto run = simulate(*lm.m, lm.w, o.steps);
    if (!run.halted()) {
        std::cerr << "machine did not halt (" << outcome_name(run.outcome) << " after " << run.steps << " steps)\n";
        return std::nullopt;
    }
    Grid g = build_tableau(run.trace, markers);
    if (o.square) {
        if (g.m() < g.n()) throw Error("tableau is wider than tall; it cannot be padded to a square");
        g = pad_to_square(g, markers);
    }
    return g;
}

int cmd_tm_tableau(const Options& o) {
    const auto lm = load_machine(o);
    const MarkerAlphabet markers(lm.m);
    const auto g = halting_tableau(lm, markers, o);
    if (!g) return kNo;
    emit(o, io::format_grid(*g));
    return kYes;
}

int cmd_tm_reduce(const Options& o) {
    const auto lm = load_machine(o);
    const MarkerAlphabet markers(lm.m);
    const Regex r = build_row_expr(markers, lm.w);
    Regex c = build_col_expr(markers);
    if (o.square) c = squarify_col_expr(c, markers);
    Puzzle p = Puzzle::uniform(r, c);
    // Fix the size when the run halts within the budget, so `solve` needs no flags.
    const auto run = simulate(*lm.m, lm.w, o.steps);
    if (run.halted()) {
        const Grid g = build_tableau(run.trace, markers);
        p.fixed_m = g.m();
        p.fixed_n = o.square ? g.m() : g.n();
    }
    std::string input;
    for (auto a : lm.w) input += (input.empty() ? "" : " ") + lm.m->symbol_name(a);
    emit(o, io::format_puzzle(p, {"tableau reduction of " + o.machine + " on input '" + input + "'",
                                  o.square ? "columns admit all-blank padding" : "columns are exact"}));
    return kYes;
}

// ---------------------------------------------------------------- formulas and graphs

int cmd_sat_reduce(const Options& o) {
    const CnfFormula f = io::parse_dimacs(io::read_file(o.cnf));
    SatReductionOptions opt;
    opt.binary = o.binary;
    const auto a = sat_reduce(f, opt);
    Puzzle marker_level = Puzzle::uniform(a.r, a.c2);
    marker_level.fixed_m = marker_level.fixed_n = a.p;
    emit(o, io::format_puzzle(marker_level, {"clocked evaluator reduction of " + o.cnf,
                                             "p = " + std::to_string(a.p) + ", one crossword per satisfying assignment"}));
    if (o.binary) {
        Puzzle bin = Puzzle::uniform(*a.r_bin, *a.c_bin);
        bin.fixed_m = bin.fixed_n = a.q;
        const std::string text = io::format_puzzle(bin, {"binary encoding of the evaluator reduction of " + o.cnf,
                                                         "q = " + std::to_string(a.q)});
        if (o.out_binary.empty()) std::cout << text;
        else io::write_file(o.out_binary, text);
    }
    return kYes;
}

int cmd_sat_count(const Options& o) {
    const CnfFormula f = io::parse_dimacs(io::read_file(o.cnf));
    if (f.variables > 20) throw LimitExceeded("sat count enumerates assignments; at most 20 variables");
    const auto a = sat_reduce(f);
    const Puzzle p = Puzzle::uniform(a.r, a.c2);
    std::size_t valid = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.k); ++bits) {
        std::vector<bool> asg(a.k);
        for (std::size_t v = 0; v < a.k; ++v) asg[v] = (bits >> v) & 1;
        if (verify(p, candidate_tableau(a, asg))) ++valid;
    }
    std::cout << valid << '\n';
    return kYes;
}

int cmd_vc_reduce(const Options& o) {
    const GraphInstance g = io::parse_graph(io::read_file(o.graph), *o.k);
    emit(o, io::format_puzzle(vc_reduce(g), {"vertex cover reduction of " + o.graph + " with k = " + std::to_string(*o.k)}));
    return kYes;
}

int cmd_threesat_reduce(const Options& o) {
    const CnfFormula f = io::parse_dimacs(io::read_file(o.cnf));
    emit(o, io::format_puzzle(threesat_reduce(f), {"3-SAT reduction of " + o.cnf}));
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rxc: regular expression crosswords"};
    app.require_subcommand(1);
    Options o;
    int (*action)(const Options&) = nullptr;

    auto verb = [&](CLI::App* parent, const char* name, const char* help, int (*fn)(const Options&)) {
        CLI::App* s = parent->add_subcommand(name, help);
        s->callback([&action, fn] { action = fn; });
        return s;
    };
    auto dims = [&](CLI::App* s) {
        s->add_option("-m", o.m, "row count")->check(CLI::PositiveNumber);
        s->add_option("-n", o.n, "column count")->check(CLI::PositiveNumber);
    };
    auto puzzle = [&](CLI::App* s) { s->add_option("puzzle", o.puzzle, "puzzle file")->required()->check(CLI::ExistingFile); };
    auto out = [&](CLI::App* s) { s->add_option("--out,-o", o.out, "output file (default stdout)"); };
    auto serial = [&](CLI::App* s) { s->add_flag("--serial", o.serial, "use the serial reference search"); };

    auto* s = verb(&app, "solve", "lexicographically least crossword", cmd_solve);
    puzzle(s), dims(s), out(s);
    s = verb(&app, "enum", "all crosswords in order", cmd_enum);
    puzzle(s), dims(s), out(s), serial(s);
    s->add_option("--cap", o.cap, "stop after this many");
    s = verb(&app, "count", "number of crosswords", cmd_count);
    puzzle(s), dims(s), serial(s);
    s = verb(&app, "unique", "exit 0 iff exactly one crossword exists", cmd_unique);
    puzzle(s), dims(s);
    s = verb(&app, "verify", "exit 0 iff the grid is a crossword", cmd_verify);
    puzzle(s);
    s->add_option("grid", o.grid, "grid file")->required()->check(CLI::ExistingFile);
    s = verb(&app, "plural", "exit 0 iff (R, C) is plural", cmd_plural);
    puzzle(s);
    s = verb(&app, "decide-width", "is there a crossword of any width with the given rows", cmd_decide_width);
    puzzle(s);
    s->add_option("-m", o.m, "row count for a uniform row expression")->check(CLI::PositiveNumber);
    s->add_option("--profile-limit", o.profile_limit, "give up after this many profiles");
    s = verb(&app, "merge", "single expression E for a plural (R, C)", cmd_merge);
    puzzle(s), out(s);
    s = verb(&app, "binarize", "the puzzle over {0,1}", cmd_binarize);
    puzzle(s), out(s);
    s->add_option("-k", o.k, "code size (default: alphabet size)")->check(CLI::Range(2, 1 << 20));

    auto grid_codec = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        auto* g = verb(&app, name, help, fn);
        puzzle(g);
        g->add_option("grid", o.grid, "grid file")->required()->check(CLI::ExistingFile);
        g->add_option("-k", o.k, "code size (default: alphabet size)")->check(CLI::Range(2, 1 << 20));
        out(g);
    };
    grid_codec("encode-grid", "binary image of a grid over the puzzle alphabet", cmd_encode_grid);
    grid_codec("decode-grid", "grid over the puzzle alphabet from its binary image", cmd_decode_grid);

    CLI::App* tm = app.add_subcommand("tm", "Turing machine tools");
    tm->require_subcommand(1);
    auto machine = [&](CLI::App* t) {
        t->add_option("machine", o.machine, "machine file")->required()->check(CLI::ExistingFile);
        t->add_option("--input,-w", o.input, "input word");
        t->add_option("--steps", o.steps, "step budget");
    };
    s = verb(tm, "simulate", "print the run", cmd_tm_simulate);
    machine(s);
    s = verb(tm, "validate", "check the tableau assumptions", cmd_tm_validate);
    machine(s);
    s = verb(tm, "tableau", "marker grid of a halting run", cmd_tm_tableau);
    machine(s), out(s);
    s->add_flag("--square", o.square, "pad with blank columns to a square");
    s = verb(tm, "reduce", "(R, C) whose crosswords are the tableau", cmd_tm_reduce);
    machine(s), out(s);
    s->add_flag("--square", o.square, "use C | [B]+ so the tableau pads to a square");

    CLI::App* sat = app.add_subcommand("sat", "CNF satisfiability through the clocked evaluator");
    sat->require_subcommand(1);
    s = verb(sat, "reduce", "(R, C) with one p x p crossword per satisfying assignment", cmd_sat_reduce);
    s->add_option("cnf", o.cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
    out(s);
    s->add_flag("--binary", o.binary, "also emit the {0,1} puzzle");
    s->add_option("--out-binary", o.out_binary, "file for the {0,1} puzzle (default stdout)");
    s = verb(sat, "count", "number of marker-level crosswords", cmd_sat_count);
    s->add_option("cnf", o.cnf, "DIMACS file")->required()->check(CLI::ExistingFile);

    CLI::App* vc = app.add_subcommand("vc", "vertex cover");
    vc->require_subcommand(1);
    s = verb(vc, "reduce", "per-line puzzle solvable iff a cover of size <= k exists", cmd_vc_reduce);
    s->add_option("graph", o.graph, "graph file")->required()->check(CLI::ExistingFile);
    s->add_option("-k", o.k, "cover budget")->required();
    out(s);

    CLI::App* three = app.add_subcommand("3sat", "exact 3-CNF");
    three->require_subcommand(1);
    s = verb(three, "reduce", "per-row puzzle solvable iff the formula is satisfiable", cmd_threesat_reduce);
    s->add_option("cnf", o.cnf, "DIMACS file")->required()->check(CLI::ExistingFile);
    out(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action(o);
    } catch (const std::exception& e) {
        std::cerr << "rxc: " << e.what() << '\n';
        return 2;
    }
}
