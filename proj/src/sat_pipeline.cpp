#include "rxc/sat_pipeline.hpp"

#include "rxc/error.hpp"
#include "rxc/solver.hpp"
#include "rxc/tableau_reduction.hpp"

namespace rxc {

TuringMachine sat_evaluator() {
    using R = TuringMachine::Rule;
    const Move L = Move::Left, Rt = Move::Right;
    std::vector<R> rules{
        {"q0", "B", "pass1", "B", L},
        {"pass1", "B", "pass0", "B", Rt},
        {"pass0", "B", "scan", "B", Rt},
    };
    for (const char* a : {"0", "1", "-", "/"}) rules.push_back({"scan", a, "scan", a, Rt});
    rules.push_back({"scan", "B", "ret", "/", Rt});
    for (const char* a : {"0", "1", "-", "/", "X", "Y"}) rules.push_back({"ret", a, "ret", a, Rt});
    rules.push_back({"ret", "B", "take", "B", L});
    rules.push_back({"take", "X", "take", "X", L});
    rules.push_back({"take", "0", "pass0", "X", L});
    rules.push_back({"take", "1", "pass1", "X", L});
    rules.push_back({"take", "/", "chkU", "/", L});
    for (const std::string v : {"0", "1"}) {
        const std::string pass = "pass" + v, seek = "seek" + v;
        for (const char* a : {"0", "1", "-"}) rules.push_back({pass, a, pass, a, L});
        rules.push_back({pass, "/", seek, "/", L});
        for (const char* a : {"X", "Y"}) rules.push_back({seek, a, seek, a, L});
        for (const std::string lit : {"0", "1", "-"}) rules.push_back({seek, lit, pass, lit == v ? "Y" : "X", L});
        rules.push_back({seek, "B", "ret", "B", Rt});
    }
    rules.push_back({"chkU", "X", "chkU", "X", L});
    rules.push_back({"chkU", "Y", "chkS", "Y", L});
    rules.push_back({"chkU", "/", "chkF", "/", L});
    rules.push_back({"chkU", "B", "qh", "B", Rt});
    for (const char* a : {"X", "Y"}) rules.push_back({"chkS", a, "chkS", a, L});
    rules.push_back({"chkS", "/", "chkU", "/", L});
    for (const char* a : {"0", "1", "-", "/", "X", "Y"}) rules.push_back({"chkF", a, "chkF", a, L});
    rules.push_back({"chkF", "B", "rej", "B", Rt});
    rules.push_back({"rej", "/", "chkF", "/", L});
    return TuringMachine({"B", "0", "1", "-", "/", "X", "Y"}, "B", "q0", "qh", std::move(rules));
}

Tape encode_formula(const TuringMachine& m, const CnfFormula& f) {
    f.validate();
    Tape w;
    for (const auto& clause : f.clauses) {
        w.push_back(m.symbol("/"));
        std::vector<TapeSym> slots(f.variables, m.symbol("-"));
        for (const Literal& lit : clause) {
            TapeSym s = m.symbol(lit.positive ? "1" : "0");
            if (slots[lit.var] != m.symbol("-") && slots[lit.var] != s) {
                throw Error("clause holds a variable with both signs; drop it before encoding");
            }
            slots[lit.var] = s;
        }
        w.insert(w.end(), slots.begin(), slots.end());
    }
    return w;
}

Tape evaluator_input(const TuringMachine& m, const Tape& w, const std::vector<bool>& assignment) {
    Tape t = w;
    t.push_back(m.blank());
    for (bool v : assignment) t.push_back(m.symbol(v ? "1" : "0"));
    return t;
}

std::size_t sat_clock(std::size_t n, std::size_t k) { return 2 * n + 2 * k + 8 + k * (2 * n + 2 * k + 4); }

namespace {

std::vector<bool> assignment_of(std::size_t bits, std::size_t k) {
    std::vector<bool> a(k);
    for (std::size_t v = 0; v < k; ++v) a[v] = (bits >> v) & 1u;
    return a;
}

}  // namespace

ClockReport check_clock(const TuringMachine& m, const CnfFormula& f, std::size_t p) {
    if (f.variables > 16) throw LimitExceeded("clock check enumerates assignments; at most 16 variables");
    if (p == 0) throw Error("clock must be positive");
    const Tape w = encode_formula(m, f);
    ClockReport report;
    std::vector<std::int64_t> reference;
    // Loop detection must see at least one full cycle past the clock.
    const std::size_t budget = 4 * p + 64;
    for (std::size_t bits = 0; bits < (std::size_t{1} << f.variables); ++bits) {
        const auto a = assignment_of(bits, f.variables);
        const Tape input = evaluator_input(m, w, a);
        const bool sat = f.satisfied_by(a);
        ++report.assignments;
        report.satisfying += sat;
        auto problem = [&](const std::string& what) {
            report.exact = false;
            report.problems.push_back("assignment " + std::to_string(bits) + ": " + what);
        };

        const auto assumptions = validate_assumptions(m, input, budget);
        for (std::size_t i = 1; i < 4; ++i) {
            if (assumptions.items[i].verdict == Verdict::Fail) {
                problem("assumption " + std::to_string(i + 1) + " fails: " + assumptions.items[i].detail);
            }
        }
        const LoopCheck loop = check_halting(m, input, budget);
        if (sat) {
            if (loop.verdict != LoopVerdict::Halts) problem("satisfying assignment does not halt");
            else if (loop.steps + 1 != p) problem("halts after " + std::to_string(loop.steps) + " steps");
        } else if (loop.verdict == LoopVerdict::Halts) {
            problem("falsifying assignment halts");
        } else if (loop.verdict == LoopVerdict::Unknown) {
            problem("no loop found within " + std::to_string(budget) + " steps");
        }

        const auto run = simulate(m, input, p - 1);
        std::vector<std::int64_t> path;
        for (const auto& c : run.trace.configs) path.push_back(c.head);
        if (bits == 0) reference = path;
        else if (path != reference) problem("head path differs from the all-false assignment");
    }
    return report;
}

NodePtr sat_initial_row(const MarkerAlphabet& mk, const Tape& w, std::size_t k, std::size_t p) {
    const TuringMachine& m = mk.machine();
    const std::size_t n = w.size();
    if (p < n + k + 3) throw Error("clock too small for the formula and assignment");
    const auto& first = m.delta(m.start(), m.blank());
    if (!first || first->move != Move::Left || first->next == m.start()) {
        throw Error("first transition must be (q0,B) -> (q1,B,L) with q1 != q0");
    }
    const TapeSym blank = m.blank();
    Word prefix{*mk.transmission(blank, first->next), mk.scanned(blank, m.start())};
    for (TapeSym a : w) prefix.push_back(mk.unscanned(a));
    prefix.push_back(mk.unscanned(blank));
    NodePtr bit = re::alt({re::lit(mk.unscanned(m.symbol("0"))), re::lit(mk.unscanned(m.symbol("1")))});
    return re::cat({re::word(prefix), re::power(bit, k), re::power(re::lit(mk.unscanned(blank)), p - n - k - 3)});
}

SatReductionArtifacts sat_reduce(const CnfFormula& f, const TuringMachine& m, const ClockFunction& clock,
                                 const SatReductionOptions& options) {
    f.validate();
    if (f.variables == 0) throw Error("formula needs at least one variable");
    SatReductionArtifacts a;
    a.formula = f;
    a.machine = std::make_shared<const TuringMachine>(m);
    a.markers = std::make_shared<const MarkerAlphabet>(a.machine);
    a.w = encode_formula(m, f);
    a.n = a.w.size();
    a.k = f.variables;
    a.p = clock(a.n, a.k);
    if (a.p < 2 * a.n + 3) throw Error("clock must be at least 2n + 3");
    if (options.verify_clock) {
        const ClockReport report = check_clock(m, f, a.p);
        if (!report.exact) throw Error("evaluator clock check failed: " + report.problems.front());
    }
    a.ell = a.markers->alphabet().size();
    a.q = 3 * a.ell * (a.p + 1) + 1;
    a.r = row_expr_with_initial(*a.markers, sat_initial_row(*a.markers, a.w, a.k, a.p));
    a.c2 = squarify_col_expr(build_col_expr(*a.markers), *a.markers);
    if (options.binary) {
        a.code = std::make_shared<const BinaryCode>(a.ell);
        a.r_bin = binarize_expr(*a.code, a.r);
        a.c_bin = binarize_expr(*a.code, a.c2);
    }
    return a;
}

SatReductionArtifacts sat_reduce(const CnfFormula& f, const SatReductionOptions& options) {
    return sat_reduce(f, sat_evaluator(), sat_clock, options);
}

Grid candidate_tableau(const SatReductionArtifacts& a, const std::vector<bool>& assignment) {
    if (assignment.size() != a.k) throw Error("assignment has the wrong number of variables");
    const TuringMachine& m = *a.machine;
    const auto run = simulate(m, evaluator_input(m, a.w, assignment), a.p);
    if (run.trace.configs.size() < a.p) throw Error("run halts before the clock");
    return tableau_window(run.trace, *a.markers, -1, a.p, a.p);
}

EeInstance ee_from_sat(const SatReductionArtifacts& a) {
    if (!a.r_bin || !a.c_bin) throw Error("binary expressions were not built");
    Merged merged = merge_rc(*a.r_bin, *a.c_bin);
    Regex e = binarize_expr(BinaryCode(merged.code.extended.size()), merged.e);
    return {std::move(e), 15 * (a.q + 2) + 1, std::move(merged.code)};
}

}  // namespace rxc
