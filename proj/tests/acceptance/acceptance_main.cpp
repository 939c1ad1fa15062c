// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "rxc/binary_code.hpp"
#include "rxc/error.hpp"
#include "rxc/lazy_dfa.hpp"
#include "rxc/merge.hpp"
#include "rxc/np_reductions.hpp"
#include "rxc/oracle.hpp"
#include "rxc/sat_pipeline.hpp"
#include "rxc/solver.hpp"
#include "rxc/tableau_reduction.hpp"
#include "support/generators.hpp"
#include "support/machines.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

// Pinned thresholds. Every comparison below is exact; only sample sizes and
// wall-clock budgets are parameters.
constexpr int kRandomPuzzles = 500;         // criterion 1
constexpr int kMergePairs = 20;             // criterion 5
constexpr int kPsiPairs = 10;               // criterion 6
constexpr int kGraphSuite = 30;             // criterion 8
constexpr int kThreeCnfSuite = 20;          // criterion 8
constexpr int kPluralPairs = 200;           // criterion 9
constexpr int kDeciderInstances = 100;      // criterion 10
constexpr int kDeciderNegatives = 10;       // criterion 10
constexpr std::size_t kPluralBound = 6;     // criterion 9
constexpr std::size_t kDeciderBound = 8;    // criterion 10
constexpr std::size_t kLoopingRows = 8;     // criterion 3

struct Result {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
    void check(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(Result&, Rng&)> body;
};

std::string show(const Regex& r) { return print(r); }

// ---------------------------------------------------------------- 1

void solver_oracle(Result& res, Rng& rng) {
    std::size_t total = 0, nonempty = 0;
    for (int i = 0; i < kRandomPuzzles; ++i) {
        const Puzzle p = random_puzzle(rng, 3, RegexShape{4, true, true});
        const std::size_t m = 1 + i % 3, n = 1 + (i / 3) % 3;
        const auto want = oracle::brute_force_crosswords(p, m, n);
        const auto got = enumerate(p, m, n);
        const auto serial = enumerate(p, m, n, std::nullopt, Execution::Serial);
        res.check(got == want && serial == want, "enumeration differs on " + show(p.rows.at(0)));
        res.check(count(p, m, n) == want.size(), "count differs on " + show(p.rows.at(0)));
        total += want.size();
        nonempty += !want.empty();
    }
    res.detail << kRandomPuzzles << " puzzles, " << nonempty << " with crosswords, " << total << " crosswords";
}

// ---------------------------------------------------------------- 2

void tableau_forward(Result& res, Rng&) {
    struct Case {
        const char* name;
        std::shared_ptr<const TuringMachine> m;
        std::vector<std::string> w;
    };
    const std::vector<Case> cases{{"demo", demo_machine(), {"a"}},
                                  {"eraser", eraser_machine(), {"a", "b", "a"}},
                                  {"parity", parity_machine(), {"1", "1", "1"}}};
    for (const Case& c : cases) {
        const MarkerAlphabet markers(c.m);
        const Tape w = c.m->tape_from_names(c.w);
        res.check(validate_assumptions(*c.m, w, 10000).all_pass(), std::string(c.name) + " violates an assumption");
        const auto run = simulate(*c.m, w, 10000);
        const Grid t = build_tableau(run.trace, markers);
        const Puzzle p = Puzzle::uniform(build_row_expr(markers, w), build_col_expr(markers));
        if (c.m == cases.front().m) {
            res.check(t.m() == 6 && t.n() == 4, "demo tableau is not 6 x 4");
        }
        res.check(verify(p, t), std::string(c.name) + " tableau does not verify");
        const auto all = enumerate(p, t.m(), t.n());
        res.check(all.size() == 1 && all.front() == t, std::string(c.name) + " crossword is not unique");
        res.detail << c.name << " " << t.m() << "x" << t.n() << " unique; ";
    }
}

// ---------------------------------------------------------------- 3

void tableau_negative(Result& res, Rng&) {
    const auto m = bouncer_machine();
    const Tape w = m->tape_from_names({"a", "a"});
    const auto rep = validate_assumptions(*m, w, 2000);
    res.check(rep.items[0].verdict == Verdict::Pass && rep.items[1].verdict == Verdict::Pass &&
                  rep.items[2].verdict != Verdict::Fail && rep.items[3].verdict == Verdict::Pass,
              "bouncer violates an assumption");
    res.check(check_halting(*m, w, 2000).verdict == LoopVerdict::Loops, "bouncer is not a proven loop");
    const MarkerAlphabet markers(m);
    const Regex r = build_row_expr(markers, w), c = build_col_expr(markers);
    std::size_t profiles = 0;
    for (std::size_t rows = 1; rows <= kLoopingRows; ++rows) {
        const auto d = decide_unbounded_width(std::vector<Regex>(rows, r), c);
        res.check(!d.exists, "crossword found with " + std::to_string(rows) + " rows");
        profiles += d.profiles_explored;
    }
    res.detail << "no width for m = 1.." << kLoopingRows << " (" << profiles << " profiles)";
}

// ---------------------------------------------------------------- 4

void squareness(Result& res, Rng&) {
    for (const auto& [m, w] : {std::pair{demo_machine(), std::vector<std::string>{"a"}},
                               std::pair{eraser_machine(), std::vector<std::string>{"b", "a"}}}) {
        const MarkerAlphabet markers(m);
        const Tape tape = m->tape_from_names(w);
        const Grid t = build_tableau(simulate(*m, tape, 10000).trace, markers);
        const Grid sq = pad_to_square(t, markers);
        const Regex r = build_row_expr(markers, tape);
        const Regex c2 = squarify_col_expr(build_col_expr(markers), markers);
        res.check(sq.m() == sq.n(), "padding is not square");
        res.check(verify(Puzzle::uniform(r, c2), sq), "padded tableau fails (R, C')");
        res.detail << t.m() << "x" << t.n() << " -> " << sq.m() << "x" << sq.n() << "; ";
    }
    // rho and psi keep squares square.
    const Alphabet a = letters(2);
    const MergeCode code = merge_code(a);
    for (std::size_t s = 1; s <= 3; ++s) {
        const Grid x(a, s, s);
        res.check(rho_encode(x, code).m() == rho_encode(x, code).n(), "rho breaks squareness");
        const Grid y = psi_encode(2, Grid(digit_alphabet(2), s, s));
        res.check(y.m() == y.n(), "psi breaks squareness");
    }
}

// ---------------------------------------------------------------- 5

void merge_round_trip(Result& res, Rng& rng) {
    int pairs = 0, attempts = 0;
    std::size_t images = 0, decoded = 0;
    while (pairs < kMergePairs && attempts < 20000) {
        ++attempts;
        const Alphabet a = letters(2 + attempts % 2);
        const Regex r = random_positive_regex(rng, a), c = random_positive_regex(rng, a);
        if (!is_plural(r, c)) continue;
        const Puzzle rc = Puzzle::uniform(r, c);
        std::vector<std::pair<std::size_t, std::size_t>> sizes;
        for (std::size_t m = 2; m <= 3; ++m) {
            for (std::size_t n = 2; n <= 3; ++n) {
                if (count(rc, m, n) > 0) sizes.emplace_back(m, n);
            }
        }
        if (sizes.empty()) continue;
        ++pairs;
        const Merged mg = merge_rc(r, c);
        const Puzzle ee = Puzzle::uniform(mg.e, mg.e);
        for (auto [m, n] : sizes) {
            const auto xs = enumerate(rc, m, n);
            const std::set<Grid> known(xs.begin(), xs.end());
            const auto ts = enumerate(rc, n, m);
            const std::set<Grid> known_t(ts.begin(), ts.end());
            for (const Grid& x : xs) {
                res.check(verify(ee, rho_encode(x, mg.code)), "rho image fails (E,E) for " + show(r));
                ++images;
            }
            for (const Grid& y : enumerate(ee, m + 1, n + 1)) {
                const RhoDecoded d = rho_decode(y, mg.code);
                res.check(d.transposed ? known_t.count(d.inner) == 1 : known.count(d.inner) == 1,
                          "(E,E)-crossword decodes outside the (R,C) set for " + show(r));
                ++decoded;
            }
        }
    }
    res.check(pairs >= kMergePairs, "only " + std::to_string(pairs) + " plural pairs generated");
    res.detail << pairs << " plural pairs, " << images << " images verified, " << decoded << " (E,E)-crosswords decoded";
}

// ---------------------------------------------------------------- 6

void binary_round_trip(Result& res, Rng& rng) {
    const BinaryCode code(2);
    const Alphabet a = digit_alphabet(2);
    int pairs = 0, attempts = 0, counted = 0;
    while (pairs < kPsiPairs && attempts < 20000) {
        ++attempts;
        const Regex t = random_positive_regex(rng, a), u = random_positive_regex(rng, a);
        const Puzzle p = Puzzle::uniform(t, u);
        const auto one = enumerate(p, 1, 1), two = enumerate(p, 2, 1);
        if (one.empty() && two.empty()) continue;
        ++pairs;
        const Puzzle bin = Puzzle::uniform(binarize_expr(code, t), binarize_expr(code, u));
        for (const auto* xs : {&one, &two}) {
            std::set<Grid> images;
            for (const Grid& x : *xs) {
                const Grid y = psi_encode(code, x);
                res.check(verify(bin, y), "psi image fails for " + show(t) + " / " + show(u));
                res.check(psi_decode(code, y, a) == x, "decode is not the inverse of encode");
                images.insert(y);
            }
            // Count preservation: the solver's crosswords at the encoded size
            // are exactly the images.
            const std::size_t m = xs == &one ? 1 : 2;
            const auto got = enumerate(bin, (m + 1) * code.ell() + 1, 2 * code.ell() + 1);
            res.check(std::set<Grid>(got.begin(), got.end()) == images,
                      "encoded crossword set differs for " + show(t) + " / " + show(u));
            for (const Grid& y : got) psi_decode(code, y, a);  // throws on a claim violation
            ++counted;
        }
    }
    res.check(pairs >= kPsiPairs, "only " + std::to_string(pairs) + " pairs with small crosswords");
    res.detail << pairs << " pairs, " << counted << " encoded sizes enumerated (13x13 and 19x13)";
}

// ---------------------------------------------------------------- 7

CnfFormula formula(std::size_t vars, std::vector<std::vector<int>> clauses) {
    CnfFormula f;
    f.variables = vars;
    for (const auto& c : clauses) {
        std::vector<Literal> lits;
        for (int l : c) lits.push_back({static_cast<std::uint32_t>(std::abs(l) - 1), l > 0});
        f.clauses.push_back(lits);
    }
    return f;
}

// Streams every row of psi(x) through a lazy DFA of r and every column through
// one of c; false at the first rejected line.
bool psi_membership(const BinaryCode& code, const Grid& x, const Regex& r, const Regex& c, std::string& where) {
    const PsiView view(code, x);
    LazyDfa rows(compile(r));
    for (std::size_t i = 0; i < view.rows(); ++i) {
        if (!rows.run(view.row(i))) {
            where = "row " + std::to_string(i);
            return false;
        }
    }
    LazyDfa cols(compile(c));
    for (std::size_t j = 0; j < view.cols(); ++j) {
        if (!cols.run(view.col(j))) {
            where = "column " + std::to_string(j);
            return false;
        }
    }
    return true;
}

void sat_model_count(Result& res, Rng&) {
    const std::vector<CnfFormula> suite{
        formula(1, {{1}}),
        formula(1, {{-1}}),
        formula(1, {{1}, {-1}}),
        formula(2, {{1, 2}}),
        formula(2, {{1, -2}, {-1, 2}}),
        formula(2, {{1}, {2}, {-1, -2}}),
        formula(3, {{1, 2, 3}}),
        formula(3, {{1, -2}, {2, -3}, {3, -1}}),
        formula(3, {{-1, -2, -3}, {1, 2}, {-3}}),
        formula(3, {{1, 2}, {-1, 3}, {-2, -3}, {2, 3}}),
    };
    const TuringMachine m = sat_evaluator();
    std::uint64_t total = 0;
    for (const CnfFormula& f : suite) {
        const auto a = sat_reduce(f);
        const ClockReport clock = check_clock(m, f, a.p);
        res.check(clock.exact, "evaluator clock is not exact");
        const Puzzle p = Puzzle::uniform(a.r, a.c2);
        std::uint64_t valid = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.k); ++bits) {
            std::vector<bool> asg(a.k);
            for (std::size_t v = 0; v < a.k; ++v) asg[v] = (bits >> v) & 1;
            valid += verify(p, candidate_tableau(a, asg));
        }
        res.check(valid == oracle::brute_force_sat_count(f), "tableau count differs from the model count");
        total += valid;
    }
    res.detail << suite.size() << " formulas, " << total << " valid tableaux, clocks exact; ";

    SatReductionOptions opt;
    opt.binary = true;
    const auto a = sat_reduce(formula(1, {{1}}), opt);
    std::string where;
    const bool yes = psi_membership(*a.code, candidate_tableau(a, {true}), *a.r_bin, *a.c_bin, where);
    res.check(yes, "psi of the satisfying tableau fails at " + where);
    const bool no = psi_membership(*a.code, candidate_tableau(a, {false}), *a.r_bin, *a.c_bin, where);
    res.check(!no, "psi of the falsifying tableau passes");
    res.detail << "binary level q = " << a.q << ": satisfying image accepted, falsifying image rejected at " << where;
}

// ---------------------------------------------------------------- 8

void np_reductions_agree(Result& res, Rng& rng) {
    std::size_t instances = 0, yes = 0;
    for (int i = 0; i < kGraphSuite; ++i) {
        const std::size_t v = 1 + i % 6;
        GraphInstance g = random_graph(rng, v, 0.2 + 0.1 * (i % 6), 1);
        for (std::size_t k = 1; k <= v; ++k) {
            g.k = k;
            const Puzzle p = vc_reduce(g);
            const bool got = solve(p, *p.fixed_m, *p.fixed_n).has_value();
            res.check(got == oracle::brute_force_vertex_cover(g), "vertex cover disagreement");
            ++instances;
            yes += got;
        }
    }
    res.detail << instances << " (graph, k) instances (" << yes << " yes); ";
    std::size_t sat = 0;
    for (int i = 0; i < kThreeCnfSuite; ++i) {
        const std::size_t vars = 3 + i % 2;
        const CnfFormula f = random_three_cnf(rng, vars, 2 + i);
        const Puzzle p = threesat_reduce(f);
        const bool got = solve(p, f.clauses.size(), vars).has_value();
        res.check(got == (oracle::brute_force_sat_count(f) > 0), "3-SAT disagreement");
        sat += got;
    }
    res.detail << kThreeCnfSuite << " exact 3-CNF formulas (" << sat << " satisfiable)";
}

// ---------------------------------------------------------------- 9

void plurality(Result& res, Rng& rng) {
    std::size_t plural = 0;
    for (int i = 0; i < kPluralPairs; ++i) {
        const Alphabet a = letters(1 + i % 3);
        const Regex r = random_regex(rng, a), c = random_regex(rng, a);
        const Puzzle p = Puzzle::uniform(r, c);
        res.check(is_positive(r) == !oracle::structural_match(r, {}), "positivity differs for " + show(r));
        bool thin = false;
        for (std::size_t len = 1; len <= kPluralBound && !thin; ++len) {
            thin = !oracle::brute_force_crosswords(p, 1, len).empty() ||
                   !oracle::brute_force_crosswords(p, len, 1).empty();
        }
        const bool want = !oracle::structural_match(r, {}) && !oracle::structural_match(c, {}) && !thin;
        const bool got = is_plural(r, c);
        res.check(got == want, "plurality differs for " + show(r) + " / " + show(c));
        plural += got;
    }
    res.detail << kPluralPairs << " pairs, " << plural << " plural";
}

// ---------------------------------------------------------------- 10

std::vector<std::pair<std::vector<const char*>, const char*>> engineered_negatives() {
    return {
        {{"(aa)+", "a(aa)*"}, "aa"},
        {{"(aaa)+", "a(aaa)*"}, "aa"},
        {{"(aaaa)+", "aa(aaaa)*"}, "aa"},
        {{"(aaaaa)+", "a(aaaaa)*"}, "aa"},
        {{"(aa)+", "(aaa)+", "a(aaaaaa)*"}, "aaa"},
        {{"b(a|b)*", "a(a|b)*"}, "aa|bb"},
        {{"(a|b)*b", "(a|b)*a"}, "aa|bb"},
        {{"(ab)+", "(aab)+"}, "aa|bb"},
        {{"a*ba*", "a*ba*", "a*"}, "aaa|bbb"},
        {{"(ab)+", "(ab)+"}, "ab|ba"},
        {{"(ab)*a", "(ba)*b"}, "aa|bb"},
        {{"a+", "b+"}, "(a|b)(a|b)&(aa|bb)"},
    };
}

void width_decider(Result& res, Rng& rng) {
    std::size_t exists = 0;
    for (int i = 0; i < kDeciderInstances; ++i) {
        const Alphabet a = letters(1 + i % 2);
        std::vector<Regex> rows;
        for (int r = 0; r <= i % 3; ++r) rows.push_back(random_regex(rng, a, RegexShape{3, true, true}));
        const Regex c = random_regex(rng, a, RegexShape{3, true, true});
        const auto d = decide_unbounded_width(rows, c);
        const Puzzle p{a, LineSpec::per_line(rows), LineSpec::uniform(c), std::nullopt, std::nullopt};
        std::optional<std::size_t> searched;
        for (std::size_t n = 1; n <= kDeciderBound && !searched; ++n) {
            if (solve(p, rows.size(), n)) searched = n;
        }
        if (d.exists && *d.width <= kDeciderBound) {
            res.check(searched == d.width, "least width differs");
            res.check(verify(p, *d.witness), "witness does not verify");
        } else {
            res.check(!searched, "decider missed a crossword within the bound");
        }
        exists += d.exists;
    }
    int negatives = 0;
    const Alphabet ab = letters(2);
    for (const auto& [row_texts, col_text] : engineered_negatives()) {
        std::vector<Regex> rows;
        for (const char* t : row_texts) rows.push_back(parse(t, ab));
        const auto d = decide_unbounded_width(rows, parse(col_text, ab));
        res.check(!d.exists, std::string("engineered negative accepted: ") + col_text);
        negatives += !d.exists;
    }
    res.check(negatives >= kDeciderNegatives, "too few engineered negatives");
    res.detail << kDeciderInstances << " random instances (" << exists << " yes), " << negatives
               << " engineered negatives rejected by exhaustion";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::uint64_t seed = kDefaultSeed;
    std::vector<int> only;
    app.add_option("--seed", seed, "seed for every generated suite");
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "solver agrees with brute force", 300, solver_oracle},
        {2, "tableau is the unique crossword", 60, tableau_forward},
        {3, "looping machine has no crossword", 300, tableau_negative},
        {4, "padded tableau is a square crossword", 60, squareness},
        {5, "merge preserves crosswords", 600, merge_round_trip},
        {6, "binary encoding preserves crosswords", 1800, binary_round_trip},
        {7, "SAT reduction preserves the model count", 600, sat_model_count},
        {8, "vertex cover and 3-SAT reductions", 600, np_reductions_agree},
        {9, "plurality and positivity", 120, plurality},
        {10, "unbounded-width decider", 300, width_decider},
    };

    std::cout << "seed " << seed << '\n';
    int failed = 0;
    for (const Criterion& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        Rng rng(seed + static_cast<std::uint64_t>(c.id));
        Result res;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(res, rng);
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) res.fail("over the time budget");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, c.budget_seconds);
        std::cout << (res.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << timing << "] "
                  << res.detail.str() << std::endl;
        failed += !res.pass;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed;
}
