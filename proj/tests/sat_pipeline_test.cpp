#include <gtest/gtest.h>

#include "rxc/error.hpp"
#include "rxc/oracle.hpp"
#include "rxc/sat_pipeline.hpp"
#include "rxc/solver.hpp"
#include "support/generators.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

CnfFormula cnf(std::size_t vars, std::vector<std::vector<int>> clauses) {
    CnfFormula f;
    f.variables = vars;
    for (const auto& c : clauses) {
        std::vector<Literal> lits;
        for (int l : c) lits.push_back({static_cast<std::uint32_t>(std::abs(l) - 1), l > 0});
        f.clauses.push_back(lits);
    }
    return f;
}

std::vector<bool> assignment(std::uint64_t bits, std::size_t k) {
    std::vector<bool> a(k);
    for (std::size_t v = 0; v < k; ++v) a[v] = (bits >> v) & 1;
    return a;
}

}  // namespace

TEST(Evaluator, EncodingAndClock) {
    const TuringMachine m = sat_evaluator();
    const CnfFormula f = cnf(3, {{1, -3}, {2}});
    const Tape w = encode_formula(m, f);
    std::string spelled;
    for (TapeSym s : w) spelled += m.symbol_name(s);
    EXPECT_EQ(spelled, "/1-0/-1-");
    EXPECT_EQ(sat_clock(2, 1), 24u);
    EXPECT_EQ(sat_clock(8, 3), 2 * 8 + 2 * 3 + 8 + 3 * (2 * 8 + 2 * 3 + 4));
    EXPECT_THROW(encode_formula(m, cnf(1, {{1, -1}})), Error);
}

TEST(Evaluator, ClockIsExactOnSmallFormulas) {
    const TuringMachine m = sat_evaluator();
    const std::vector<CnfFormula> suite{cnf(1, {{1}}), cnf(1, {{-1}}), cnf(2, {{1, 2}, {-1}}),
                                        cnf(2, {{1}, {-1, 2}, {-2}}), cnf(3, {{1, -2, 3}, {-1, 2}, {-3}})};
    for (const CnfFormula& f : suite) {
        const Tape w = encode_formula(m, f);
        const ClockReport rep = check_clock(m, f, sat_clock(w.size(), f.variables));
        ASSERT_TRUE(rep.exact) << (rep.problems.empty() ? "" : rep.problems.front());
        EXPECT_EQ(rep.assignments, 1u << f.variables);
        EXPECT_EQ(rep.satisfying, oracle::brute_force_sat_count(f));
    }
}

TEST(Evaluator, WrongClockIsCaught) {
    const TuringMachine m = sat_evaluator();
    const CnfFormula f = cnf(2, {{1, 2}});
    const std::size_t p = sat_clock(encode_formula(m, f).size(), 2);
    EXPECT_FALSE(check_clock(m, f, p + 1).exact);
    EXPECT_FALSE(check_clock(m, f, p - 1).exact);
}

TEST(SatReduction, SingleVariable) {
    const auto a = sat_reduce(cnf(1, {{1}}));
    EXPECT_EQ(a.n, 2u);
    EXPECT_EQ(a.k, 1u);
    EXPECT_EQ(a.p, 24u);
    EXPECT_EQ(a.ell, 182u);
    const Puzzle p = Puzzle::uniform(a.r, a.c2);
    const Grid yes = candidate_tableau(a, {true});
    EXPECT_EQ(yes.m(), 24u);
    EXPECT_EQ(yes.n(), 24u);
    EXPECT_TRUE(verify(p, yes));
    EXPECT_FALSE(verify(p, candidate_tableau(a, {false})));
}

TEST(SatReductionProperty, TableauCountMatchesModelCount) {
    Rng rng(kDefaultSeed + 60);
    for (int i = 0; i < 8; ++i) {
        const CnfFormula f = random_cnf(rng, 1 + i % 3, 1 + i % 4);
        const auto a = sat_reduce(f);
        const Puzzle p = Puzzle::uniform(a.r, a.c2);
        std::uint64_t valid = 0;
        for (std::uint64_t bits = 0; bits < (1u << a.k); ++bits) {
            const auto asg = assignment(bits, a.k);
            const bool ok = verify(p, candidate_tableau(a, asg));
            ASSERT_EQ(ok, f.satisfied_by(asg));
            valid += ok;
        }
        ASSERT_EQ(valid, oracle::brute_force_sat_count(f));
    }
}

TEST(SatReduction, InitialRowFixesTheFormula) {
    const auto a = sat_reduce(cnf(2, {{1, -2}}));
    const auto b = sat_reduce(cnf(2, {{-1, 2}}));
    const Puzzle pb = Puzzle::uniform(b.r, b.c2);
    // a's satisfying tableau is not a crossword of b's puzzle.
    EXPECT_FALSE(verify(pb, candidate_tableau(a, {true, false})));
    EXPECT_TRUE(verify(pb, candidate_tableau(b, {false, true})));
}

TEST(SatReduction, BinaryArtifacts) {
    SatReductionOptions opt;
    opt.binary = true;
    const auto a = sat_reduce(cnf(1, {{1}}), opt);
    ASSERT_TRUE(a.r_bin && a.c_bin);
    EXPECT_EQ(a.q, 3 * 182 * 25 + 1u);
    EXPECT_EQ(a.code->ell(), 3 * 182u);
    const EeInstance ee = ee_from_sat(a);
    EXPECT_EQ(ee.side, 15 * (a.q + 2) + 1);
    EXPECT_TRUE(is_positive(ee.e));
    EXPECT_THROW(ee_from_sat(sat_reduce(cnf(1, {{1}}))), Error);
}
