#include <gtest/gtest.h>

#include "rxc/error.hpp"
#include "rxc/oracle.hpp"
#include "rxc/solver.hpp"
#include "support/generators.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

Puzzle bits_puzzle(const char* r, const char* c) {
    const Alphabet a(std::vector<std::string>{"0", "1"});
    return Puzzle::uniform(parse(r, a), parse(c, a));
}

}  // namespace

TEST(Solver, TwoByTwoExample) {
    const Puzzle p = bits_puzzle("01|10", "01|10");
    const auto g = solve(p, 2, 2);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->alphabet().spell(g->row(0)), "0 1");
    EXPECT_EQ(g->alphabet().spell(g->row(1)), "1 0");
    EXPECT_EQ(count(p, 2, 2), 2);
    EXPECT_FALSE(is_unique(p, 2, 2));
    EXPECT_TRUE(verify(p, *g));
    EXPECT_FALSE(solve(p, 3, 2));
    EXPECT_EQ(count(p, 3, 3), 0);
}

TEST(Solver, PerLineAndCap) {
    const Alphabet a(std::vector<std::string>{"0", "1"});
    const Puzzle p{a, LineSpec::per_line({parse("1(0|1)", a), parse("(0|1)1", a)}), LineSpec::uniform(parse("(0|1)*", a)),
                   std::nullopt, std::nullopt};
    EXPECT_EQ(count(p, 2, 2), 4);
    EXPECT_EQ(enumerate(p, 2, 2, 3).size(), 3u);
    EXPECT_THROW(count(p, 3, 2), DimensionError);
    EXPECT_TRUE(is_unique(bits_puzzle("1*", "1*"), 3, 4));
}

TEST(Solver, DimensionChecks) {
    const Puzzle p = bits_puzzle("0", "0");
    EXPECT_THROW(solve(p, 0, 1), DimensionError);
    Puzzle fixed = p;
    fixed.fixed_m = 2;
    EXPECT_THROW(count(fixed, 1, 1), DimensionError);
}

TEST(SolverProperty, EnumerateMatchesBruteForce) {
    Rng rng(kDefaultSeed + 20);
    for (int i = 0; i < 200; ++i) {
        const Puzzle p = random_puzzle(rng, 3);
        const std::size_t m = 1 + i % 3, n = 1 + (i / 3) % 3;
        const auto want = oracle::brute_force_crosswords(p, m, n);
        const auto serial = enumerate(p, m, n, std::nullopt, Execution::Serial);
        const auto parallel = enumerate(p, m, n, std::nullopt, Execution::Parallel);
        ASSERT_EQ(serial, want) << print(p.rows.at(0)) << " / " << print(p.cols.at(0));
        ASSERT_EQ(parallel, want);
        ASSERT_EQ(count(p, m, n, Execution::Serial), want.size());
        ASSERT_EQ(count(p, m, n, Execution::Parallel), want.size());
        ASSERT_EQ(is_unique(p, m, n), want.size() == 1);
        const auto least = solve(p, m, n);
        ASSERT_EQ(least.has_value(), !want.empty());
        if (least) {
            ASSERT_EQ(*least, want.front());
        }
    }
}

TEST(SolverProperty, PluralAgreesWithDefinition) {
    Rng rng(kDefaultSeed + 21);
    for (int i = 0; i < 150; ++i) {
        const Alphabet a = letters(1 + i % 2);
        const Regex r = random_regex(rng, a), c = random_regex(rng, a);
        bool thin = false;
        for (std::size_t len = 1; len <= 6 && !thin; ++len) {
            thin = count(Puzzle::uniform(r, c), 1, len) > 0 || count(Puzzle::uniform(r, c), len, 1) > 0;
        }
        const bool want = is_positive(r) && is_positive(c) && !thin;
        ASSERT_EQ(is_plural(r, c), want) << print(r) << " / " << print(c);
    }
}
