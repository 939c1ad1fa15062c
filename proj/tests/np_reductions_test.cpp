#include <gtest/gtest.h>

#include <set>

#include "rxc/error.hpp"
#include "rxc/np_reductions.hpp"
#include "rxc/oracle.hpp"
#include "rxc/solver.hpp"
#include "support/generators.hpp"

using namespace rxc;
using namespace rxc::testing;

TEST(VertexCover, TriangleNeedsTwo) {
    GraphInstance g{3, {{1, 2}, {2, 3}, {1, 3}}, 1};
    const Puzzle p1 = vc_reduce(g);
    EXPECT_EQ(p1.fixed_m, 3u);
    EXPECT_EQ(p1.fixed_n, 4u);
    EXPECT_FALSE(solve(p1, 3, 4));
    g.k = 2;
    const auto x = solve(vc_reduce(g), 3, 4);
    ASSERT_TRUE(x);
    EXPECT_EQ(cover_from_grid(*x).size(), 2u);
}

TEST(VertexCoverProperty, AgreesWithBruteForce) {
    Rng rng(kDefaultSeed + 70);
    for (int i = 0; i < 40; ++i) {
        const std::size_t v = 2 + i % 5;
        GraphInstance g = random_graph(rng, v, 0.5, 1);
        for (std::size_t k = 1; k <= v; ++k) {
            g.k = k;
            const Puzzle p = vc_reduce(g);
            const auto x = solve(p, *p.fixed_m, *p.fixed_n);
            ASSERT_EQ(x.has_value(), oracle::brute_force_vertex_cover(g)) << i << " k=" << k;
            if (!x) continue;
            const auto cover = cover_from_grid(*x);
            ASSERT_LE(cover.size(), k);
            const std::set<std::size_t> in(cover.begin(), cover.end());
            for (const auto& [a, b] : g.edges) ASSERT_TRUE(in.count(a) || in.count(b));
        }
    }
}

TEST(ThreeSat, RequiresExactThreeCnf) {
    CnfFormula f;
    f.variables = 3;
    f.clauses = {{{0, true}, {1, true}}};
    EXPECT_THROW(threesat_reduce(f), Error);
    f.clauses = {{{2, true}, {1, true}, {0, true}}};
    EXPECT_THROW(threesat_reduce(f), Error);
}

TEST(ThreeSatProperty, AgreesWithSatisfiability) {
    Rng rng(kDefaultSeed + 71);
    for (int i = 0; i < 40; ++i) {
        const std::size_t vars = 3 + i % 2;
        const CnfFormula f = random_three_cnf(rng, vars, 2 + i % 10);
        const Puzzle p = threesat_reduce(f);
        const auto x = solve(p, f.clauses.size(), vars);
        ASSERT_EQ(x.has_value(), oracle::brute_force_sat_count(f) > 0) << i;
        // Every crossword is a constant-column grid of one satisfying assignment.
        const auto all = enumerate(p, f.clauses.size(), vars);
        std::set<std::vector<bool>> seen;
        for (const Grid& g : all) {
            const auto asg = assignment_from_grid(g);
            ASSERT_TRUE(f.satisfied_by(asg));
            seen.insert(asg);
        }
        ASSERT_EQ(seen.size(), all.size());
        ASSERT_EQ(all.size(), oracle::brute_force_sat_count(f));
    }
}
