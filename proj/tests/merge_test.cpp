#include <gtest/gtest.h>

#include <set>

#include "rxc/error.hpp"
#include "rxc/merge.hpp"
#include "rxc/solver.hpp"
#include "support/generators.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

// Random plural pair with at least one crossword of size at most 3 x 3.
std::optional<std::pair<Regex, Regex>> plural_pair(Rng& rng, const Alphabet& a) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        const Regex r = random_positive_regex(rng, a), c = random_positive_regex(rng, a);
        if (!is_plural(r, c)) continue;
        const Puzzle p = Puzzle::uniform(r, c);
        for (std::size_t m = 2; m <= 3; ++m) {
            for (std::size_t n = 2; n <= 3; ++n) {
                if (solve(p, m, n)) return std::make_pair(r, c);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TEST(MergeCode, FreshSymbols) {
    const MergeCode plain = merge_code(letters(2));
    EXPECT_EQ(plain.extended.token(plain.heart), "hrt");
    EXPECT_EQ(plain.extended.token(plain.diamond), "dmd");
    EXPECT_EQ(plain.extended.token(plain.spade), "spd");
    EXPECT_TRUE(plain.base.is_prefix_of(plain.extended));

    const MergeCode clash = merge_code(Alphabet(std::vector<std::string>{"hrt", "spd", "spd'"}));
    EXPECT_EQ(clash.extended.token(clash.heart), "hrt'");
    EXPECT_EQ(clash.extended.token(clash.diamond), "dmd");
    EXPECT_EQ(clash.extended.token(clash.spade), "spd''");
}

TEST(Merge, RejectsNonPluralPairs) {
    const Alphabet a = letters(2);
    EXPECT_THROW(merge_rc(parse("a", a), parse("a", a)), Error);
    EXPECT_THROW(merge_rc(parse("a*", a), parse("aa", a)), Error);
    EXPECT_NO_THROW(merge_rc(parse("a*", a), parse("aa", a), false));
}

TEST(Merge, RhoRoundTrip) {
    const Alphabet a = letters(2);
    const Merged mg = merge_rc(parse("ab|ba", a), parse("ab|ba", a));
    const Grid x = Grid::from_rows(a, {a.word({"a", "b"}), a.word({"b", "a"})});
    const Grid y = rho_encode(x, mg.code);
    EXPECT_EQ(y.m(), 3u);
    EXPECT_EQ(y.n(), 3u);
    EXPECT_EQ(y.alphabet().spell(y.col(0)), "hrt hrt dmd");
    EXPECT_EQ(y.alphabet().spell(y.row(2)), "dmd spd spd");
    EXPECT_TRUE(verify(Puzzle::uniform(mg.e, mg.e), y));
    const RhoDecoded direct = rho_decode(y, mg.code);
    EXPECT_FALSE(direct.transposed);
    EXPECT_EQ(direct.inner, x);
    const RhoDecoded flipped = rho_decode(y.transpose(), mg.code);
    EXPECT_TRUE(flipped.transposed);
    EXPECT_EQ(flipped.inner, x);
    EXPECT_THROW(rho_decode(y.transpose(), mg.code, false), Error);
}

TEST(MergeProperty, CrosswordsOfEAreRhoImages) {
    // (E,E)-crosswords of size (m+1) x (n+1) are exactly the rho images of
    // m x n (R,C)-crosswords and the transposed images of n x m ones.
    Rng rng(kDefaultSeed + 40);
    int checked = 0;
    for (int i = 0; i < 12; ++i) {
        const Alphabet a = letters(2 + i % 2);
        const auto pair = plural_pair(rng, a);
        if (!pair) continue;
        const auto& [r, c] = *pair;
        const Merged mg = merge_rc(r, c);
        const Puzzle rc = Puzzle::uniform(r, c), ee = Puzzle::uniform(mg.e, mg.e);
        for (std::size_t m = 2; m <= 3; ++m) {
            for (std::size_t n = 2; n <= 3; ++n) {
                std::set<Grid> want;
                for (const Grid& x : enumerate(rc, m, n)) {
                    const Grid y = rho_encode(x, mg.code);
                    ASSERT_TRUE(verify(ee, y));
                    ASSERT_EQ(y.m() == y.n(), x.m() == x.n());
                    want.insert(y);
                }
                for (const Grid& x : enumerate(rc, n, m)) want.insert(rho_encode(x, mg.code).transpose());
                const auto got = enumerate(ee, m + 1, n + 1);
                ASSERT_EQ(std::set<Grid>(got.begin(), got.end()), want) << print(r) << " / " << print(c);
                for (const Grid& y : got) {
                    const RhoDecoded d = rho_decode(y, mg.code);
                    ASSERT_TRUE(verify(rc, d.inner));
                }
            }
        }
        ++checked;
    }
    EXPECT_GE(checked, 5);
}
