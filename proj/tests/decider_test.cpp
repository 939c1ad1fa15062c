#include <gtest/gtest.h>

#include "rxc/error.hpp"
#include "rxc/solver.hpp"
#include "support/generators.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

std::optional<std::size_t> least_width_by_search(const std::vector<Regex>& rows, const Regex& c, std::size_t bound) {
    const Puzzle p{c.alphabet(), LineSpec::per_line(rows), LineSpec::uniform(c), std::nullopt, std::nullopt};
    for (std::size_t n = 1; n <= bound; ++n) {
        if (solve(p, rows.size(), n)) return n;
    }
    return std::nullopt;
}

std::vector<Regex> parse_all(const std::vector<const char*>& texts, const Alphabet& a) {
    std::vector<Regex> out;
    for (const char* t : texts) out.push_back(parse(t, a));
    return out;
}

}  // namespace

TEST(Decider, ParityConflictIsRejected) {
    const Alphabet a = letters(1);
    const auto d = decide_unbounded_width(parse_all({"(aa)+", "a(aa)*"}, a), parse("aa", a));
    EXPECT_FALSE(d.exists);
    EXPECT_GT(d.profiles_explored, 0u);
}

TEST(Decider, LeastWidthAndWitness) {
    const Alphabet a = letters(2);
    const auto rows = parse_all({"(aaa)+b", "(a|b)*bb"}, a);
    const Regex c = parse("ab|aa|bb", a);
    const auto d = decide_unbounded_width(rows, c);
    ASSERT_TRUE(d.exists);
    EXPECT_EQ(*d.width, 4u);
    const Puzzle p{a, LineSpec::per_line(rows), LineSpec::uniform(c), std::nullopt, std::nullopt};
    EXPECT_TRUE(verify(p, *d.witness));
}

TEST(Decider, ProfileLimit) {
    const Alphabet a = letters(1);
    EXPECT_THROW(decide_unbounded_width(parse_all({"(aaaaaaa)+", "(aaaaa)+", "(aaa)+"}, a), parse("aaa", a),
                                        DecideOptions{3}),
                 LimitExceeded);
}

TEST(DeciderProperty, AgreesWithBoundedSearch) {
    Rng rng(kDefaultSeed + 30);
    const RegexShape shape{3, true, true};
    for (int i = 0; i < 120; ++i) {
        const Alphabet a = letters(1 + i % 2);
        std::vector<Regex> rows;
        for (std::size_t r = 0; r < 1 + static_cast<std::size_t>(i % 3); ++r) rows.push_back(random_regex(rng, a, shape));
        const Regex c = random_regex(rng, a, shape);
        const auto d = decide_unbounded_width(rows, c);
        const auto searched = least_width_by_search(rows, c, 8);
        if (d.exists && *d.width <= 8) {
            ASSERT_EQ(searched, d.width) << i;
        } else {
            ASSERT_FALSE(searched) << i;
        }
    }
}
