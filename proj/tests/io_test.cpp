#include <gtest/gtest.h>

#include "rxc/error.hpp"
#include "rxc/io.hpp"
#include "rxc/np_reductions.hpp"
#include "rxc/tableau_reduction.hpp"
#include "support/generators.hpp"
#include "support/machines.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

std::string error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

void expect_same(const Puzzle& a, const Puzzle& b) {
    EXPECT_EQ(a.alphabet, b.alphabet);
    EXPECT_EQ(a.rows.is_uniform(), b.rows.is_uniform());
    EXPECT_EQ(a.cols.is_uniform(), b.cols.is_uniform());
    ASSERT_EQ(a.rows.expressions().size(), b.rows.expressions().size());
    ASSERT_EQ(a.cols.expressions().size(), b.cols.expressions().size());
    for (std::size_t i = 0; i < a.rows.expressions().size(); ++i) {
        EXPECT_EQ(print(a.rows.expressions()[i]), print(b.rows.expressions()[i]));
    }
    for (std::size_t i = 0; i < a.cols.expressions().size(); ++i) {
        EXPECT_EQ(print(a.cols.expressions()[i]), print(b.cols.expressions()[i]));
    }
    EXPECT_EQ(a.fixed_m, b.fixed_m);
    EXPECT_EQ(a.fixed_n, b.fixed_n);
}

}  // namespace

TEST(PuzzleFile, ParsesBothLayouts) {
    const Puzzle u = io::parse_puzzle("# two by two\nalphabet = 0 1\n\nR* = 01|10\nC* = (01|10)\n");
    EXPECT_TRUE(u.rows.is_uniform());
    EXPECT_FALSE(u.fixed_m);
    const Puzzle l = io::parse_puzzle("alphabet = x yy\nrows = 2\nR = x\nR = {yy}\nC* = x {yy}\n");
    EXPECT_EQ(l.rows.expressions().size(), 2u);
    EXPECT_EQ(l.fixed_m, 2u);
}

TEST(PuzzleFile, ErrorsNameTheLine) {
    EXPECT_NE(error_of([] { io::parse_puzzle("alphabet = a\nR* = (a\nC* = a\n"); }).find("line 2"), std::string::npos);
    EXPECT_NE(error_of([] { io::parse_puzzle("alphabet = a\nR* = a\nC* = a\nfoo = 1\n"); }).find("line 4"),
              std::string::npos);
    EXPECT_NE(error_of([] { io::parse_puzzle("R* = a\n"); }).find("line 1"), std::string::npos);
    EXPECT_NE(error_of([] { io::parse_puzzle("alphabet = a\nR* = a\nR = a\nC* = a\n"); }).find("line 3"),
              std::string::npos);
    EXPECT_THROW(io::parse_puzzle("alphabet = a\nR* = a\n"), Error);
    EXPECT_THROW(io::parse_puzzle("alphabet = a\nrows = 2\nR = a\nC* = a\n"), DimensionError);
}

TEST(PuzzleFileProperty, RoundTrip) {
    Rng rng(kDefaultSeed + 80);
    for (int i = 0; i < 100; ++i) {
        Puzzle p = random_puzzle(rng, 3);
        if (i % 2) p.fixed_m = 1 + i % 4;
        const Puzzle back = io::parse_puzzle(io::format_puzzle(p, {"generated"}));
        expect_same(p, back);
    }
    const Puzzle vc = vc_reduce(GraphInstance{3, {{1, 2}, {2, 3}}, 1});
    expect_same(vc, io::parse_puzzle(io::format_puzzle(vc)));
    const MarkerAlphabet markers(demo_machine());
    const Puzzle tm = Puzzle::uniform(build_row_expr(markers, demo_machine()->tape_from_names({"a"})),
                                      build_col_expr(markers));
    expect_same(tm, io::parse_puzzle(io::format_puzzle(tm)));
}

TEST(GridFile, RoundTripAndErrors) {
    const Alphabet a(std::vector<std::string>{"[B]", "<a|q1>", "x"});
    const Grid g = Grid::from_rows(a, {a.word({"[B]", "x"}), a.word({"<a|q1>", "[B]"})});
    const std::string text = io::format_grid(g);
    EXPECT_EQ(text, "2 2\n[B] x\n<a|q1> [B]\n");
    EXPECT_EQ(io::parse_grid(text, a), g);
    EXPECT_NE(error_of([&] { io::parse_grid("2 2\n[B] x\n[B] y\n", a); }).find("line 3"), std::string::npos);
    EXPECT_NE(error_of([&] { io::parse_grid("2 2\n[B] x x\n[B] x\n", a); }).find("line 2"), std::string::npos);
    EXPECT_THROW(io::parse_grid("2 2\n[B] x\n", a), Error);
    EXPECT_THROW(io::parse_grid("0 2\n", a), Error);
}

TEST(MachineFile, RoundTripAndErrors) {
    const auto m = demo_machine();
    const TuringMachine back = io::parse_machine(io::format_machine(*m));
    EXPECT_EQ(io::format_machine(back), io::format_machine(*m));
    EXPECT_EQ(io::format_machine(*m), demo_machine_text());
    EXPECT_NE(error_of([] { io::parse_machine("blank = B\nstart = q\nhalt = h\ntape = B\ndelta q B = h B X\n"); })
                  .find("line 5"),
              std::string::npos);
    EXPECT_THROW(io::parse_machine("blank = B\nstart = q\ntape = B\n"), Error);
}

TEST(MachineFile, Tapes) {
    const auto m = demo_machine();
    EXPECT_EQ(io::parse_tape(*m, "a#a").size(), 3u);
    EXPECT_EQ(io::parse_tape(*m, "a # a").size(), 3u);
    EXPECT_TRUE(io::parse_tape(*m, "").empty());
    EXPECT_THROW(io::parse_tape(*m, "ab"), Error);
}

TEST(Dimacs, RoundTripAndErrors) {
    const CnfFormula f = io::parse_dimacs("c example\np cnf 3 2\n1 -3 0\n2\n3 0\n");
    ASSERT_EQ(f.clauses.size(), 2u);
    EXPECT_EQ(f.clauses[1].size(), 2u);
    EXPECT_EQ(f.clauses[0][1], (Literal{2, false}));
    EXPECT_EQ(io::format_dimacs(f), "p cnf 3 2\n1 -3 0\n2 3 0\n");
    const CnfFormula back = io::parse_dimacs(io::format_dimacs(f));
    EXPECT_EQ(back.clauses, f.clauses);
    EXPECT_NE(error_of([] { io::parse_dimacs("p cnf 2 1\n1 4 0\n"); }).find("line 2"), std::string::npos);
    EXPECT_NE(error_of([] { io::parse_dimacs("1 2 0\n"); }).find("line 1"), std::string::npos);
    EXPECT_THROW(io::parse_dimacs("p cnf 2 2\n1 0\n"), Error);
    EXPECT_NO_THROW(io::parse_dimacs("p cnf 1 1\n1 0\n%\n0\n"));
}

TEST(GraphFile, RoundTripAndErrors) {
    const GraphInstance g = io::parse_graph("# path\n3 2\n1 2\n2 3\n", 1);
    EXPECT_EQ(g.edges.size(), 2u);
    EXPECT_EQ(io::format_graph(g), "3 2\n1 2\n2 3\n");
    EXPECT_NE(error_of([] { io::parse_graph("3 1\n1 x\n", 1); }).find("line 2"), std::string::npos);
    EXPECT_THROW(io::parse_graph("3 1\n1 4\n", 1), Error);
}
