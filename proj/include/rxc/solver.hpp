#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rxc/grid.hpp"
#include "rxc/puzzle.hpp"

namespace rxc {

using BigInt = boost::multiprecision::cpp_int;

// Serial is the reference search; Parallel splits the search tree at a
// shallow depth and explores subtrees on OpenMP threads. Both produce
// identical results in identical order.
enum class Execution { Serial, Parallel };

bool verify(const Puzzle& p, const Grid& g);

// Lexicographically least solution (row-major, by symbol id).
std::optional<Grid> solve(const Puzzle& p, std::size_t m, std::size_t n);

std::vector<Grid> enumerate(const Puzzle& p, std::size_t m, std::size_t n,
                            std::optional<std::size_t> cap = std::nullopt,
                            Execution exec = Execution::Parallel);

BigInt count(const Puzzle& p, std::size_t m, std::size_t n, Execution exec = Execution::Parallel);

bool is_unique(const Puzzle& p, std::size_t m, std::size_t n);

// Both expressions positive and no crossword with a single row or a single
// column exists.
bool is_plural(const Regex& r, const Regex& c);

struct DecideOptions {
    // Safety valve on the number of distinct profiles; exceeded -> LimitExceeded.
    std::size_t profile_limit = 5'000'000;
};

struct WidthDecision {
    bool exists = false;
    std::optional<std::size_t> width;
    std::optional<Grid> witness;
    std::size_t profiles_explored = 0;
};

// Whether some m x n crossword exists for some n >= 1, where row i must
// match rows[i] and every column must match c. Breadth-first over profiles
// (the tuple of row automaton states), so a positive answer carries the
// least width.
WidthDecision decide_unbounded_width(const std::vector<Regex>& rows, const Regex& c,
                                     const DecideOptions& options = {});

}  // namespace rxc
