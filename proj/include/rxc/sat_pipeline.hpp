#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rxc/binary_code.hpp"
#include "rxc/grid.hpp"
#include "rxc/instances.hpp"
#include "rxc/merge.hpp"
#include "rxc/regex.hpp"
#include "rxc/turing.hpp"

namespace rxc {

// CNF evaluator over the tape w B a, where w holds one "/" per clause
// followed by one symbol per variable (1 positive, 0 negative, - absent) and
// a holds the assignment. For each variable, right to left, it sweeps the
// whole formula marking that variable's literal in every clause Y (true) or
// X (false), then checks every clause for a Y. The head path depends only on
// |w| and the variable count, so every halting run takes the same number of
// steps. A falsified clause sends the machine into a two-cell loop at the
// moment a satisfying run would halt.
TuringMachine sat_evaluator();

// The encoding w of the formula for the evaluator's tape alphabet.
Tape encode_formula(const TuringMachine& m, const CnfFormula& f);

// w B a.
Tape evaluator_input(const TuringMachine& m, const Tape& w, const std::vector<bool>& assignment);

// Configurations of a halting evaluator run on a formula of length n with k
// variables: 2n + 2k + 8 + k(2n + 2k + 4).
std::size_t sat_clock(std::size_t n, std::size_t k);

using ClockFunction = std::function<std::size_t(std::size_t n, std::size_t k)>;

struct ClockReport {
    bool exact = true;
    std::size_t assignments = 0;
    std::size_t satisfying = 0;
    std::vector<std::string> problems;
};

// Runs every assignment and checks: the machine's assumptions hold; it halts
// iff the assignment satisfies f, and then after exactly p - 1 steps; it is
// provably looping otherwise; the head follows the same path for the first
// p - 1 steps on every assignment.
ClockReport check_clock(const TuringMachine& m, const CnfFormula& f, std::size_t p);

struct SatReductionOptions {
    bool binary = false;       // also build the {0,1} pair
    bool verify_clock = true;  // run check_clock first (needs k <= 16)
};

struct SatReductionArtifacts {
    CnfFormula formula;
    std::shared_ptr<const TuringMachine> machine;
    std::shared_ptr<const MarkerAlphabet> markers;
    Tape w;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t p = 0;    // side of every marker-level crossword
    std::size_t ell = 0;  // marker count
    std::size_t q = 0;    // 3 ell (p + 1) + 1, side of every binary crossword
    Regex r{Alphabet(), re::eps()};   // marker-level rows
    Regex c2{Alphabet(), re::eps()};  // C | [B]+
    std::shared_ptr<const BinaryCode> code;
    std::optional<Regex> r_bin;
    std::optional<Regex> c_bin;
};

SatReductionArtifacts sat_reduce(const CnfFormula& f, const SatReductionOptions& options = {});
SatReductionArtifacts sat_reduce(const CnfFormula& f, const TuringMachine& m, const ClockFunction& p,
                                 const SatReductionOptions& options = {});

// <B|q1>[B,q0][w1]..[wn][B]([0]|[1])^k[B]^(p-n-k-3).
NodePtr sat_initial_row(const MarkerAlphabet& markers, const Tape& w, std::size_t k, std::size_t p);

// The p x p marker grid of the first p configurations of the run on w B a,
// over cells -1 .. p-2. It is a crossword exactly when a satisfies f.
Grid candidate_tableau(const SatReductionArtifacts& a, const std::vector<bool>& assignment);

struct EeInstance {
    Regex e;
    std::size_t side = 0;  // 15 (q + 2) + 1
    MergeCode code;
};

// E = f(5, merge(R', C')). Needs artifacts built with `binary`.
EeInstance ee_from_sat(const SatReductionArtifacts& a);

}  // namespace rxc
