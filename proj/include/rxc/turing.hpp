#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rxc/alphabet.hpp"
#include "rxc/grid.hpp"

namespace rxc {

struct TmState {
    std::uint32_t id = 0;
    friend auto operator<=>(TmState, TmState) = default;
};

struct TapeSym {
    std::uint32_t id = 0;
    friend auto operator<=>(TapeSym, TapeSym) = default;
};

using Tape = std::vector<TapeSym>;

enum class Move : std::uint8_t { Left, Right };

struct Transition {
    TmState next;
    TapeSym write;
    Move move;
};

// Deterministic single-tape machine (Q, Gamma, delta, q0, qh, B). The
// transition table may be partial; a configuration without a transition is
// stuck, which counts as not halting.
class TuringMachine {
public:
    struct Rule {
        std::string state;
        std::string read;
        std::string next;
        std::string write;
        Move move;
    };

    // States are numbered start first, then in order of first mention in
    // `rules`, then halt if not yet mentioned.
    TuringMachine(std::vector<std::string> tape_symbols, const std::string& blank, const std::string& start,
                  const std::string& halt, std::vector<Rule> rules);

    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t tape_symbol_count() const noexcept { return tape_.size(); }
    const std::string& state_name(TmState q) const { return states_.at(q.id); }
    const std::string& symbol_name(TapeSym a) const { return tape_.at(a.id); }
    std::optional<TmState> find_state(const std::string& name) const;
    std::optional<TapeSym> find_symbol(const std::string& name) const;
    TapeSym symbol(const std::string& name) const;  // throws when unknown
    const std::vector<std::string>& state_names() const noexcept { return states_; }
    const std::vector<std::string>& symbol_names() const noexcept { return tape_; }

    TmState start() const noexcept { return start_; }
    TmState halt() const noexcept { return halt_; }
    TapeSym blank() const noexcept { return blank_; }

    const std::optional<Transition>& delta(TmState q, TapeSym a) const;
    const std::vector<Rule>& rules() const noexcept { return rules_; }
    bool is_total() const;

    // Tape from a whitespace-free string of single-character symbols, or
    // from a list of symbol names.
    Tape tape_from_names(const std::vector<std::string>& names) const;

private:
    std::vector<std::string> tape_;
    std::vector<std::string> states_;
    std::vector<Rule> rules_;
    std::vector<std::optional<Transition>> table_;
    TmState start_;
    TmState halt_;
    TapeSym blank_;
};

struct Configuration {
    TmState state;
    std::int64_t head = 0;
    Tape tape;  // cells window_left .. window_left + tape.size() - 1
};

// Configurations of a run. Cell 0 holds the blank scanned at the start and
// the input occupies cells 1..n. Every configuration stores the same window,
// which covers each scanned cell and each input cell.
struct RunTrace {
    std::int64_t window_left = 0;
    std::vector<Configuration> configs;
    std::int64_t min_head = 0;
    std::int64_t max_head = 0;

    TapeSym cell(std::size_t t, std::int64_t c, TapeSym blank) const;
};

enum class RunOutcome { Halted, Timeout, Stuck };

struct SimulationResult {
    RunOutcome outcome = RunOutcome::Timeout;
    std::size_t steps = 0;
    RunTrace trace;  // steps + 1 configurations

    bool halted() const noexcept { return outcome == RunOutcome::Halted; }
};

SimulationResult simulate(const TuringMachine& m, const Tape& input, std::size_t max_steps);

enum class LoopVerdict { Halts, Loops, Stuck, Unknown };

struct LoopCheck {
    LoopVerdict verdict = LoopVerdict::Unknown;
    std::size_t steps = 0;  // steps to halt, or to the first repeated configuration
};

// Runs until halting, getting stuck, or revisiting a configuration, which
// proves the run never halts.
LoopCheck check_halting(const TuringMachine& m, const Tape& input, std::size_t max_steps);

enum class Verdict { Pass, Fail, Unknown };

struct AssumptionCheck {
    Verdict verdict = Verdict::Unknown;
    std::string detail;
};

struct AssumptionReport {
    std::array<AssumptionCheck, 4> items;
    std::vector<std::string> notes;

    bool all_pass() const;
};

// The four conditions the tableau encoding relies on: start on the blank
// left of the input; first move (q0,B) -> (q1,B,L) with q1 != q0; never
// re-entering q0 nor moving left of that first position; scanning the blank
// right of the input.
AssumptionReport validate_assumptions(const TuringMachine& m, const Tape& w, std::size_t max_steps);

// Markers over a machine: unscanned [a], scanned [a,q] and transmission
// <a|q> for q != q0, in that order.
class MarkerAlphabet {
public:
    enum class Kind { Unscanned, Scanned, Transmission };
    struct Decoded {
        Kind kind;
        TapeSym a;
        TmState q;  // unused for unscanned markers
    };

    explicit MarkerAlphabet(std::shared_ptr<const TuringMachine> m);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const TuringMachine& machine() const noexcept { return *machine_; }
    Symbol unscanned(TapeSym a) const;
    Symbol scanned(TapeSym a, TmState q) const;
    std::optional<Symbol> transmission(TapeSym a, TmState q) const;
    Decoded decode(Symbol s) const;

private:
    std::shared_ptr<const TuringMachine> machine_;
    Alphabet alphabet_;
};

MarkerAlphabet marker_alphabet(const TuringMachine& m);

// One row per configuration, one column per scanned cell.
Grid build_tableau(const RunTrace& t, const MarkerAlphabet& markers);

// Rows 0..rows-1 over cells first_cell .. first_cell + width - 1. Row t
// marks where the head lands at t + 1 whenever the trace has that
// configuration and row t is not halted.
Grid tableau_window(const RunTrace& t, const MarkerAlphabet& markers, std::int64_t first_cell, std::size_t width,
                    std::size_t rows);

}  // namespace rxc
