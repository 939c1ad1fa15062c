#include "rxc/turing.hpp"

#include <algorithm>
#include <unordered_set>

#include "rxc/error.hpp"

namespace rxc {

// ---------------------------------------------------------------- machine

TuringMachine::TuringMachine(std::vector<std::string> tape_symbols, const std::string& blank,
                             const std::string& start, const std::string& halt, std::vector<Rule> rules)
    : tape_(std::move(tape_symbols)), rules_(std::move(rules)) {
    if (tape_.empty()) throw Error("tape alphabet is empty");
    for (std::size_t i = 0; i < tape_.size(); ++i) {
        if (tape_[i].empty()) throw Error("empty tape symbol name");
        if (std::find(tape_.begin(), tape_.begin() + static_cast<std::ptrdiff_t>(i), tape_[i]) !=
            tape_.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw Error("duplicate tape symbol '" + tape_[i] + "'");
        }
    }
    if (start == halt) throw Error("halting state must differ from the start state");
    blank_ = symbol(blank);

    auto add_state = [&](const std::string& name) {
        if (name.empty()) throw Error("empty state name");
        if (std::find(states_.begin(), states_.end(), name) == states_.end()) states_.push_back(name);
    };
    add_state(start);
    for (const auto& r : rules_) {
        add_state(r.state);
        add_state(r.next);
    }
    add_state(halt);
    start_ = *find_state(start);
    halt_ = *find_state(halt);

    table_.assign(states_.size() * tape_.size(), std::nullopt);
    for (const auto& r : rules_) {
        TmState q = *find_state(r.state);
        if (q == halt_) throw Error("halting state '" + r.state + "' has a transition");
        TapeSym a = symbol(r.read);
        auto& slot = table_[q.id * tape_.size() + a.id];
        if (slot) throw Error("two transitions for (" + r.state + ", " + r.read + ")");
        slot = Transition{*find_state(r.next), symbol(r.write), r.move};
    }
}

std::optional<TmState> TuringMachine::find_state(const std::string& name) const {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return TmState{static_cast<std::uint32_t>(it - states_.begin())};
}

std::optional<TapeSym> TuringMachine::find_symbol(const std::string& name) const {
    auto it = std::find(tape_.begin(), tape_.end(), name);
    if (it == tape_.end()) return std::nullopt;
    return TapeSym{static_cast<std::uint32_t>(it - tape_.begin())};
}

TapeSym TuringMachine::symbol(const std::string& name) const {
    if (auto a = find_symbol(name)) return *a;
    throw Error("unknown tape symbol '" + name + "'");
}

const std::optional<Transition>& TuringMachine::delta(TmState q, TapeSym a) const {
    return table_.at(q.id * tape_.size() + a.id);
}

bool TuringMachine::is_total() const {
    for (std::uint32_t q = 0; q < states_.size(); ++q) {
        if (TmState{q} == halt_) continue;
        for (std::uint32_t a = 0; a < tape_.size(); ++a) {
            if (!delta(TmState{q}, TapeSym{a})) return false;
        }
    }
    return true;
}

Tape TuringMachine::tape_from_names(const std::vector<std::string>& names) const {
    Tape t;
    t.reserve(names.size());
    for (const auto& n : names) t.push_back(symbol(n));
    return t;
}

// ---------------------------------------------------------------- simulation

TapeSym RunTrace::cell(std::size_t t, std::int64_t c, TapeSym blank) const {
    const auto& tape = configs.at(t).tape;
    if (c < window_left || c >= window_left + static_cast<std::int64_t>(tape.size())) return blank;
    return tape[static_cast<std::size_t>(c - window_left)];
}

namespace {

// Two-way tape addressed by absolute cell index.
class GrowTape {
public:
    GrowTape(const Tape& input, TapeSym blank) : blank_(blank), left_(0) {
        cells_.push_back(blank);
        cells_.insert(cells_.end(), input.begin(), input.end());
    }

    TapeSym get(std::int64_t c) const {
        if (c < left_ || c >= right()) return blank_;
        return cells_[static_cast<std::size_t>(c - left_)];
    }

    void set(std::int64_t c, TapeSym a) {
        while (c < left_) {
            cells_.insert(cells_.begin(), blank_);
            --left_;
        }
        while (c >= right()) cells_.push_back(blank_);
        cells_[static_cast<std::size_t>(c - left_)] = a;
    }

    Tape window(std::int64_t from, std::int64_t to) const {
        Tape w;
        for (std::int64_t c = from; c <= to; ++c) w.push_back(get(c));
        return w;
    }

    // Canonical text of the nonblank region, for loop detection.
    std::string key() const {
        std::int64_t lo = left_, hi = right() - 1;
        while (lo <= hi && get(lo) == blank_) ++lo;
        while (hi >= lo && get(hi) == blank_) --hi;
        std::string k = std::to_string(lo) + ":";
        for (std::int64_t c = lo; c <= hi; ++c) {
            k += std::to_string(get(c).id);
            k += ',';
        }
        return k;
    }

private:
    std::int64_t right() const { return left_ + static_cast<std::int64_t>(cells_.size()); }

    TapeSym blank_;
    std::int64_t left_;
    Tape cells_;
};

struct RawStep {
    TmState state;
    std::int64_t head;
};

}  // namespace

SimulationResult simulate(const TuringMachine& m, const Tape& input, std::size_t max_steps) {
    GrowTape tape(input, m.blank());
    std::vector<RawStep> path{{m.start(), 0}};
    std::vector<GrowTape> snapshots{tape};
    SimulationResult result;
    TmState q = m.start();
    std::int64_t head = 0;
    result.outcome = RunOutcome::Timeout;
    while (q != m.halt()) {
        const auto& tr = m.delta(q, tape.get(head));
        if (!tr) {
            result.outcome = RunOutcome::Stuck;
            break;
        }
        if (result.steps == max_steps) break;
        tape.set(head, tr->write);
        head += tr->move == Move::Left ? -1 : 1;
        q = tr->next;
        ++result.steps;
        path.push_back({q, head});
        snapshots.push_back(tape);
    }
    if (q == m.halt()) result.outcome = RunOutcome::Halted;

    auto& trace = result.trace;
    trace.min_head = 0;
    trace.max_head = 0;
    for (const auto& p : path) {
        trace.min_head = std::min(trace.min_head, p.head);
        trace.max_head = std::max(trace.max_head, p.head);
    }
    trace.window_left = trace.min_head;
    const std::int64_t right = std::max(trace.max_head, static_cast<std::int64_t>(input.size()));
    trace.configs.reserve(path.size());
    for (std::size_t t = 0; t < path.size(); ++t) {
        trace.configs.push_back({path[t].state, path[t].head, snapshots[t].window(trace.window_left, right)});
    }
    return result;
}

LoopCheck check_halting(const TuringMachine& m, const Tape& input, std::size_t max_steps) {
    GrowTape tape(input, m.blank());
    TmState q = m.start();
    std::int64_t head = 0;
    std::unordered_set<std::string> seen;
    for (std::size_t steps = 0;; ++steps) {
        if (q == m.halt()) return {LoopVerdict::Halts, steps};
        const auto& tr = m.delta(q, tape.get(head));
        if (!tr) return {LoopVerdict::Stuck, steps};
        std::string key = std::to_string(q.id) + "@" + std::to_string(head) + "#" + tape.key();
        if (!seen.insert(std::move(key)).second) return {LoopVerdict::Loops, steps};
        if (steps == max_steps) return {LoopVerdict::Unknown, steps};
        tape.set(head, tr->write);
        head += tr->move == Move::Left ? -1 : 1;
        q = tr->next;
    }
}

// ---------------------------------------------------------------- assumptions

bool AssumptionReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.verdict == Verdict::Pass; });
}

AssumptionReport validate_assumptions(const TuringMachine& m, const Tape& w, std::size_t max_steps) {
    AssumptionReport report;
    report.items[0] = {Verdict::Pass, "the simulator starts on the blank cell left of the input"};

    const auto& first = m.delta(m.start(), m.blank());
    if (!first) {
        report.items[1] = {Verdict::Fail, "no transition from the start state on blank"};
    } else if (first->move != Move::Left || first->write != m.blank()) {
        report.items[1] = {Verdict::Fail, "first transition must rewrite the blank and move left"};
    } else if (first->next == m.start()) {
        report.items[1] = {Verdict::Fail, "first transition must leave the start state"};
    } else {
        report.items[1] = {Verdict::Pass, "first transition goes to " + m.state_name(first->next)};
    }

    const auto run = simulate(m, w, max_steps);
    const auto& cfg = run.trace.configs;
    const bool ended = run.outcome != RunOutcome::Timeout;

    std::string violation;
    if (cfg.size() > 1) {
        const std::int64_t floor = cfg[1].head;
        for (std::size_t t = 1; t < cfg.size() && violation.empty(); ++t) {
            if (cfg[t].state == m.start()) violation = "re-enters the start state at step " + std::to_string(t);
            if (cfg[t].head < floor) violation = "scans cell " + std::to_string(cfg[t].head) + " at step " +
                                                 std::to_string(t) + ", left of its first position";
        }
    }
    if (!violation.empty()) {
        report.items[2] = {Verdict::Fail, violation};
    } else if (ended) {
        report.items[2] = {Verdict::Pass, "no violation along the whole run"};
    } else {
        report.items[2] = {Verdict::Unknown, "no violation within " + std::to_string(max_steps) + " steps"};
    }

    const auto target = static_cast<std::int64_t>(w.size()) + 1;
    if (w.empty()) report.notes.push_back("empty input: the cell right of the input is taken to be cell 1");
    bool reached = std::any_of(cfg.begin(), cfg.end(), [&](const Configuration& c) { return c.head == target; });
    if (reached) {
        report.items[3] = {Verdict::Pass, "scans cell " + std::to_string(target)};
    } else if (ended) {
        report.items[3] = {Verdict::Fail, "never scans cell " + std::to_string(target)};
    } else {
        report.items[3] = {Verdict::Unknown, "cell " + std::to_string(target) + " not scanned within " +
                                                 std::to_string(max_steps) + " steps"};
    }
    if (run.outcome == RunOutcome::Stuck) {
        const auto& last = cfg.back();
        report.notes.push_back("stuck in state " + m.state_name(last.state) + " at step " +
                               std::to_string(run.steps) + " (no transition)");
    }
    return report;
}

// ---------------------------------------------------------------- markers

MarkerAlphabet::MarkerAlphabet(std::shared_ptr<const TuringMachine> m) : machine_(std::move(m)) {
    const auto& gamma = machine_->symbol_names();
    const auto& states = machine_->state_names();
    std::vector<std::string> tokens;
    for (const auto& a : gamma) tokens.push_back("[" + a + "]");
    for (const auto& a : gamma) {
        for (const auto& q : states) tokens.push_back("[" + a + "," + q + "]");
    }
    for (const auto& a : gamma) {
        for (std::uint32_t q = 0; q < states.size(); ++q) {
            if (TmState{q} == machine_->start()) continue;
            tokens.push_back("<" + a + "|" + states[q] + ">");
        }
    }
    alphabet_ = Alphabet(std::move(tokens));
}

Symbol MarkerAlphabet::unscanned(TapeSym a) const { return Symbol{a.id}; }

Symbol MarkerAlphabet::scanned(TapeSym a, TmState q) const {
    const auto g = machine_->tape_symbol_count(), nq = machine_->state_count();
    return Symbol{static_cast<std::uint32_t>(g + a.id * nq + q.id)};
}

std::optional<Symbol> MarkerAlphabet::transmission(TapeSym a, TmState q) const {
    if (q == machine_->start()) return std::nullopt;
    const auto g = machine_->tape_symbol_count(), nq = machine_->state_count();
    const auto slot = q.id < machine_->start().id ? q.id : q.id - 1;
    return Symbol{static_cast<std::uint32_t>(g + g * nq + a.id * (nq - 1) + slot)};
}

MarkerAlphabet::Decoded MarkerAlphabet::decode(Symbol s) const {
    const std::uint32_t g = static_cast<std::uint32_t>(machine_->tape_symbol_count());
    const std::uint32_t nq = static_cast<std::uint32_t>(machine_->state_count());
    if (s.id < g) return {Kind::Unscanned, TapeSym{s.id}, TmState{0}};
    std::uint32_t r = s.id - g;
    if (r < g * nq) return {Kind::Scanned, TapeSym{r / nq}, TmState{r % nq}};
    r -= g * nq;
    if (r >= g * (nq - 1)) throw Error("symbol is not a marker of this machine");
    std::uint32_t slot = r % (nq - 1);
    std::uint32_t q = slot < machine_->start().id ? slot : slot + 1;
    return {Kind::Transmission, TapeSym{r / (nq - 1)}, TmState{q}};
}

MarkerAlphabet marker_alphabet(const TuringMachine& m) {
    return MarkerAlphabet(std::make_shared<const TuringMachine>(m));
}

// ---------------------------------------------------------------- tableaux

Grid tableau_window(const RunTrace& t, const MarkerAlphabet& markers, std::int64_t first_cell, std::size_t width,
                    std::size_t rows) {
    const TuringMachine& m = markers.machine();
    if (rows == 0 || width == 0) throw DimensionError("tableau window must be nonempty");
    if (rows > t.configs.size()) throw DimensionError("tableau window has more rows than the trace");
    Grid g(markers.alphabet(), rows, width);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& c = t.configs[r];
        const bool moves_on = c.state != m.halt() && r + 1 < t.configs.size();
        const std::int64_t next_head = moves_on ? t.configs[r + 1].head : 0;
        for (std::size_t j = 0; j < width; ++j) {
            const std::int64_t cell = first_cell + static_cast<std::int64_t>(j);
            const TapeSym a = t.cell(r, cell, m.blank());
            Symbol s = markers.unscanned(a);
            if (cell == c.head) {
                s = markers.scanned(a, c.state);
            } else if (moves_on && cell == next_head) {
                auto tm = markers.transmission(a, t.configs[r + 1].state);
                if (!tm) throw Error("run re-enters the start state; no transmission marker exists");
                s = *tm;
            }
            g.set(r, j, s);
        }
    }
    return g;
}

Grid build_tableau(const RunTrace& t, const MarkerAlphabet& markers) {
    const TuringMachine& m = markers.machine();
    if (t.configs.empty() || t.configs.back().state != m.halt()) throw Error("trace does not end in the halting state");
    if (t.configs.front().head != 0 || t.configs.front().state != m.start()) {
        throw Error("trace does not start from the initial configuration");
    }
    const auto width = static_cast<std::size_t>(t.max_head - t.min_head + 1);
    return tableau_window(t, markers, t.min_head, width, t.configs.size());
}

}  // namespace rxc
