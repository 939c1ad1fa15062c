#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rxc/automata.hpp"

namespace rxc {

// Subset construction built on demand. Not thread-safe: each search thread
// owns its own instance over a shared Nfa.
class LazyDfa {
public:
    using State = std::uint32_t;
    static constexpr State kDead = 0;

    explicit LazyDfa(NfaPtr nfa);

    const Nfa& nfa() const noexcept { return *nfa_; }
    State start() const noexcept { return start_; }
    State next(State s, Symbol x);
    bool accepting(State s) const noexcept { return accepting_[s] != 0; }
    // Whether some word of exactly `remaining` symbols leads to acceptance.
    bool can_finish_in(State s, std::size_t remaining);
    bool run(const Word& w);
    std::size_t size() const noexcept { return sets_.size(); }

private:
    State intern(StateSet set);

    static constexpr State kUnknown = 0xFFFFFFFFu;

    NfaPtr nfa_;
    StepScratch scratch_;
    std::size_t k_;
    std::unordered_map<StateSet, State, StateSetHash> index_;
    std::vector<const StateSet*> sets_;
    std::vector<State> trans_;
    std::vector<std::uint8_t> accepting_;
    std::vector<std::vector<std::int8_t>> finish_;  // per state, per length
    State start_ = kDead;
};

}  // namespace rxc
