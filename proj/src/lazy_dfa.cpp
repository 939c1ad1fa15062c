#include "rxc/lazy_dfa.hpp"

namespace rxc {

LazyDfa::LazyDfa(NfaPtr nfa) : nfa_(std::move(nfa)), k_(nfa_->alphabet().size()) {
    intern(StateSet{});  // id 0 is the dead state
    start_ = intern(nfa_->initial(scratch_));
}

LazyDfa::State LazyDfa::intern(StateSet set) {
    auto [it, inserted] = index_.try_emplace(std::move(set), static_cast<State>(sets_.size()));
    if (inserted) {
        sets_.push_back(&it->first);
        trans_.resize(trans_.size() + k_, kUnknown);
        accepting_.push_back(nfa_->accepts(it->first) ? 1 : 0);
        finish_.emplace_back();
    }
    return it->second;
}

LazyDfa::State LazyDfa::next(State s, Symbol x) {
    State& slot = trans_[static_cast<std::size_t>(s) * k_ + x.id];
    if (slot != kUnknown) return slot;
    State t = s == kDead ? kDead : intern(nfa_->step(*sets_[s], x, scratch_));
    // intern() may have grown trans_, so index again.
    trans_[static_cast<std::size_t>(s) * k_ + x.id] = t;
    return t;
}

bool LazyDfa::can_finish_in(State s, std::size_t remaining) {
    if (s == kDead) return false;
    if (remaining == 0) return accepting(s);
    {
        auto& memo = finish_[s];
        if (memo.size() > remaining && memo[remaining] >= 0) return memo[remaining] != 0;
    }
    bool ok = false;
    for (std::uint32_t c = 0; c < k_ && !ok; ++c) {
        State t = next(s, Symbol{c});
        ok = t != kDead && can_finish_in(t, remaining - 1);
    }
    auto& memo = finish_[s];  // finish_ may have grown
    if (memo.size() <= remaining) memo.resize(remaining + 1, -1);
    memo[remaining] = ok ? 1 : 0;
    return ok;
}

bool LazyDfa::run(const Word& w) {
    State s = start_;
    for (Symbol x : w) {
        s = next(s, x);
        if (s == kDead) return false;
    }
    return accepting(s);
}

}  // namespace rxc
