#include "rxc/automata.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "rxc/error.hpp"

namespace rxc {

namespace {

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

// ---------------------------------------------------------------- StateSet

std::size_t StateSet::hash() const noexcept {
    std::size_t h = states_.size();
    for (auto s : states_) hash_mix(h, s);
    for (const auto& [b, terms] : products_) {
        hash_mix(h, 0x51ed27u + b);
        for (const auto& t : terms) {
            for (const auto& p : t.parts) hash_mix(h, p.hash());
        }
    }
    return h;
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) {
    if (auto c = a.states_ <=> b.states_; c != 0) return c;
    return a.products_ <=> b.products_;
}

StepScratch::Marks& StepScratch::marks(const Nfa& nfa) {
    Marks& m = tables_[&nfa];
    if (m.stamp.size() < nfa.state_count()) {
        m.stamp.assign(nfa.state_count(), 0);
        m.generation = 0;
    }
    if (++m.generation == 0) {
        std::fill(m.stamp.begin(), m.stamp.end(), 0);
        m.generation = 1;
    }
    return m;
}

// ---------------------------------------------------------------- compile

struct Fragment {
    std::uint32_t start;
    std::uint32_t accept;
};

using FactorMemo = std::unordered_map<const RegexNode*, std::vector<NfaPtr>>;

class NfaBuilder {
public:
    NfaBuilder(const Alphabet& alphabet, FactorMemo& memo) : alphabet_(alphabet), memo_(memo) {}

    NfaPtr build(const RegexNode& root) {
        Fragment f = fragment(root);
        return finish(f);
    }

private:
    std::uint32_t add(std::uint32_t label) {
        label_.push_back(label);
        return static_cast<std::uint32_t>(label_.size() - 1);
    }
    void eps(std::uint32_t from, std::uint32_t to) { eps_.emplace_back(from, to); }

    Fragment fragment(const RegexNode& n) {
        const auto& ch = n.children();
        switch (n.kind()) {
            case RegexKind::Epsilon: {
                auto s = add(Nfa::kEpsilon);
                auto t = add(Nfa::kEpsilon);
                eps(s, t);
                return {s, t};
            }
            case RegexKind::Literal: {
                auto s = add(n.symbol().id);
                auto t = add(Nfa::kEpsilon);  // always s + 1
                return {s, t};
            }
            case RegexKind::Concat: {
                Fragment first = fragment(*ch[0]);
                std::uint32_t tail = first.accept;
                for (std::size_t i = 1; i < ch.size(); ++i) {
                    Fragment f = fragment(*ch[i]);
                    eps(tail, f.start);
                    tail = f.accept;
                }
                return {first.start, tail};
            }
            case RegexKind::Union: {
                auto s = add(Nfa::kEpsilon);
                std::vector<Fragment> parts;
                parts.reserve(ch.size());
                for (const auto& c : ch) parts.push_back(fragment(*c));
                auto t = add(Nfa::kEpsilon);
                for (const auto& f : parts) {
                    eps(s, f.start);
                    eps(f.accept, t);
                }
                return {s, t};
            }
            case RegexKind::Star:
            case RegexKind::Plus:
            case RegexKind::Optional: {
                auto s = add(Nfa::kEpsilon);
                Fragment c = fragment(*ch[0]);
                auto t = add(Nfa::kEpsilon);
                eps(s, c.start);
                eps(c.accept, t);
                if (n.kind() != RegexKind::Plus) eps(s, t);
                if (n.kind() != RegexKind::Optional) eps(c.accept, c.start);
                return {s, t};
            }
            case RegexKind::Intersect: {
                auto it = memo_.find(&n);
                if (it == memo_.end()) {
                    std::vector<NfaPtr> factors;
                    for (const auto& c : ch) factors.push_back(NfaBuilder(alphabet_, memo_).build(*c));
                    it = memo_.emplace(&n, std::move(factors)).first;
                }
                auto entry = add(Nfa::kEntry);
                auto exit = add(Nfa::kEpsilon);
                products_.push_back({entry, exit, it->second});
                return {entry, exit};
            }
        }
        throw Error("unreachable expression kind");
    }

    NfaPtr finish(Fragment f) {
        auto nfa = std::make_shared<Nfa>();
        nfa->alphabet_ = alphabet_;
        nfa->start_ = f.start;
        nfa->accept_ = f.accept;
        const auto n = label_.size();
        nfa->eps_offset_.assign(n + 1, 0);
        for (const auto& [from, to] : eps_) ++nfa->eps_offset_[from + 1];
        for (std::size_t i = 0; i < n; ++i) nfa->eps_offset_[i + 1] += nfa->eps_offset_[i];
        nfa->eps_target_.resize(eps_.size());
        std::vector<std::uint32_t> fill(nfa->eps_offset_.begin(), nfa->eps_offset_.end() - 1);
        for (const auto& [from, to] : eps_) nfa->eps_target_[fill[from]++] = to;
        eps_.clear();
        eps_.shrink_to_fit();

        nfa->kept_.assign(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            nfa->kept_[s] = (label_[s] != Nfa::kEpsilon && label_[s] != Nfa::kEntry) ? 1 : 0;
        }
        nfa->kept_[f.accept] = 1;
        nfa->label_ = std::move(label_);
        for (std::uint32_t b = 0; b < products_.size(); ++b) nfa->product_at_entry_[products_[b].entry] = b;
        nfa->products_ = std::move(products_);
        nfa->product_initial_.reserve(nfa->products_.size());
        for (const auto& p : nfa->products_) {
            StateSet::Term t;
            for (const auto& factor : p.factors) t.parts.push_back(factor->initial());
            nfa->product_initial_.push_back(std::move(t));
        }
        return nfa;
    }

    const Alphabet& alphabet_;
    FactorMemo& memo_;
    std::vector<std::uint32_t> label_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> eps_;
    std::vector<Nfa::Product> products_;
};

NfaPtr Nfa::compile(const Regex& r) {
    FactorMemo memo;
    return NfaBuilder(r.alphabet(), memo).build(r.root());
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Nfa::epsilon_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(eps_target_.size());
    for (std::uint32_t s = 0; s < state_count(); ++s) {
        for (auto i = eps_offset_[s]; i < eps_offset_[s + 1]; ++i) out.emplace_back(s, eps_target_[i]);
    }
    return out;
}

std::vector<Nfa::LabeledEdge> Nfa::labeled_edges() const {
    std::vector<LabeledEdge> out;
    for (std::uint32_t s = 0; s < state_count(); ++s) {
        if (label_[s] != kEpsilon && label_[s] != kEntry) out.push_back({s, Symbol{label_[s]}, s + 1});
    }
    return out;
}

std::uint64_t Nfa::total_state_count() const {
    std::uint64_t total = state_count();
    for (const auto& p : products_) {
        for (const auto& f : p.factors) total += f->total_state_count();
    }
    return total;
}

// ---------------------------------------------------------------- stepping

bool Nfa::accepts(const StateSet& s) const {
    return std::binary_search(s.states_.begin(), s.states_.end(), accept_);
}

bool Nfa::term_accepts(const StateSet::Term& t, std::uint32_t product) const {
    const auto& factors = products_[product].factors;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i]->accepts(t.parts[i])) return false;
    }
    return true;
}

StateSet Nfa::close(std::vector<std::uint32_t> stack, StateSet::Products stepped, StepScratch& scratch) const {
    auto& marks = scratch.marks(*this);
    const auto gen = marks.generation;
    auto* stamp = marks.stamp.data();

    std::vector<std::uint32_t> pending;
    pending.reserve(stack.size());
    for (auto s : stack) {
        if (stamp[s] != gen) {
            stamp[s] = gen;
            pending.push_back(s);
        }
    }
    auto push = [&](std::uint32_t s) {
        if (stamp[s] != gen) {
            stamp[s] = gen;
            pending.push_back(s);
        }
    };
    for (const auto& [b, terms] : stepped) {
        for (const auto& t : terms) {
            if (term_accepts(t, b)) {
                push(products_[b].exit);
                break;
            }
        }
    }

    StateSet out;
    while (!pending.empty()) {
        auto s = pending.back();
        pending.pop_back();
        if (kept_[s]) out.states_.push_back(s);
        if (label_[s] == kEntry) {
            auto b = product_at_entry_.at(s);
            auto pos = std::lower_bound(stepped.begin(), stepped.end(), b,
                                        [](const auto& e, std::uint32_t key) { return e.first < key; });
            if (pos == stepped.end() || pos->first != b) pos = stepped.insert(pos, {b, {}});
            pos->second.push_back(product_initial_[b]);
            if (term_accepts(product_initial_[b], b)) push(products_[b].exit);
        }
        for (auto i = eps_offset_[s]; i < eps_offset_[s + 1]; ++i) push(eps_target_[i]);
    }
    std::sort(out.states_.begin(), out.states_.end());
    for (auto& [b, terms] : stepped) {
        std::sort(terms.begin(), terms.end());
        terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    }
    out.products_ = std::move(stepped);
    return out;
}

StateSet Nfa::initial(StepScratch& scratch) const { return close({start_}, {}, scratch); }

StateSet Nfa::initial() const {
    StepScratch scratch;
    return initial(scratch);
}

StateSet Nfa::step(const StateSet& s, Symbol x, StepScratch& scratch) const {
    std::vector<std::uint32_t> seeds;
    for (auto st : s.states_) {
        if (label_[st] == x.id) seeds.push_back(st + 1);
    }
    StateSet::Products stepped;
    for (const auto& [b, terms] : s.products_) {
        const auto& factors = products_[b].factors;
        std::vector<StateSet::Term> next;
        for (const auto& t : terms) {
            StateSet::Term nt;
            nt.parts.reserve(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) {
                StateSet p = factors[i]->step(t.parts[i], x, scratch);
                if (p.empty()) break;
                nt.parts.push_back(std::move(p));
            }
            if (nt.parts.size() == factors.size()) next.push_back(std::move(nt));
        }
        if (!next.empty()) stepped.emplace_back(b, std::move(next));
    }
    if (seeds.empty() && stepped.empty()) return {};
    return close(std::move(seeds), std::move(stepped), scratch);
}

StateSet Nfa::step(const StateSet& s, Symbol x) const {
    StepScratch scratch;
    return step(s, x, scratch);
}

bool Nfa::matches(const Word& w) const {
    StepScratch scratch;
    StateSet s = initial(scratch);
    for (Symbol x : w) {
        s = step(s, x, scratch);
        if (s.empty()) return false;
    }
    return accepts(s);
}

// ---------------------------------------------------------------- emptiness

// Explicit product states: a plain state, or an intersection entry together
// with one explicit state per factor.
struct ExplicitState {
    std::uint32_t state = 0;
    std::vector<ExplicitState> parts;

    friend bool operator==(const ExplicitState&, const ExplicitState&) = default;
};

struct ExplicitHash {
    std::size_t operator()(const ExplicitState& x) const noexcept {
        std::size_t h = x.state;
        for (const auto& p : x.parts) hash_mix(h, (*this)(p));
        return h;
    }
};

struct ExplicitSearch {
    static void epsilon_moves(const Nfa& a, const ExplicitState& x, std::vector<ExplicitState>& out) {
        if (x.parts.empty()) {
            for (auto i = a.eps_offset_[x.state]; i < a.eps_offset_[x.state + 1]; ++i) {
                out.push_back({a.eps_target_[i], {}});
            }
            if (a.label_[x.state] == Nfa::kEntry) {
                const auto& p = a.products_[a.product_at_entry_.at(x.state)];
                ExplicitState inside{x.state, {}};
                for (const auto& f : p.factors) inside.parts.push_back({f->start(), {}});
                out.push_back(std::move(inside));
            }
            return;
        }
        const auto& p = a.products_[a.product_at_entry_.at(x.state)];
        bool all_accept = true;
        for (std::size_t i = 0; i < p.factors.size(); ++i) {
            const auto& part = x.parts[i];
            if (!part.parts.empty() || part.state != p.factors[i]->accept()) all_accept = false;
            std::vector<ExplicitState> moves;
            epsilon_moves(*p.factors[i], part, moves);
            for (auto& m : moves) {
                ExplicitState y = x;
                y.parts[i] = std::move(m);
                out.push_back(std::move(y));
            }
        }
        if (all_accept) out.push_back({p.exit, {}});
    }

    static void symbol_moves(const Nfa& a, const ExplicitState& x, Symbol c, std::vector<ExplicitState>& out) {
        if (x.parts.empty()) {
            if (a.label_[x.state] == c.id) out.push_back({x.state + 1, {}});
            return;
        }
        const auto& p = a.products_[a.product_at_entry_.at(x.state)];
        std::vector<std::vector<ExplicitState>> options(p.factors.size());
        for (std::size_t i = 0; i < p.factors.size(); ++i) {
            symbol_moves(*p.factors[i], x.parts[i], c, options[i]);
            if (options[i].empty()) return;
        }
        std::vector<std::size_t> pick(options.size(), 0);
        for (;;) {
            ExplicitState y{x.state, {}};
            for (std::size_t i = 0; i < options.size(); ++i) y.parts.push_back(options[i][pick[i]]);
            out.push_back(std::move(y));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
};

bool Nfa::is_empty() const {
    std::unordered_set<ExplicitState, ExplicitHash> seen;
    std::deque<ExplicitState> queue;
    ExplicitState s0{start_, {}};
    seen.insert(s0);
    queue.push_back(s0);
    std::vector<ExplicitState> next;
    while (!queue.empty()) {
        ExplicitState x = std::move(queue.front());
        queue.pop_front();
        if (x.parts.empty() && x.state == accept_) return false;
        next.clear();
        ExplicitSearch::epsilon_moves(*this, x, next);
        for (std::uint32_t c = 0; c < alphabet_.size(); ++c) ExplicitSearch::symbol_moves(*this, x, Symbol{c}, next);
        for (auto& y : next) {
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return true;
}

// ---------------------------------------------------------------- enumeration

std::vector<Word> Nfa::enumerate_language(std::size_t max_len) const {
    std::vector<Word> out;
    StepScratch scratch;
    Word prefix;
    auto rec = [&](auto& self, const StateSet& s) -> void {
        if (accepts(s)) out.push_back(prefix);
        if (prefix.size() == max_len) return;
        for (std::uint32_t c = 0; c < alphabet_.size(); ++c) {
            StateSet t = step(s, Symbol{c}, scratch);
            if (t.empty()) continue;
            prefix.push_back(Symbol{c});
            self(self, t);
            prefix.pop_back();
        }
    };
    rec(rec, initial(scratch));
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace rxc
