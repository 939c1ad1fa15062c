#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rxc/alphabet.hpp"
#include "rxc/regex.hpp"

namespace rxc {

class Nfa;
using NfaPtr = std::shared_ptr<const Nfa>;

// Set of live states of an Nfa after reading some prefix.
//
// Plain states are kept sorted. Each active intersection product contributes
// a set of terms; a term holds one StateSet per factor and stands for the
// Cartesian product of those sets, i.e. the product states reached from one
// entry into the intersection. The union of the terms is exactly the set of
// reachable product states, so no product state is ever enumerated.
class StateSet {
public:
    struct Term {
        std::vector<StateSet> parts;

        friend bool operator==(const Term&, const Term&) = default;
        friend auto operator<=>(const Term& a, const Term& b) { return a.parts <=> b.parts; }
    };
    using Products = std::vector<std::pair<std::uint32_t, std::vector<Term>>>;

    bool empty() const noexcept { return states_.empty() && products_.empty(); }
    const std::vector<std::uint32_t>& states() const noexcept { return states_; }
    // (product index, sorted terms), sorted by product index.
    const Products& products() const noexcept { return products_; }

    std::size_t hash() const noexcept;

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b);

private:
    friend class Nfa;
    std::vector<std::uint32_t> states_;
    Products products_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

// Per-caller scratch memory for stepping; reuse one per thread to avoid
// reallocating mark tables on large automata.
class StepScratch {
public:
    struct Marks {
        std::vector<std::uint32_t> stamp;
        std::uint32_t generation = 0;
    };
    Marks& marks(const Nfa& nfa);

private:
    std::unordered_map<const Nfa*, Marks> tables_;
};

// Thompson epsilon-NFA with a single accepting state. Literal states have one
// labelled edge to the next state id. Intersections are kept as products of
// separately compiled factor automata, entered through an entry state and
// left through an exit state once every factor accepts.
class Nfa {
public:
    struct LabeledEdge {
        std::uint32_t from;
        Symbol label;
        std::uint32_t to;
    };
    struct Product {
        std::uint32_t entry;
        std::uint32_t exit;
        std::vector<NfaPtr> factors;
    };

    static NfaPtr compile(const Regex& r);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t state_count() const noexcept { return static_cast<std::uint32_t>(label_.size()); }
    std::uint32_t start() const noexcept { return start_; }
    std::uint32_t accept() const noexcept { return accept_; }
    std::vector<std::uint32_t> accepting() const { return {accept_}; }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> epsilon_edges() const;
    std::vector<LabeledEdge> labeled_edges() const;
    const std::vector<Product>& products() const noexcept { return products_; }
    // States including those of every nested factor automaton.
    std::uint64_t total_state_count() const;

    StateSet initial() const;
    StateSet initial(StepScratch& scratch) const;
    StateSet step(const StateSet& s, Symbol x) const;
    StateSet step(const StateSet& s, Symbol x, StepScratch& scratch) const;
    bool accepts(const StateSet& s) const;

    bool matches(const Word& w) const;
    bool is_empty() const;
    std::vector<Word> enumerate_language(std::size_t max_len) const;

private:
    friend class NfaBuilder;
    friend struct ExplicitSearch;

    static constexpr std::uint32_t kEpsilon = 0xFFFFFFFFu;
    static constexpr std::uint32_t kEntry = 0xFFFFFFFEu;

    StateSet close(std::vector<std::uint32_t> seeds, StateSet::Products stepped, StepScratch& scratch) const;
    bool term_accepts(const StateSet::Term& t, std::uint32_t product) const;

    Alphabet alphabet_;
    std::vector<std::uint32_t> label_;  // symbol id, kEpsilon or kEntry
    std::vector<std::uint32_t> eps_offset_;
    std::vector<std::uint32_t> eps_target_;
    std::vector<std::uint8_t> kept_;  // states retained in a StateSet
    std::unordered_map<std::uint32_t, std::uint32_t> product_at_entry_;
    std::vector<Product> products_;
    std::vector<StateSet::Term> product_initial_;
    std::uint32_t start_ = 0;
    std::uint32_t accept_ = 0;
};

inline NfaPtr compile(const Regex& r) { return Nfa::compile(r); }
inline bool matches(const Nfa& a, const Word& w) { return a.matches(w); }
inline StateSet step(const Nfa& a, const StateSet& s, Symbol x) { return a.step(s, x); }
inline bool is_empty(const Nfa& a) { return a.is_empty(); }
inline std::vector<Word> enumerate_language(const Nfa& a, std::size_t max_len) {
    return a.enumerate_language(max_len);
}

}  // namespace rxc
