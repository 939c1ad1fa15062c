#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rxc/alphabet.hpp"

namespace rxc {

enum class RegexKind : std::uint8_t {
    Epsilon,
    Literal,
    Concat,
    Union,
    Intersect,
    Star,
    Plus,
    Optional,
};

class RegexNode;
using NodePtr = std::shared_ptr<const RegexNode>;

// Immutable syntax node. Nodes carry no alphabet, so large expressions can
// share subtrees freely (the binary encodings rely on this).
class RegexNode {
public:
    RegexNode(RegexKind kind, Symbol symbol, std::vector<NodePtr> children)
        : kind_(kind), symbol_(symbol), children_(std::move(children)) {}

    RegexKind kind() const noexcept { return kind_; }
    Symbol symbol() const noexcept { return symbol_; }
    const std::vector<NodePtr>& children() const noexcept { return children_; }
    const RegexNode& child() const { return *children_.front(); }

private:
    RegexKind kind_;
    Symbol symbol_;
    std::vector<NodePtr> children_;
};

// Node builders. List builders collapse a single element to itself and
// concatenation of nothing to epsilon; they never flatten nested lists.
namespace re {
NodePtr eps();
NodePtr lit(Symbol s);
NodePtr cat(std::vector<NodePtr> parts);
NodePtr alt(std::vector<NodePtr> parts);
NodePtr meet(std::vector<NodePtr> parts);
NodePtr star(NodePtr r);
NodePtr plus(NodePtr r);
NodePtr opt(NodePtr r);
NodePtr word(const Word& w);
NodePtr power(const NodePtr& r, std::size_t times);
// Union of the given words (one alternative per word, in order).
NodePtr words(const std::vector<Word>& ws);
}  // namespace re

class Regex {
public:
    Regex(Alphabet alphabet, NodePtr root);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const NodePtr& node() const noexcept { return root_; }
    const RegexNode& root() const noexcept { return *root_; }

    // Same expression over a larger alphabet that keeps every existing id.
    Regex rebase(const Alphabet& superset) const;

private:
    Alphabet alphabet_;
    NodePtr root_;
};

Regex parse(std::string_view text, const Alphabet& alphabet);
std::string print(const Regex& r);
std::string print(const RegexNode& node, const Alphabet& alphabet);

bool structurally_equal(const RegexNode& a, const RegexNode& b);
inline bool operator==(const Regex& a, const Regex& b) {
    return a.alphabet() == b.alphabet() && structurally_equal(a.root(), b.root());
}

bool is_nullable(const Regex& r);
inline bool is_positive(const Regex& r) { return !is_nullable(r); }

// Symbols a with the one-symbol word a in L(r), indexed by symbol id.
std::vector<bool> single_symbol_words(const Regex& r);

// Tree size with shared subtrees counted once per occurrence, saturating.
std::uint64_t expanded_size(const Regex& r);

struct Homomorphism {
    Alphabet target;
    std::vector<Word> images;  // indexed by source symbol id
};

Regex apply_homomorphism(const Regex& r, const Homomorphism& h);

}  // namespace rxc
