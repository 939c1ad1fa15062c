#include "rxc/regex.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "rxc/error.hpp"

namespace rxc {

namespace re {

namespace {

NodePtr make(RegexKind kind, std::vector<NodePtr> children, Symbol s = {}) {
    return std::make_shared<const RegexNode>(kind, s, std::move(children));
}

NodePtr list(RegexKind kind, std::vector<NodePtr> parts, const char* name) {
    if (parts.empty()) throw Error(std::string(name) + " of an empty list");
    if (parts.size() == 1) return std::move(parts.front());
    return make(kind, std::move(parts));
}

}  // namespace

NodePtr eps() {
    static const NodePtr e = make(RegexKind::Epsilon, {});
    return e;
}

NodePtr lit(Symbol s) { return make(RegexKind::Literal, {}, s); }

NodePtr cat(std::vector<NodePtr> parts) {
    if (parts.empty()) return eps();
    return list(RegexKind::Concat, std::move(parts), "concatenation");
}

NodePtr alt(std::vector<NodePtr> parts) { return list(RegexKind::Union, std::move(parts), "union"); }

NodePtr meet(std::vector<NodePtr> parts) {
    return list(RegexKind::Intersect, std::move(parts), "intersection");
}

NodePtr star(NodePtr r) { return make(RegexKind::Star, {std::move(r)}); }
NodePtr plus(NodePtr r) { return make(RegexKind::Plus, {std::move(r)}); }
NodePtr opt(NodePtr r) { return make(RegexKind::Optional, {std::move(r)}); }

NodePtr word(const Word& w) {
    std::vector<NodePtr> parts;
    parts.reserve(w.size());
    for (Symbol s : w) parts.push_back(lit(s));
    return cat(std::move(parts));
}

NodePtr power(const NodePtr& r, std::size_t times) {
    return cat(std::vector<NodePtr>(times, r));
}

NodePtr words(const std::vector<Word>& ws) {
    std::vector<NodePtr> parts;
    parts.reserve(ws.size());
    for (const auto& w : ws) parts.push_back(word(w));
    return alt(std::move(parts));
}

}  // namespace re

namespace {

void check_symbols(const RegexNode& root, const Alphabet& alphabet) {
    std::unordered_set<const RegexNode*> seen;
    std::vector<const RegexNode*> stack{&root};
    while (!stack.empty()) {
        const RegexNode* n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        if (n->kind() == RegexKind::Literal && !alphabet.contains(n->symbol())) {
            throw Error("literal symbol id " + std::to_string(n->symbol().id) +
                        " outside the expression alphabet");
        }
        for (const auto& c : n->children()) stack.push_back(c.get());
    }
}

}  // namespace

Regex::Regex(Alphabet alphabet, NodePtr root) : alphabet_(std::move(alphabet)), root_(std::move(root)) {
    if (!root_) throw Error("null expression");
    check_symbols(*root_, alphabet_);
}

Regex Regex::rebase(const Alphabet& superset) const {
    if (!alphabet_.is_prefix_of(superset)) {
        throw Error("target alphabet does not extend the expression alphabet");
    }
    return Regex(superset, root_);
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    NodePtr parse_all() {
        NodePtr r = expr();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\r' || text_[pos_] == '\n')) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || c == '{' || c == '_' || !is_reserved_char(c);
    }

    NodePtr expr() {
        std::vector<NodePtr> parts{inter()};
        while (accept('|')) parts.push_back(inter());
        return re::alt(std::move(parts));
    }

    NodePtr inter() {
        std::vector<NodePtr> parts{concat()};
        while (accept('&')) parts.push_back(concat());
        return re::meet(std::move(parts));
    }

    NodePtr concat() {
        std::vector<NodePtr> parts;
        while (at_atom_start()) parts.push_back(factor());
        if (parts.empty()) {
            if (pos_ >= text_.size()) fail("unexpected end of expression");
            fail(std::string("expected expression before '") + text_[pos_] + "'");
        }
        return re::cat(std::move(parts));
    }

    NodePtr factor() {
        NodePtr r = atom();
        for (;;) {
            if (accept('*')) {
                r = re::star(std::move(r));
            } else if (accept('+')) {
                r = re::plus(std::move(r));
            } else if (accept('?')) {
                r = re::opt(std::move(r));
            } else {
                return r;
            }
        }
    }

    NodePtr atom() {
        skip_space();
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == '_') {
            ++pos_;
            return re::eps();
        }
        std::string token;
        if (c == '{') {
            std::size_t close = text_.find('}', pos_ + 1);
            if (close == std::string_view::npos) fail("unterminated '{'");
            token = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
            if (token.empty()) fail("empty symbol token");
            std::size_t at = pos_;
            pos_ = close + 1;
            return literal(token, at);
        }
        std::size_t len = 1;
        auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xF0) {
            len = 4;
        } else if (lead >= 0xE0) {
            len = 3;
        } else if (lead >= 0xC0) {
            len = 2;
        }
        token = std::string(text_.substr(pos_, len));
        std::size_t at = pos_;
        pos_ += token.size();
        return literal(token, at);
    }

    NodePtr literal(const std::string& token, std::size_t at) {
        auto s = alphabet_.find(token);
        if (!s) {
            pos_ = at;
            throw UnknownSymbolError(token);
        }
        return re::lit(*s);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

Regex parse(std::string_view text, const Alphabet& alphabet) {
    return Regex(alphabet, Parser(text, alphabet).parse_all());
}

// ---------------------------------------------------------------- printing

namespace {

// Binding strength; a child needs parentheses when it binds no tighter than
// its parent requires.
int level(RegexKind k) {
    switch (k) {
        case RegexKind::Union: return 0;
        case RegexKind::Intersect: return 1;
        case RegexKind::Concat: return 2;
        case RegexKind::Star:
        case RegexKind::Plus:
        case RegexKind::Optional: return 3;
        default: return 4;
    }
}

void print_into(std::string& out, const RegexNode& n, const Alphabet& a);

void print_child(std::string& out, const RegexNode& c, int min_level, const Alphabet& a) {
    if (level(c.kind()) < min_level) {
        out += '(';
        print_into(out, c, a);
        out += ')';
    } else {
        print_into(out, c, a);
    }
}

void print_into(std::string& out, const RegexNode& n, const Alphabet& a) {
    switch (n.kind()) {
        case RegexKind::Epsilon:
            out += '_';
            return;
        case RegexKind::Literal: {
            const std::string& t = a.token(n.symbol());
            if (is_bare_token(t)) {
                out += t;
            } else {
                out += '{';
                out += t;
                out += '}';
            }
            return;
        }
        case RegexKind::Union:
        case RegexKind::Intersect: {
            const char sep = n.kind() == RegexKind::Union ? '|' : '&';
            const int lv = level(n.kind());
            for (std::size_t i = 0; i < n.children().size(); ++i) {
                if (i) out += sep;
                print_child(out, *n.children()[i], lv + 1, a);
            }
            return;
        }
        case RegexKind::Concat:
            for (const auto& c : n.children()) print_child(out, *c, 3, a);
            return;
        case RegexKind::Star:
        case RegexKind::Plus:
        case RegexKind::Optional:
            print_child(out, n.child(), 3, a);
            out += n.kind() == RegexKind::Star ? '*' : n.kind() == RegexKind::Plus ? '+' : '?';
            return;
    }
}

}  // namespace

std::string print(const RegexNode& node, const Alphabet& alphabet) {
    std::string out;
    print_into(out, node, alphabet);
    return out;
}

std::string print(const Regex& r) { return print(r.root(), r.alphabet()); }

// ---------------------------------------------------------------- analysis

bool structurally_equal(const RegexNode& a, const RegexNode& b) {
    if (&a == &b) return true;
    if (a.kind() != b.kind() || a.children().size() != b.children().size()) return false;
    if (a.kind() == RegexKind::Literal) return a.symbol() == b.symbol();
    for (std::size_t i = 0; i < a.children().size(); ++i) {
        if (!structurally_equal(*a.children()[i], *b.children()[i])) return false;
    }
    return true;
}

namespace {

bool nullable_memo(const RegexNode& n, std::unordered_map<const RegexNode*, bool>& memo) {
    if (auto it = memo.find(&n); it != memo.end()) return it->second;
    bool v = false;
    const auto& ch = n.children();
    switch (n.kind()) {
        case RegexKind::Epsilon:
        case RegexKind::Star:
        case RegexKind::Optional: v = true; break;
        case RegexKind::Literal: v = false; break;
        case RegexKind::Plus: v = nullable_memo(*ch[0], memo); break;
        case RegexKind::Concat:
        case RegexKind::Intersect:
            v = std::all_of(ch.begin(), ch.end(), [&](const NodePtr& c) { return nullable_memo(*c, memo); });
            break;
        case RegexKind::Union:
            v = std::any_of(ch.begin(), ch.end(), [&](const NodePtr& c) { return nullable_memo(*c, memo); });
            break;
    }
    memo.emplace(&n, v);
    return v;
}

struct SingleWords {
    std::size_t k;
    std::unordered_map<const RegexNode*, bool> nullable;
    std::unordered_map<const RegexNode*, std::vector<bool>> memo;

    const std::vector<bool>& of(const RegexNode& n) {
        if (auto it = memo.find(&n); it != memo.end()) return it->second;
        std::vector<bool> v(k, false);
        const auto& ch = n.children();
        switch (n.kind()) {
            case RegexKind::Epsilon: break;
            case RegexKind::Literal: v[n.symbol().id] = true; break;
            case RegexKind::Star:
            case RegexKind::Plus:
            case RegexKind::Optional: v = of(*ch[0]); break;
            case RegexKind::Union:
                for (const auto& c : ch) {
                    const auto& cv = of(*c);
                    for (std::size_t i = 0; i < k; ++i) v[i] = v[i] || cv[i];
                }
                break;
            case RegexKind::Intersect:
                v.assign(k, true);
                for (const auto& c : ch) {
                    const auto& cv = of(*c);
                    for (std::size_t i = 0; i < k; ++i) v[i] = v[i] && cv[i];
                }
                break;
            case RegexKind::Concat: {
                // One part supplies the symbol, every other part must be nullable.
                std::size_t non_nullable = 0;
                for (const auto& c : ch) non_nullable += nullable_memo(*c, nullable) ? 0 : 1;
                for (const auto& c : ch) {
                    bool self = nullable_memo(*c, nullable);
                    if (non_nullable - (self ? 0 : 1) != 0) continue;
                    const auto& cv = of(*c);
                    for (std::size_t i = 0; i < k; ++i) v[i] = v[i] || cv[i];
                }
                break;
            }
        }
        return memo.emplace(&n, std::move(v)).first->second;
    }
};

}  // namespace

bool is_nullable(const Regex& r) {
    std::unordered_map<const RegexNode*, bool> memo;
    return nullable_memo(r.root(), memo);
}

std::vector<bool> single_symbol_words(const Regex& r) {
    SingleWords sw{r.alphabet().size(), {}, {}};
    return sw.of(r.root());
}

std::uint64_t expanded_size(const Regex& r) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 4;
    std::unordered_map<const RegexNode*, std::uint64_t> memo;
    auto rec = [&](auto& self, const RegexNode& n) -> std::uint64_t {
        if (auto it = memo.find(&n); it != memo.end()) return it->second;
        std::uint64_t total = 1;
        for (const auto& c : n.children()) total = std::min(cap, total + self(self, *c));
        memo.emplace(&n, total);
        return total;
    };
    return rec(rec, r.root());
}

// ---------------------------------------------------------------- homomorphism

Regex apply_homomorphism(const Regex& r, const Homomorphism& h) {
    std::vector<NodePtr> images(r.alphabet().size());
    std::unordered_map<const RegexNode*, NodePtr> memo;

    auto image_of = [&](Symbol s) -> const NodePtr& {
        NodePtr& slot = images[s.id];
        if (!slot) {
            if (s.id >= h.images.size() || h.images[s.id].empty()) {
                throw Error("homomorphism has no image for symbol '" + r.alphabet().token(s) + "'");
            }
            for (Symbol t : h.images[s.id]) {
                if (!h.target.contains(t)) throw Error("homomorphism image outside target alphabet");
            }
            slot = re::word(h.images[s.id]);
        }
        return slot;
    };

    auto rec = [&](auto& self, const NodePtr& n) -> NodePtr {
        if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
        NodePtr out;
        switch (n->kind()) {
            case RegexKind::Epsilon: out = n; break;
            case RegexKind::Literal: out = image_of(n->symbol()); break;
            default: {
                std::vector<NodePtr> ch;
                ch.reserve(n->children().size());
                for (const auto& c : n->children()) {
                    // Splice literal images into a surrounding concatenation so
                    // that a word maps to a flat word.
                    if (n->kind() == RegexKind::Concat && c->kind() == RegexKind::Literal) {
                        const NodePtr& img = image_of(c->symbol());
                        if (img->kind() == RegexKind::Concat) {
                            ch.insert(ch.end(), img->children().begin(), img->children().end());
                            continue;
                        }
                    }
                    ch.push_back(self(self, c));
                }
                out = std::make_shared<const RegexNode>(n->kind(), Symbol{}, std::move(ch));
            }
        }
        memo.emplace(n.get(), out);
        return out;
    };

    return Regex(h.target, rec(rec, r.node()));
}

}  // namespace rxc
