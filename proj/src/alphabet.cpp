#include "rxc/alphabet.hpp"

#include <unordered_map>

#include "rxc/error.hpp"

namespace rxc {

struct Alphabet::Impl {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, std::uint32_t> index;
};

namespace {

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

}  // namespace

bool is_reserved_char(char c) noexcept {
    switch (c) {
        case '|': case '&': case '*': case '+': case '?':
        case '(': case ')': case '{': case '}': case '_':
            return true;
        default:
            return false;
    }
}

bool is_valid_token(std::string_view token) noexcept {
    if (token.empty() || token.front() == '#') return false;
    for (char c : token) {
        auto u = static_cast<unsigned char>(c);
        if (c == '{' || c == '}' || u <= 0x20 || u == 0x7F) return false;
    }
    return true;
}

bool is_bare_token(std::string_view token) noexcept {
    if (!is_valid_token(token)) return false;
    auto lead = static_cast<unsigned char>(token.front());
    if (utf8_length(lead) != token.size()) return false;
    return token.size() > 1 || !is_reserved_char(token.front());
}

Alphabet::Alphabet() : Alphabet(std::vector<std::string>{"0"}) {}

Alphabet::Alphabet(std::vector<std::string> tokens) {
    if (tokens.empty()) throw Error("alphabet must contain at least one symbol");
    auto impl = std::make_shared<Impl>();
    impl->tokens = std::move(tokens);
    for (std::uint32_t i = 0; i < impl->tokens.size(); ++i) {
        const auto& t = impl->tokens[i];
        if (!is_valid_token(t)) throw Error("invalid symbol token '" + t + "'");
        if (!impl->index.emplace(t, i).second) throw Error("duplicate symbol token '" + t + "'");
    }
    impl_ = std::move(impl);
}

std::size_t Alphabet::size() const noexcept { return impl_->tokens.size(); }

const std::string& Alphabet::token(Symbol s) const {
    if (!contains(s)) throw Error("symbol id " + std::to_string(s.id) + " outside alphabet");
    return impl_->tokens[s.id];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    auto it = impl_->index.find(std::string(token));
    if (it == impl_->index.end()) return std::nullopt;
    return Symbol{it->second};
}

Symbol Alphabet::symbol(std::string_view token) const {
    if (auto s = find(token)) return *s;
    throw UnknownSymbolError(std::string(token));
}

const std::vector<std::string>& Alphabet::tokens() const noexcept { return impl_->tokens; }

Alphabet Alphabet::extended(const std::vector<std::string>& extra) const {
    auto all = impl_->tokens;
    all.insert(all.end(), extra.begin(), extra.end());
    return Alphabet(std::move(all));
}

bool Alphabet::is_prefix_of(const Alphabet& other) const {
    if (impl_ == other.impl_) return true;
    if (size() > other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (impl_->tokens[i] != other.impl_->tokens[i]) return false;
    }
    return true;
}

std::string Alphabet::spell(const Word& w, std::string_view sep) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += token(w[i]);
    }
    return out;
}

Word Alphabet::word(const std::vector<std::string>& tokens) const {
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) w.push_back(symbol(t));
    return w;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.impl_ == b.impl_ || a.impl_->tokens == b.impl_->tokens;
}

}  // namespace rxc
