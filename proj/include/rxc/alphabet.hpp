#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rxc {

struct Symbol {
    std::uint32_t id = 0;

    friend auto operator<=>(Symbol, Symbol) = default;
};

using Word = std::vector<Symbol>;

// Ordered, immutable list of symbol tokens. Copies share storage.
//
// A token is any nonempty string without whitespace or braces that does not
// start with '#'. Tokens that are a single non-reserved character are written
// bare in regex text; every other token is written as {token}.
class Alphabet {
public:
    Alphabet();
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept;
    const std::string& token(Symbol s) const;
    std::optional<Symbol> find(std::string_view token) const;
    // Like find() but throws UnknownSymbolError.
    Symbol symbol(std::string_view token) const;
    const std::vector<std::string>& tokens() const noexcept;

    bool contains(Symbol s) const noexcept { return s.id < size(); }

    // New alphabet with `extra` appended; existing ids are preserved.
    Alphabet extended(const std::vector<std::string>& extra) const;
    // True when every token of *this appears at the same id in `other`.
    bool is_prefix_of(const Alphabet& other) const;

    std::string spell(const Word& w, std::string_view sep = " ") const;
    Word word(const std::vector<std::string>& tokens) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Reserved characters of the regex grammar.
bool is_reserved_char(char c) noexcept;
bool is_valid_token(std::string_view token) noexcept;
// Whether `token` may be written without braces.
bool is_bare_token(std::string_view token) noexcept;

}  // namespace rxc
