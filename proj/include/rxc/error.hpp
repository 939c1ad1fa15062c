#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rxc {

// Base for every error raised by the library. Callers that only need a
// message can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownSymbolError : public Error {
public:
    explicit UnknownSymbolError(const std::string& token)
        : Error("unknown symbol '" + token + "'"), token_(token) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace rxc
