#pragma once

#include <string_view>

#include "lyubeznik/polynomial.hpp"

namespace lyz {

/// Syntax error or unknown identifier; `offset()` is a byte offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), message_(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }
    /// The message without the offset suffix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// expr := ['-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
/// factor := integer | ident ['^' integer] | '(' expr ')' ['^' integer]
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Comma-separated list of polynomials; commas inside parentheses are not separators.
std::vector<Polynomial> parse_poly_list(std::string_view text, const RingPtr& ring);

} // namespace lyz
