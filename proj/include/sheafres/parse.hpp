#pragma once

#include "sheafres/poly.hpp"

#include <stdexcept>
#include <string>

namespace sheafres {

// Syntax/semantic diagnostics carry 1-based line/column and the expected-token set.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int col, std::string expected)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col) +
                             (expected.empty() ? "" : " (expected " + expected + ")")),
          line(line), col(col), expected(std::move(expected)) {}
    int line;
    int col;
    std::string expected;
};

// Polynomial literals: integers, rationals a/b, identifiers [A-Za-z][A-Za-z0-9_]*,
// operators + - * ^, parentheses; whitespace insignificant.
Poly parse_poly(const RingPtr& ring, const std::string& text);

} // namespace sheafres
