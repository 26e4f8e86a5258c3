#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spoq/quantize.hpp"

namespace spoq {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

struct ParseResult {
    SuperFn value;
    std::vector<std::string> warnings;
};

/// Grammar: sums/differences of products of powers of {rational literal, x,
/// t1, t2, parenthesized expressions}; '^' takes a natural exponent and binds
/// tighter than '*', which binds tighter than unary '-'. Powers >= 2 of t1/t2
/// collapse to 0 with a warning.
ParseResult parse_superfn(std::string_view text);

/// Canonical printers; parse_superfn(format(f)).value == f.
std::string format(const Poly& p);
std::string format(const SuperFn& f);
std::string format(const VectorField& X);
std::string format(const DiffOp& D);
std::string format(const Symbol& S);
std::string format(const GradedSymbol& S);

/// Row-major 4x4 rational matrix, rows separated by ';', entries by ',' or blanks.
SpoMatrix parse_matrix(std::string_view text);
std::string format(const SpoMatrix& m);

HalfInt parse_halfint(std::string_view text);  // "p" or "p/2", nonnegative

}  // namespace spoq
