#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tautcalc/generators.hpp"

namespace tautcalc {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a class expression on `space`.
///
///   class  := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | atom ['^' integer] | '(' class ')' ['^' integer]
///   atom   := 'psi'i | 'om'i | 'la' | 'dirr' | 'd'h':{'J'}' | 'd'h':'j | 'd'h
///           | 'gamma{1:'J'}' | 'd2psi'
///
/// 'd'h':'j is the sum of the distinct delta_{h:J} with |J| = j and 'd'h the sum over
/// all J. Symbols are checked against the space; errors carry the offending position.
GeneratorExpr parse_expr(std::string_view text, MarkedSpace space);

}  // namespace tautcalc
