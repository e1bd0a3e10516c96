#pragma once

#include "bvkit/opexpr/ast.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace bvkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the operation-expression grammar:
///
///   sum     := ['+'|'-'] term (('+'|'-') term)*
///   term    := [scalar '*'] tensor
///   tensor  := compose (('(x)' | '⊗') compose)*
///   compose := atom (('.' | '∘') atom)*
///   atom    := name | 'dual' '(' sum ')' | '(' sum ')'
///
/// Scalars are integers or fractions n/d. Greek letters are accepted for the
/// operation names, "1" is an alias for id, and "beta"/"gamma" expand to the
/// derived bracket and cobracket.
OpExpr parse_expr(std::string_view text);

}  // namespace bvkit
