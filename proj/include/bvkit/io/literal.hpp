#pragma once

#include "bvkit/instance.hpp"

#include <string_view>

namespace bvkit {

/// Parses an element literal such as "2*A(x)1 - 2*1(x)A" or "AU^1 (x) U^1".
/// Terms are optional coefficients ("n*" or "n/d*") followed by basis names
/// joined with "(x)" or "⊗"; names end at whitespace, '+', '-', '(' or ')'.
/// For arity 0 the literal is a plain scalar (empty text means 1).
/// Coefficients are reduced into `field`. Throws ParseError.
Element parse_element(std::string_view text, const GradedBasis& basis, int arity, const Field& field);

/// As above, with the arity taken from the first term.
Element parse_element(std::string_view text, const GradedBasis& basis, const Field& field);

}  // namespace bvkit
