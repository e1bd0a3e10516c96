#pragma once

#include "bvkit/opexpr/relation.hpp"

#include <stdexcept>
#include <vector>

namespace bvkit {

class GysinError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// B := A / ker Delta with E the projection and M induced by Delta. The
/// sphere model gets the rule-based basis [AU^k], k >= 1; finite instances
/// get a basis of pivot classes found by exact elimination. Throws
/// GysinError if Delta^2 != 0 on the window.
GysinData canonical_gysin(const Instance& inst, const Window& window);

/// B a copy of A with E = M = 0; valid exactly when Delta = 0.
GysinData zero_gysin(const Instance& inst);

/// Checks M . E = Delta, E . M = 0, Delta . M = 0 and E . Delta = 0 on the
/// window (inputs from A for the first and last, from B otherwise).
std::vector<CheckReport> validate_gysin(const Instance& inst, const GysinData& g, const Window& window);

/// Copy of the instance carrying the Gysin data; throws GysinError when the
/// data fails validation on the window.
Instance with_gysin(const Instance& inst, GysinData g, const Window& window);

/// E . mu . (M (x) M) on B (x) B.
GradedMap string_bracket(const Instance& inst, const GysinData& g);
/// (E (x) E) . lambda . M on B.
GradedMap string_cobracket(const Instance& inst, const GysinData& g);

/// The Lie bialgebra relations for the string bracket and cobracket, as
/// relation specs with inputs taken from B.
RelationSpec string_jacobi();
RelationSpec string_cojacobi();
RelationSpec string_drinfeld();

/// The three Lie bialgebra reports (Jacobi, coJacobi, Drinfel'd compatibility).
/// The instance must carry Gysin data.
std::vector<CheckReport> check_lie_bialgebra(const Instance& inst, const Window& window, unsigned threads = 1);

/// The bialgebra relations transported to B: E . [7-term for mu] . (M (x) M (x) M),
/// (E (x) E (x) E) . [7-term for lambda] . M, and (E (x) E) . [9-term] . (M (x) M).
std::vector<CheckReport> check_transported_relations(const Instance& inst, const Window& window, unsigned threads = 1);

/// Pre/post-composes every term of `spec` with M and E on `inputs` and
/// `outputs` slots.
RelationSpec transport_to_gysin(const RelationSpec& spec, int inputs, int outputs);

}  // namespace bvkit
