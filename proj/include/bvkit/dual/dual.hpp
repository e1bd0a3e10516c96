#pragma once

#include "bvkit/core/graded_map.hpp"

#include <vector>

namespace bvkit {

/// e <-> e^v: appends or strips the "*" marker, negates the degree and toggles
/// the dual bit of the tag. Dualizing twice returns the original generator.
Generator dual_generator(Generator g);

/// e^v -> its shifted copy "e#" in A^v[s], of degree |e^v| + shift. Only
/// generators of the plain dual space can be shifted.
Generator shifted_generator(Generator dual, Degree shift);
/// Inverse of shifted_generator.
Generator unshifted_generator(Generator shifted, Degree shift);

/// Duality data of a finite graded space A relative to a shift degree.
struct DualData {
  std::vector<Generator> basis;
  std::vector<Generator> dual_basis;
  std::vector<Generator> shifted_basis;
  Degree shift = 0;

  GradedMap ev;     ///< A^v (x) A -> k, ev(e_i^v (x) e_j) = delta_ij
  GradedMap coev;   ///< k -> A (x) A^v, 1 |-> sum_i e_i (x) e_i^v
  GradedMap s;      ///< A^v -> A^v[s], degree `shift`
  GradedMap omega;  ///< A^v[s] -> A^v, degree -`shift`
};

DualData make_dual_data(const std::vector<Generator>& basis, Degree shift);

/// The transpose f^v on tensor powers of A^v, fixed by
/// <f^v(P), x> = (-1)^{|f||P|} <P, f(x)> where the pairing of
/// p_1 (x) ... (x) p_k with a_1 (x) ... (x) a_k is prod_i p_{k+1-i}(a_i).
/// The basis of A must be finite and closed under f.
GradedMap dual_map(const GradedMap& f, const std::vector<Generator>& basis);

/// The evaluation <P, x> of a tuple of dual generators on a tuple of
/// generators under the nested pairing above (0 or 1).
Scalar nested_pairing(const Key& duals, const Key& vectors);

/// The canonical isomorphism A -> A^vv, e |-> (-1)^{|e|} e^vv, on one tensor
/// slot. Under it f^vv corresponds to f on every finite model.
GradedMap double_dual_identification();

}  // namespace bvkit
