#pragma once

#include "bvkit/structures/catalog.hpp"

#include <vector>

namespace bvkit {

/// Window used when none is given: everything for finite spaces, index <= 4
/// (three-input relations <= 3) for rule-based ones.
Window default_window(const Instance& inst);

std::vector<CheckReport> check_structure(const Instance& inst, const std::vector<RelationId>& suite,
                                         const Window& window, unsigned threads = 1);

/// Checks the derived relations (Jacobi, coJacobi, Poisson, coPoisson, the
/// mixed identity, Delta . eta = 0, copairing symmetry, the permutation
/// identities and the symmetry of beta and gamma).
std::vector<CheckReport> check_consequences(const Instance& inst, const Window& window, unsigned threads = 1);

/// beta = Delta . mu - mu . (Delta (x) id + id (x) Delta), degree 1.
GradedMap derived_bracket(const Instance& inst);
/// gamma = (Delta (x) id + id (x) Delta) . lambda + lambda . Delta, degree |lambda| + 1.
GradedMap derived_cobracket(const Instance& inst);

/// True iff no report failed and none was skipped.
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace bvkit
