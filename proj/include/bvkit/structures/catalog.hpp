#pragma once

#include "bvkit/opexpr/relation.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace bvkit {

enum class RelationId {
  Assoc,
  Comm,
  Unit,
  Coassoc,
  Cocomm,
  Counit,
  DeltaSquared,
  UnitalInfinitesimal,
  SevenTermMu,
  SevenTermLambda,
  ElevenTerm,
  NineTerm,
  DeltaEta,
  BVCopairingSym,
  Frobenius,
  FrobeniusEta,
  FrobeniusEpsilon,
  BVFrobenius,
  BVFrobeniusCounit,
  EpsilonDelta,
  Jacobi,
  CoJacobi,
  Poisson,
  CoPoisson,
  MixedLemma,
  PermMu,
  PermLambda,
  BracketSymmetry,
  CobracketAntisymmetry,
  CounitEleven,
};

/// Stable identifier used in reports and on the command line.
std::string_view relation_name(RelationId id);
std::optional<RelationId> relation_from_name(std::string_view name);
const std::vector<RelationId>& all_relations();

/// The relation as a signed list of expression terms (one list per equation),
/// with (1 + sigma + sigma2) and (1 + tau) factors expanded.
const RelationSpec& builtin_relation(RelationId id);

/// The named suites.
const std::vector<RelationId>& bvui_full();
const std::vector<RelationId>& frobenius_full();
/// The derived relations, including the symmetry of the bracket and cobracket.
const std::vector<RelationId>& consequence_suite();

/// Copies of `spec` with exactly one term's sign flipped, one per term.
std::vector<RelationSpec> single_sign_mutations(const RelationSpec& spec);

}  // namespace bvkit
