#pragma once

#include "bvkit/opexpr/evaluator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bvkit {

struct SignedTerm {
  Scalar coeff;
  OpExpr expr;
};

/// A relation: every equation (a signed list of terms) must evaluate to zero.
/// Most relations are a single equation; a few pair a left and a right version.
struct RelationSpec {
  enum Requirement : unsigned {
    none = 0,
    counit = 1u << 0,           ///< needs epsilon
    copairing_zero = 1u << 1,   ///< needs lambda . eta = 0
    gysin = 1u << 2,            ///< needs E and M
    trivial_copairing_delta = 1u << 3,  ///< needs (id (x) Delta) . lambda . eta = 0
  };

  std::string name;
  std::vector<std::vector<SignedTerm>> equations;
  unsigned requires_ = none;
  /// Which space the enumerated inputs come from: the instance itself, or
  /// the Gysin space B.
  bool inputs_from_gysin_space = false;

  static RelationSpec from_text(std::string name, const std::vector<std::string>& equations, unsigned requires_ = none);

  std::size_t term_count() const;
  /// Canonical text of each equation.
  std::vector<std::string> texts() const;
};

struct Witness {
  Key input;
  int equation = 0;
  Element residual;
};

struct CheckReport {
  enum class Status { pass, fail, skipped };

  std::string relation;
  std::string instance;
  std::string window;
  std::size_t tuples = 0;
  std::size_t failing_tuples = 0;
  Status status = Status::skipped;
  std::vector<Witness> witnesses;  ///< first failing tuple only; empty iff not failed
  std::string note;                ///< reason for a skip, or extra context

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
  std::string summary() const;
};

const char* to_string(CheckReport::Status s);

/// Describes why `rel` cannot be checked on `inst`, if it cannot.
std::optional<std::string> applicability_problem(const RelationSpec& rel, const Instance& inst);

/// Evaluates every equation of `rel` on every basis tuple of the window and
/// reports the first failing tuple in canonical order. Tuples are split
/// across `threads` workers; the report does not depend on the split.
CheckReport relation_residual(const RelationSpec& rel, const Instance& inst, const Window& window,
                              unsigned threads = 1);

}  // namespace bvkit
