#pragma once

#include "bvkit/core/scalar.hpp"

#include <string>
#include <vector>

namespace bvkit {

/// Expression tree over the operation signature.
///
/// Composition children are listed left to right as written, so
/// `f . g` has children {f, g} and applies g first.
struct OpExpr {
  enum class Kind { generator, compose, tensor, scale, sum, dual };

  Kind kind = Kind::generator;
  std::string name;  ///< generator name
  Scalar coeff;      ///< scale factor
  std::vector<OpExpr> children;

  static OpExpr gen(std::string name);
  static OpExpr compose(std::vector<OpExpr> parts);
  static OpExpr tensor(std::vector<OpExpr> parts);
  static OpExpr scale(Scalar c, OpExpr e);
  static OpExpr sum(std::vector<OpExpr> parts);
  static OpExpr dual(OpExpr e);

  friend bool operator==(const OpExpr& a, const OpExpr& b);
};

/// Canonical ASCII rendering; `parse(print(e))` is structurally equal to e.
std::string print(const OpExpr& e);

/// Summands of a top-level sum with their signs pulled out: each entry is
/// (coefficient, unscaled expression).
std::vector<std::pair<Scalar, OpExpr>> signed_terms(const OpExpr& e);

/// Names of all primitive operations, in canonical ASCII spelling.
const std::vector<std::string>& generator_names();

}  // namespace bvkit
