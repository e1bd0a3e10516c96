#pragma once

#include "bvkit/instance.hpp"
#include "bvkit/opexpr/ast.hpp"

#include <map>
#include <optional>
#include <string>

namespace bvkit {

/// Binds operation names to maps of a particular instance. Duality operations
/// (ev, coev, s, omega, dual) are bound only for finite spaces; E and M only
/// when the instance carries Gysin data.
class Context {
 public:
  explicit Context(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  /// Throws std::invalid_argument naming the missing capability.
  const GradedMap& lookup(const std::string& name) const;
  bool has(const std::string& name) const { return bindings_.count(name) != 0; }
  GradedMap dual_of(const GradedMap& f) const;

 private:
  const Instance* inst_;
  std::map<std::string, GradedMap> bindings_;
  std::map<std::string, std::string> missing_;
};

/// Resolves an expression to a single graded map. Throws std::invalid_argument
/// on unknown names or arity/degree mismatches inside the tree.
GradedMap resolve(const OpExpr& e, const Context& ctx);

Degree infer_degree(const OpExpr& e, const Context& ctx);

/// Applies the expression to an element; the input arity must match the
/// expression's source arity.
Element evaluate(const OpExpr& e, const Context& ctx, const Element& input);

}  // namespace bvkit
