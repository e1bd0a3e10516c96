#include "bvkit/opexpr/evaluator.hpp"

#include "bvkit/dual/dual.hpp"

#include <stdexcept>

namespace bvkit {

Context::Context(const Instance& inst) : inst_(&inst) {
  bindings_.emplace("id", GradedMap::identity());
  bindings_.emplace("mu", inst.mu.relabeled("mu"));
  bindings_.emplace("eta", inst.eta_map());
  bindings_.emplace("lambda", inst.lambda.relabeled("lambda"));
  bindings_.emplace("Delta", inst.Delta.relabeled("Delta"));
  bindings_.emplace("tau", GradedMap::permutation({1, 0}, "tau"));
  bindings_.emplace("sigma", GradedMap::permutation({1, 2, 0}, "sigma"));
  bindings_.emplace("sigma2", GradedMap::permutation({2, 0, 1}, "sigma2"));
  if (inst.epsilon) {
    bindings_.emplace("epsilon", inst.epsilon->relabeled("epsilon"));
  } else {
    missing_["epsilon"] = inst.name + " has no counit epsilon";
  }
  if (inst.gysin) {
    bindings_.emplace("E", inst.gysin->E.relabeled("E"));
    bindings_.emplace("M", inst.gysin->M.relabeled("M"));
  } else {
    missing_["E"] = missing_["M"] = inst.name + " has no Gysin data";
  }
  bool primal = inst.basis.is_finite();
  if (primal) {
    for (auto g : inst.basis.elements()) primal = primal && g.tag() == SpaceTag::primal;
  }
  if (primal) {
    DualData d = make_dual_data(inst.basis.elements(), inst.lambda_degree);
    bindings_.emplace("ev", d.ev);
    bindings_.emplace("coev", d.coev);
    bindings_.emplace("s", d.s);
    bindings_.emplace("omega", d.omega);
  } else {
    const std::string why = inst.basis.is_finite()
                                ? "duality maps need a space with only primal generators"
                                : "duality maps require a finite-dimensional space (" + inst.basis.description() + ")";
    for (const char* n : {"ev", "coev", "s", "omega", "dual"}) missing_[n] = why;
  }
}

const GradedMap& Context::lookup(const std::string& name) const {
  auto it = bindings_.find(name);
  if (it != bindings_.end()) return it->second;
  auto m = missing_.find(name);
  if (m != missing_.end()) throw std::invalid_argument(name + ": " + m->second);
  throw std::invalid_argument("unknown operation '" + name + "'");
}

GradedMap Context::dual_of(const GradedMap& f) const {
  auto m = missing_.find("dual");
  if (m != missing_.end()) throw std::invalid_argument("dual: " + m->second);
  return dual_map(f, inst_->basis.elements());
}

GradedMap resolve(const OpExpr& e, const Context& ctx) {
  switch (e.kind) {
    case OpExpr::Kind::generator:
      return ctx.lookup(e.name);
    case OpExpr::Kind::dual:
      return ctx.dual_of(resolve(e.children[0], ctx));
    case OpExpr::Kind::scale:
      return scale_map(e.coeff, resolve(e.children[0], ctx));
    case OpExpr::Kind::compose: {
      GradedMap acc = resolve(e.children.back(), ctx);
      for (auto it = e.children.rbegin() + 1; it != e.children.rend(); ++it) acc = compose(resolve(*it, ctx), acc);
      return acc;
    }
    case OpExpr::Kind::tensor: {
      GradedMap acc = resolve(e.children.front(), ctx);
      for (auto it = e.children.begin() + 1; it != e.children.end(); ++it) acc = tensor_maps(acc, resolve(*it, ctx));
      return acc;
    }
    case OpExpr::Kind::sum: {
      GradedMap acc = resolve(e.children.front(), ctx);
      for (auto it = e.children.begin() + 1; it != e.children.end(); ++it) acc = add_maps(acc, resolve(*it, ctx));
      return acc;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

Degree infer_degree(const OpExpr& e, const Context& ctx) { return resolve(e, ctx).degree(); }

Element evaluate(const OpExpr& e, const Context& ctx, const Element& input) {
  GradedMap f = resolve(e, ctx);
  return f(input);
}

}  // namespace bvkit
