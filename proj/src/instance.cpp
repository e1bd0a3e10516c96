#include "bvkit/instance.hpp"

#include <stdexcept>

namespace bvkit {

std::string Window::describe() const {
  if (max_index < 0 && max_index_ternary < 0) return "all";
  std::string out = "k<=" + (max_index < 0 ? std::string("all") : std::to_string(max_index));
  if (max_index_ternary != max_index) {
    out += ", ternary k<=" + (max_index_ternary < 0 ? std::string("all") : std::to_string(max_index_ternary));
  }
  return out;
}

GradedBasis GradedBasis::finite(std::vector<Generator> elements) {
  GradedBasis b;
  b.description_ = "finite, dim " + std::to_string(elements.size());
  b.finite_ = std::move(elements);
  return b;
}

GradedBasis GradedBasis::rule(std::string description, Enumerator enumerate, Lookup lookup) {
  GradedBasis b;
  b.description_ = std::move(description);
  b.enumerate_ = std::move(enumerate);
  b.lookup_ = std::move(lookup);
  return b;
}

const std::vector<Generator>& GradedBasis::elements() const {
  if (!finite_) throw std::invalid_argument("operation requires a finite-dimensional space (" + description_ + ")");
  return *finite_;
}

std::vector<Generator> GradedBasis::window(int bound) const {
  if (finite_) {
    if (bound < 0 || bound + 1 >= static_cast<int>(finite_->size())) return *finite_;
    return {finite_->begin(), finite_->begin() + bound + 1};
  }
  if (bound < 0) throw std::invalid_argument("a rule-based space (" + description_ + ") needs a bounded window");
  return enumerate_(bound);
}

std::optional<Generator> GradedBasis::find(std::string_view name) const {
  if (finite_) {
    for (auto g : *finite_) {
      if (g.name() == name) return g;
    }
    return std::nullopt;
  }
  return lookup_(name);
}

GradedMap Instance::eta_map() const {
  Element e = eta;
  return GradedMap("eta", 0, 1, 0, [e](const Key&) { return e; });
}

Element Instance::copairing() const { return lambda(eta); }

GradedMap Instance::pairing() const {
  if (!epsilon) throw std::invalid_argument(name + " has no counit");
  return scale_map(Scalar::sign(lambda_degree), compose(*epsilon, mu)).relabeled("pairing");
}

Element reduce_into(const Element& x, const Field& f) {
  if (f.is_rational()) return x;
  Element out(x.arity());
  for (const auto& [k, c] : x.terms()) out.add_term(k, Scalar::in(f, c.value()));
  return out;
}

GradedMap reduce_into(const GradedMap& m, const Field& f) {
  if (f.is_rational()) return m;
  return GradedMap(m.label(), m.source_arity(), m.target_arity(), m.degree(),
                   [m, f](const Key& k) { return reduce_into(m.apply(k), f); });
}

Instance Instance::over_field(const Field& f) const {
  if (!field.is_rational() && !(f == field)) {
    throw std::invalid_argument("cannot move " + name + " from " + field.to_string() + " to " + f.to_string());
  }
  Instance out = *this;
  out.field = f;
  out.mu = reduce_into(mu, f);
  out.lambda = reduce_into(lambda, f);
  out.Delta = reduce_into(Delta, f);
  out.eta = reduce_into(eta, f);
  if (epsilon) out.epsilon = reduce_into(*epsilon, f);
  if (gysin) {
    out.gysin = std::make_shared<const GysinData>(
        GysinData{gysin->basis, reduce_into(gysin->E, f), reduce_into(gysin->M, f)});
  }
  return out;
}

Instance forget_frobenius_to_bvui(const Instance& frobenius) {
  Instance out = frobenius;
  out.epsilon.reset();
  out.name = frobenius.name + "/bvui";
  return out;
}

std::vector<std::string> validate_metadata(const Instance& inst) {
  std::vector<std::string> problems;
  if (inst.lambda_degree % 2 == 0) {
    problems.push_back("lambda_degree " + std::to_string(inst.lambda_degree) + " is even; lambda must have odd degree");
  }
  if (inst.mu.degree() != 0) problems.push_back("mu must have degree 0");
  if (inst.Delta.degree() != 1) problems.push_back("Delta must have degree 1");
  if (inst.lambda.degree() != inst.lambda_degree) problems.push_back("lambda degree differs from lambda_degree");
  if (inst.mu.source_arity() != 2 || inst.mu.target_arity() != 1) problems.push_back("mu must map A(x)A -> A");
  if (inst.lambda.source_arity() != 1 || inst.lambda.target_arity() != 2) {
    problems.push_back("lambda must map A -> A(x)A");
  }
  if (inst.eta.arity() != 1) {
    problems.push_back("eta must be an element of A");
  } else {
    auto d = inst.eta.degree();
    if (inst.eta.is_zero() || !d || *d != 0) problems.push_back("eta must be a nonzero homogeneous element of degree 0");
  }
  if (inst.epsilon) {
    if (inst.epsilon->degree() != -inst.lambda_degree) problems.push_back("epsilon must have degree -lambda_degree");
    if (inst.epsilon->source_arity() != 1 || inst.epsilon->target_arity() != 0) {
      problems.push_back("epsilon must map A -> k");
    }
  }
  return problems;
}

}  // namespace bvkit
