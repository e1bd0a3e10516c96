#include "bvkit/dual/double.hpp"

namespace bvkit {

namespace {

constexpr SpaceTag P = SpaceTag::primal;
constexpr SpaceTag S = SpaceTag::shifted_dual;

GradedMap chain(std::initializer_list<GradedMap> maps) {
  // Written left to right as in f . g . h; the last map is applied first.
  auto it = maps.end();
  GradedMap acc = *--it;
  while (it != maps.begin()) acc = compose(*--it, acc);
  return acc;
}

GradedMap tensor(std::initializer_list<GradedMap> maps) {
  auto it = maps.begin();
  GradedMap acc = *it++;
  for (; it != maps.end(); ++it) acc = tensor_maps(acc, *it);
  return acc;
}

GradedMap assemble(const std::string& label, const std::vector<DoubleComponent>& parts, int source, int target,
                   Degree degree) {
  std::vector<GradedMap> restricted;
  for (const auto& c : parts) restricted.push_back(restrict_to_tags(c.map, c.inputs));
  return GradedMap(label, source, target, degree, [restricted, target](const Key& k) {
    Element out(target);
    for (const auto& m : restricted) out += m.apply(k);
    return out;
  });
}

}  // namespace

DoubleData build_double_data(const Instance& a) {
  if (!a.basis.is_finite()) {
    throw DoubleError("the double needs a finite-dimensional instance; " + a.name + " is " + a.basis.description());
  }
  const Element copairing = a.copairing();
  if (!copairing.is_zero()) {
    throw DoubleError("the double needs lambda . eta = 0, but on " + a.name + " lambda . eta = " +
                      copairing.to_string());
  }
  const std::vector<Generator>& basis = a.basis.elements();
  const Degree shift = a.lambda_degree;
  DualData d = make_dual_data(basis, shift);

  const GradedMap id = GradedMap::identity();
  const GradedMap tau = GradedMap::permutation({1, 0}, "tau");
  const GradedMap& mu = a.mu;
  const GradedMap& lambda = a.lambda;
  const GradedMap eta = a.eta_map();
  const GradedMap ev_tau = compose(d.ev, tau);
  const GradedMap tau_coev = compose(tau, d.coev);
  const GradedMap delta_dual = dual_map(a.Delta, basis);
  const Scalar minus = Scalar(-1);

  std::vector<DoubleComponent> product = {
      {"A (x) A -> A", {P, P}, mu},
      {"A^v[s] (x) A -> A^v[s]", {S, P},
       chain({d.s, tensor({d.ev, id}), tensor({id, mu, id}), tensor({id, id, d.coev}), tensor({d.omega, id})})},
      {"A (x) A^v[s] -> A^v[s]", {P, S},
       chain({d.s, tensor({d.ev, id}), tensor({id, compose(mu, tau), id}), tensor({id, id, d.coev}), tau,
              tensor({id, d.omega})})},
      {"A^v[s] (x) A^v[s] -> A^v[s]", {S, S},
       scale_map(minus, chain({d.s, tensor({d.ev, d.ev, id}), GradedMap::permutation({0, 2, 1, 3, 4}),
                               tensor({id, id, lambda, id}), tensor({id, id, d.coev}), tensor({d.omega, d.omega})}))},
      {"A^v[s] (x) A -> A", {S, P},
       scale_map(minus, chain({tensor({d.ev, id}), tensor({id, lambda}), tensor({d.omega, id})}))},
      {"A (x) A^v[s] -> A", {P, S}, chain({tensor({id, ev_tau}), tensor({lambda, id}), tensor({id, d.omega})})},
  };

  std::vector<DoubleComponent> coproduct = {
      {"A -> A (x) A", {P}, lambda},
      {"A^v[s] -> A (x) A^v[s]", {S},
       chain({tensor({id, d.s}), tensor({d.ev, id, id}), tensor({id, lambda, id}), tensor({id, d.coev}), d.omega})},
      {"A^v[s] -> A^v[s] (x) A", {S},
       chain({tensor({d.s, id}), tensor({id, id, ev_tau}), tensor({id, lambda, id}), tensor({tau_coev, id}),
              d.omega})},
      {"A^v[s] -> A^v[s] (x) A^v[s]", {S},
       chain({tensor({d.s, d.s}), tensor({d.ev, id, id}), tensor({id, mu, id, id}),
              GradedMap::permutation({0, 2, 1, 3, 4}), GradedMap::permutation({0, 1, 3, 2, 4}),
              tensor({id, d.coev, d.coev}), d.omega})},
      {"A -> A (x) A^v[s]", {P}, scale_map(minus, chain({tensor({id, d.s}), tensor({mu, id}), tensor({id, d.coev})}))},
      {"A -> A^v[s] (x) A", {P}, chain({tensor({d.s, id}), tensor({id, mu}), tensor({tau_coev, id})})},
  };

  std::vector<DoubleComponent> bv = {
      {"A -> A", {P}, a.Delta},
      {"A^v[s] -> A^v[s]", {S}, scale_map(minus, chain({d.s, delta_dual, d.omega}))},
  };
  std::vector<DoubleComponent> counit = {
      {"A^v[s] -> k", {S}, chain({ev_tau, tensor({eta, id}), d.omega})},
  };

  std::vector<Generator> doubled = basis;
  doubled.insert(doubled.end(), d.shifted_basis.begin(), d.shifted_basis.end());

  Instance result{
      .name = "double(" + a.name + ")",
      .field = a.field,
      .lambda_degree = a.lambda_degree,
      .basis = GradedBasis::finite(doubled),
      .mu = assemble("mu", product, 2, 1, 0),
      .lambda = assemble("lambda", coproduct, 1, 2, a.lambda_degree),
      .Delta = assemble("Delta", bv, 1, 1, 1),
      .eta = a.eta,
      .epsilon = assemble("epsilon", counit, 1, 0, -a.lambda_degree),
      .gysin = nullptr,
  };
  return DoubleData{a, std::move(d), std::move(product), std::move(coproduct), std::move(result)};
}

Instance build_double(const Instance& a) { return build_double_data(a).result; }

}  // namespace bvkit
