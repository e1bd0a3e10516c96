#include "bvkit/dual/dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvkit {

namespace {

SpaceTag toggle_dual(SpaceTag t) { return static_cast<SpaceTag>(static_cast<int>(t) ^ 1); }

}  // namespace

Generator dual_generator(Generator g) {
  std::string name = g.name();
  if (is_dual_tag(g.tag())) {
    if (name.empty() || name.back() != '*') throw std::logic_error("dual generator without marker: " + name);
    name.pop_back();
  } else {
    name += '*';
  }
  return Generator::make(name, -g.degree(), g.order(), toggle_dual(g.tag()));
}

Generator shifted_generator(Generator dual, Degree shift) {
  if (dual.tag() != SpaceTag::dual) throw std::invalid_argument("cannot shift " + dual.name());
  std::string name = dual.name();
  name.back() = '#';
  return Generator::make(name, dual.degree() + shift, dual.order(), SpaceTag::shifted_dual);
}

Generator unshifted_generator(Generator shifted, Degree shift) {
  if (shifted.tag() != SpaceTag::shifted_dual) throw std::invalid_argument("not a shifted generator: " + shifted.name());
  std::string name = shifted.name();
  name.back() = '*';
  return Generator::make(name, shifted.degree() - shift, shifted.order(), SpaceTag::dual);
}

DualData make_dual_data(const std::vector<Generator>& basis, Degree shift) {
  std::vector<Generator> duals, shifted;
  for (auto g : basis) {
    if (g.tag() != SpaceTag::primal) throw std::invalid_argument("dual data needs a primal basis, got " + g.name());
    duals.push_back(dual_generator(g));
    shifted.push_back(shifted_generator(duals.back(), shift));
  }

  GradedMap ev("ev", 2, 0, 0, [](const Key& k) {
    if (k[0].tag() != SpaceTag::dual || k[1].tag() != SpaceTag::primal) {
      throw std::invalid_argument("ev expects A^v (x) A, got " + key_to_string(k));
    }
    return dual_generator(k[0]) == k[1] ? Element::unit() : Element(0);
  });

  GradedMap coev("coev", 0, 2, 0, [basis, duals](const Key&) {
    Element out(2);
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term({basis[i], duals[i]}, Scalar(1));
    return out;
  });

  GradedMap s("s", 1, 1, shift, [shift](const Key& k) { return Element::basis({shifted_generator(k[0], shift)}); });
  GradedMap omega("omega", 1, 1, -shift,
                  [shift](const Key& k) { return Element::basis({unshifted_generator(k[0], shift)}); });

  return DualData{basis, std::move(duals), std::move(shifted), shift, std::move(ev), std::move(coev), std::move(s),
                  std::move(omega)};
}

Scalar nested_pairing(const Key& duals, const Key& vectors) {
  if (duals.size() != vectors.size()) return Scalar(0);
  const std::size_t k = duals.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_dual_tag(duals[k - 1 - i].tag()) || dual_generator(duals[k - 1 - i]) != vectors[i]) return Scalar(0);
  }
  return Scalar(1);
}

GradedMap dual_map(const GradedMap& f, const std::vector<Generator>& basis) {
  const int p = f.source_arity();
  std::vector<std::vector<Generator>> slots(p, basis);
  auto sources = std::make_shared<const std::vector<Key>>(enumerate_tuples(slots));
  for (const auto& x : *sources) {
    const Element image = f.apply(x);
    for (const auto& [k, c] : image.terms()) {
      for (const auto& g : k) {
        if (std::find(basis.begin(), basis.end(), g) == basis.end()) {
          throw std::invalid_argument("cannot dualize " + f.label() + ": " + key_to_string(x) + " maps outside the basis (" +
                                      g.name() + ")");
        }
      }
    }
  }
  const Degree fd = f.degree();
  return GradedMap("dual(" + f.label() + ")", f.target_arity(), p, fd, [f, sources, fd](const Key& phi) {
    Key y;
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) y.push_back(dual_generator(*it));
    const Scalar sign = Scalar::sign(static_cast<long>(fd) * degree_of(phi));
    Element out(f.source_arity());
    for (const auto& x : *sources) {
      Scalar c = f.apply(x).coefficient(y);
      if (c.is_zero()) continue;
      Key xd;
      for (auto it = x.rbegin(); it != x.rend(); ++it) xd.push_back(dual_generator(*it));
      out.add_term(xd, sign * c);
    }
    return out;
  });
}

GradedMap double_dual_identification() {
  return GradedMap("iota", 1, 1, 0, [](const Key& k) { return Element::basis(k, Scalar::sign(k[0].degree())); });
}

}  // namespace bvkit
