#include "bvkit/models/models.hpp"

#include "bvkit/structures/check.hpp"

#include <stdexcept>

namespace bvkit {

namespace {

using Table = std::map<Key, Element, KeyLess>;

struct FiniteSpec {
  std::string name;
  Degree lambda_degree;
  std::vector<Generator> basis;
  Table mu, lambda, delta;
  std::optional<Table> epsilon;
};

Instance build(FiniteSpec spec, const Field& field) {
  Instance inst{
      .name = spec.name,
      .field = field,
      .lambda_degree = spec.lambda_degree,
      .basis = GradedBasis::finite(spec.basis),
      .mu = GradedMap::from_table("mu", 2, 1, 0, std::move(spec.mu)),
      .lambda = GradedMap::from_table("lambda", 1, 2, spec.lambda_degree, std::move(spec.lambda)),
      .Delta = GradedMap::from_table("Delta", 1, 1, 1, std::move(spec.delta)),
      .eta = Element::basis({spec.basis.front()}),
      .epsilon = std::nullopt,
      .gysin = nullptr,
  };
  if (spec.epsilon) inst.epsilon = GradedMap::from_table("epsilon", 1, 0, -spec.lambda_degree, std::move(*spec.epsilon));
  return inst.over_field(field);
}

/// Unital product table: 1 * y = y * 1 = y plus the given extra entries.
Table unital_product(Generator one, const std::vector<Generator>& basis) {
  Table t;
  for (auto g : basis) {
    t[{one, g}] = Element::basis({g});
    t[{g, one}] = Element::basis({g});
  }
  return t;
}

Element term(Generator a, Generator b, long c = 1) { return Element::basis({a, b}, Scalar(c)); }

}  // namespace

Instance trivial_model(const Field& field) {
  Generator one = Generator::make("1", 0, 0);
  return build({"trivial", -1, {one}, unital_product(one, {one}), {}, {}, std::nullopt}, field);
}

Instance exterior_model(const Field& field) {
  Generator one = Generator::make("1", 0, 0);
  Generator x = Generator::make("x", -1, 1);
  return build({"exterior", -1, {one, x}, unital_product(one, {one, x}), {}, {}, std::nullopt}, field);
}

Instance three_dim_model(const Field& field) {
  Generator one = Generator::make("1", 0, 0);
  Generator a = Generator::make("a", -1, 1);
  Generator b = Generator::make("b", -1, 2);
  Table lambda;
  lambda[{b}] = term(a, a);
  return build({"three-dim", -1, {one, a, b}, unital_product(one, {one, a, b}), lambda, {}, std::nullopt}, field);
}

Instance sphere_frobenius_model(int n, const Field& field) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("sphere Frobenius model needs an odd dimension n >= 3, got " + std::to_string(n));
  }
  Generator one = Generator::make("1", 0, 0);
  Generator x = Generator::make("x", -n, 1);
  Table lambda;
  lambda[{one}] = term(x, one) - term(one, x);
  lambda[{x}] = term(x, x);
  Table epsilon;
  epsilon[{x}] = Element::unit();
  return build({"sphere-frob:" + std::to_string(n), -n, {one, x}, unital_product(one, {one, x}), lambda, {}, epsilon},
               field);
}

std::vector<Instance> finite_bvui_examples(const Field& field) {
  std::vector<Instance> out = {trivial_model(field), exterior_model(field), three_dim_model(field)};
  for (const auto& inst : out) {
    for (const auto& r : check_structure(inst, bvui_full(), Window::all())) {
      if (!r.passed()) throw std::logic_error("built-in example failed verification: " + r.summary());
    }
  }
  return out;
}

std::optional<Instance> builtin_model(std::string_view name, const Field& field) {
  auto dimension = [](std::string_view digits) {
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("malformed sphere dimension '" + std::string(digits) + "'");
    }
    return std::stoi(std::string(digits));
  };
  if (name.starts_with("sphere:")) return sphere_model(dimension(name.substr(7)), field);
  if (name.starts_with("sphere-frob:")) return sphere_frobenius_model(dimension(name.substr(12)), field);
  if (name == "trivial") return trivial_model(field);
  if (name == "exterior") return exterior_model(field);
  if (name == "three-dim") return three_dim_model(field);
  return std::nullopt;
}

}  // namespace bvkit
