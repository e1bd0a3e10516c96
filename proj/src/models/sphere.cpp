#include "bvkit/models/models.hpp"

#include "sphere_internal.hpp"

#include <cctype>
#include <stdexcept>

namespace bvkit {

Degree sphere_degree(int n, SphereKey key) { return key.k * (n - 1) - (key.has_a ? n : 0); }

std::string sphere_name(SphereKey key) {
  if (key.k == 0) return key.has_a ? "A" : "1";
  std::string out = key.has_a ? "AU" : "U";
  if (key.k > 1) out += "^" + std::to_string(key.k);
  return out;
}

std::optional<SphereKey> parse_sphere_name(std::string_view name) {
  if (name == "1") return SphereKey{false, 0};
  if (name == "A") return SphereKey{true, 0};
  SphereKey key;
  if (name.substr(0, 1) == "A") {
    key.has_a = true;
    name.remove_prefix(1);
  }
  if (name.substr(0, 1) != "U") return std::nullopt;
  name.remove_prefix(1);
  if (name.empty()) {
    key.k = 1;
    return key;
  }
  if (name[0] != '^' || name.size() < 2 || name.size() > 7) return std::nullopt;
  name.remove_prefix(1);
  for (char c : name) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  key.k = std::stoi(std::string(name));
  return key;
}

Generator sphere_generator(int n, SphereKey key) {
  return Generator::make(sphere_name(key), sphere_degree(n, key), 2 * key.k + (key.has_a ? 0 : 1));
}

namespace detail {

namespace {

SphereKey key_of(Generator g) {
  auto k = parse_sphere_name(g.name());
  if (!k || g.tag() != SpaceTag::primal) throw std::invalid_argument("not a sphere basis element: " + g.name());
  return *k;
}

}  // namespace

GradedBasis sphere_basis(int n) {
  return GradedBasis::rule(
      "sphere:" + std::to_string(n) + " basis A^a U^k",
      [n](int bound) {
        std::vector<Generator> out;
        for (int k = 0; k <= bound; ++k) {
          out.push_back(sphere_generator(n, {true, k}));
          out.push_back(sphere_generator(n, {false, k}));
        }
        return out;
      },
      [n](std::string_view name) -> std::optional<Generator> {
        auto key = parse_sphere_name(name);
        if (!key) return std::nullopt;
        return sphere_generator(n, *key);
      });
}

Instance sphere_instance(int n, const Field& field, const SpherePerturbation& perturb) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("sphere model needs an odd dimension n >= 3, got " + std::to_string(n));
  }
  const Degree lambda_degree = 1 - 2 * n;
  const Scalar one = Scalar::in(field, 1);
  const Scalar u_sign = Scalar::in(field, perturb.flip_lambda_sign ? 1 : -1);
  const Scalar delta_first = Scalar::in(field, perturb.delta_au_coefficient);

  GradedMap mu("mu", 2, 1, 0, [n, one](const Key& key) {
    SphereKey a = key_of(key[0]), b = key_of(key[1]);
    if (a.has_a && b.has_a) return Element(1);
    return Element::basis({sphere_generator(n, {a.has_a || b.has_a, a.k + b.k})}, one);
  });

  GradedMap lambda("lambda", 1, 2, lambda_degree, [n, one, u_sign](const Key& key) {
    SphereKey x = key_of(key[0]);
    Element out(2);
    for (int i = 0; i + 1 <= x.k; ++i) {
      const int j = x.k - 1 - i;
      if (x.has_a) {
        out.add_term({sphere_generator(n, {true, i}), sphere_generator(n, {true, j})}, one);
      } else {
        out.add_term({sphere_generator(n, {true, i}), sphere_generator(n, {false, j})}, one);
        out.add_term({sphere_generator(n, {false, i}), sphere_generator(n, {true, j})}, u_sign);
      }
    }
    return out;
  });

  GradedMap delta("Delta", 1, 1, 1, [n, field, delta_first](const Key& key) {
    SphereKey x = key_of(key[0]);
    if (!x.has_a || x.k == 0) return Element(1);
    Scalar c = x.k == 1 ? delta_first : Scalar::in(field, x.k);
    return Element::basis({sphere_generator(n, {false, x.k - 1})}, c);
  });

  return Instance{
      .name = "sphere:" + std::to_string(n),
      .field = field,
      .lambda_degree = lambda_degree,
      .basis = sphere_basis(n),
      .mu = std::move(mu),
      .lambda = std::move(lambda),
      .Delta = std::move(delta),
      .eta = Element::basis({sphere_generator(n, {false, 0})}, one),
      .epsilon = std::nullopt,
      .gysin = nullptr,
  };
}

}  // namespace detail

Instance sphere_model(int n, const Field& field) { return detail::sphere_instance(n, field, {}); }

}  // namespace bvkit
