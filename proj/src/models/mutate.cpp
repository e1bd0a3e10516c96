#include "bvkit/models/models.hpp"

#include "sphere_internal.hpp"

#include <stdexcept>

namespace bvkit {

namespace {

int sphere_dimension(const Instance& inst, std::string_view mutation) {
  constexpr std::string_view prefix = "sphere:";
  if (!inst.name.starts_with(prefix)) {
    throw std::invalid_argument("mutation '" + std::string(mutation) + "' applies only to sphere models, not " +
                                inst.name);
  }
  return std::stoi(inst.name.substr(prefix.size()));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

GradedMap negate_entry(const GradedMap& f, const Key& target) {
  return GradedMap(f.label(), f.source_arity(), f.target_arity(), f.degree(), [f, target](const Key& k) {
    Element y = f.apply(k);
    if (k == target) y *= Scalar(-1);
    return y;
  });
}

}  // namespace

Instance mutate(const Instance& inst, std::string_view mutation) {
  if (mutation == "identity") return inst;
  if (mutation == "sphere-lambda-flip") {
    Instance out = detail::sphere_instance(sphere_dimension(inst, mutation), inst.field, {true, 1});
    out.name += "~lambda-flip";
    return out;
  }
  if (mutation == "sphere-delta-coeff") {
    Instance out = detail::sphere_instance(sphere_dimension(inst, mutation), inst.field, {false, 2});
    out.name += "~delta-coeff";
    return out;
  }
  auto parts = split(mutation, ':');
  if (parts.size() == 3 && parts[0] == "negate") {
    Key target;
    for (const auto& name : split(parts[2], ',')) {
      auto g = inst.basis.find(name);
      if (!g) throw std::invalid_argument("mutation target: unknown basis element '" + name + "'");
      target.push_back(*g);
    }
    Instance out = inst;
    GradedMap* map = nullptr;
    if (parts[1] == "mu") map = &out.mu;
    if (parts[1] == "lambda") map = &out.lambda;
    if (parts[1] == "Delta") map = &out.Delta;
    if (parts[1] == "epsilon" && out.epsilon) map = &*out.epsilon;
    if (!map) throw std::invalid_argument("mutation target: no structure map '" + parts[1] + "' on " + inst.name);
    if (static_cast<int>(target.size()) != map->source_arity()) {
      throw std::invalid_argument("mutation target: " + parts[1] + " takes " + std::to_string(map->source_arity()) +
                                  " inputs");
    }
    if (map->apply(target).is_zero()) {
      throw std::invalid_argument("mutation target: " + parts[1] + "(" + key_to_string(target) +
                                  ") is zero, nothing to negate");
    }
    *map = negate_entry(*map, target);
    out.name += "~" + std::string(mutation);
    return out;
  }
  throw std::invalid_argument("unknown mutation '" + std::string(mutation) + "'");
}

}  // namespace bvkit
