#include "bvkit/core/graded_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvkit {

Scalar koszul_sign(std::span<const int> target, std::span<const Degree> degrees) {
  if (target.size() != degrees.size()) {
    throw std::invalid_argument("permutation of length " + std::to_string(target.size()) + " applied to " +
                                std::to_string(degrees.size()) + " degrees");
  }
  const auto k = static_cast<int>(target.size());
  std::vector<bool> seen(target.size(), false);
  for (int t : target) {
    if (t < 0 || t >= k || seen[t]) throw std::invalid_argument("not a permutation");
    seen[t] = true;
  }
  long exponent = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (target[i] > target[j]) exponent += static_cast<long>(degrees[i]) * degrees[j];
    }
  }
  return Scalar::sign(exponent < 0 ? -exponent : exponent);
}

GradedMap::GradedMap(std::string label, int source_arity, int target_arity, Degree degree, Action action)
    : label_(std::move(label)),
      source_arity_(source_arity),
      target_arity_(target_arity),
      degree_(degree),
      action_(std::make_shared<const Action>(std::move(action))) {
  if (source_arity < 0 || target_arity < 0) throw std::invalid_argument("negative arity");
}

GradedMap GradedMap::identity(int arity) {
  return GradedMap(arity == 1 ? "id" : "id^" + std::to_string(arity), arity, arity, 0,
                   [](const Key& k) { return Element::basis(k); });
}

GradedMap GradedMap::zero(std::string label, int source_arity, int target_arity, Degree degree) {
  return GradedMap(std::move(label), source_arity, target_arity, degree,
                   [target_arity](const Key&) { return Element(target_arity); });
}

GradedMap GradedMap::from_table(std::string label, int source_arity, int target_arity, Degree degree,
                                std::map<Key, Element, KeyLess> table) {
  for (const auto& [k, v] : table) {
    if (static_cast<int>(k.size()) != source_arity || v.arity() != target_arity) {
      throw std::invalid_argument("table entry " + key_to_string(k) + " has wrong arity for " + label);
    }
  }
  auto shared = std::make_shared<const std::map<Key, Element, KeyLess>>(std::move(table));
  return GradedMap(std::move(label), source_arity, target_arity, degree, [shared, target_arity](const Key& k) {
    auto it = shared->find(k);
    return it == shared->end() ? Element(target_arity) : it->second;
  });
}

GradedMap GradedMap::permutation(std::vector<int> target, std::string label) {
  const auto k = static_cast<int>(target.size());
  {
    std::vector<Degree> zeros(target.size(), 0);
    koszul_sign(target, zeros);  // validates
  }
  if (label.empty()) {
    label = "perm(";
    for (int i = 0; i < k; ++i) label += (i ? "," : "") + std::to_string(target[i] + 1);
    label += ")";
  }
  return GradedMap(std::move(label), k, k, 0, [target = std::move(target)](const Key& key) {
    std::vector<Degree> degrees;
    degrees.reserve(key.size());
    for (const auto& g : key) degrees.push_back(g.degree());
    Key out(key.size(), key.empty() ? Generator::make("", 0) : key[0]);
    for (std::size_t i = 0; i < key.size(); ++i) out[target[i]] = key[i];
    return Element::basis(std::move(out), koszul_sign(target, degrees));
  });
}

Element GradedMap::apply(const Key& key) const {
  if (static_cast<int>(key.size()) != source_arity_) {
    throw std::invalid_argument(label_ + ": expected " + std::to_string(source_arity_) + " inputs, got " +
                                key_to_string(key));
  }
  Element out = (*action_)(key);
  if (out.arity() != target_arity_) {
    throw std::logic_error(label_ + ": action produced arity " + std::to_string(out.arity()));
  }
  const Degree expected = degree_of(key) + degree_;
  for (const auto& [k, c] : out.terms()) {
    if (degree_of(k) != expected) {
      throw std::logic_error(label_ + " on " + key_to_string(key) + " produced " + key_to_string(k) +
                             " of degree " + std::to_string(degree_of(k)) + ", expected " +
                             std::to_string(expected));
    }
  }
  return out;
}

Element GradedMap::operator()(const Element& x) const {
  if (x.arity() != source_arity_) {
    throw std::invalid_argument(label_ + ": input arity " + std::to_string(x.arity()) + ", expected " +
                                std::to_string(source_arity_));
  }
  Element out(target_arity_);
  for (const auto& [k, c] : x.terms()) {
    Element y = apply(k);
    y *= c;
    out += y;
  }
  return out;
}

GradedMap GradedMap::relabeled(std::string label) const {
  GradedMap copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

GradedMap tensor_maps(const GradedMap& f, const GradedMap& g) {
  const int split = f.source_arity();
  const Degree g_degree = g.degree();
  return GradedMap("(" + f.label() + " (x) " + g.label() + ")", f.source_arity() + g.source_arity(),
                   f.target_arity() + g.target_arity(), f.degree() + g.degree(),
                   [f, g, split, g_degree](const Key& key) {
                     Key a(key.begin(), key.begin() + split);
                     Key b(key.begin() + split, key.end());
                     Element fa = f.apply(a);
                     if (fa.is_zero()) return Element(f.target_arity() + g.target_arity());
                     Element out = fa.tensor(g.apply(b));
                     out *= Scalar::sign(static_cast<long>(g_degree) * degree_of(a));
                     return out;
                   });
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (g.target_arity() != f.source_arity()) {
    throw std::invalid_argument("cannot compose " + f.label() + " (" + std::to_string(f.source_arity()) +
                                " inputs) after " + g.label() + " (" + std::to_string(g.target_arity()) +
                                " outputs)");
  }
  return GradedMap(f.label() + " . " + g.label(), g.source_arity(), f.target_arity(), f.degree() + g.degree(),
                   [f, g](const Key& key) { return f(g.apply(key)); });
}

GradedMap add_maps(const GradedMap& f, const GradedMap& g) {
  if (f.source_arity() != g.source_arity() || f.target_arity() != g.target_arity()) {
    throw std::invalid_argument("cannot add " + f.label() + " and " + g.label() + ": arity mismatch");
  }
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("cannot add " + f.label() + " (degree " + std::to_string(f.degree()) + ") and " +
                                g.label() + " (degree " + std::to_string(g.degree()) + ")");
  }
  return GradedMap(f.label() + " + " + g.label(), f.source_arity(), f.target_arity(), f.degree(),
                   [f, g](const Key& key) { return f.apply(key) + g.apply(key); });
}

GradedMap scale_map(const Scalar& c, const GradedMap& f) {
  return GradedMap(c.to_display_string() + "*" + f.label(), f.source_arity(), f.target_arity(), f.degree(),
                   [c, f](const Key& key) {
                     Element y = f.apply(key);
                     y *= c;
                     return y;
                   });
}

GradedMap restrict_to_tags(const GradedMap& f, std::vector<SpaceTag> tags) {
  if (static_cast<int>(tags.size()) != f.source_arity()) {
    throw std::invalid_argument("restriction pattern does not match arity of " + f.label());
  }
  return GradedMap(f.label(), f.source_arity(), f.target_arity(), f.degree(),
                   [f, tags = std::move(tags)](const Key& key) {
                     for (std::size_t i = 0; i < key.size(); ++i) {
                       if (key[i].tag() != tags[i]) return Element(f.target_arity());
                     }
                     return f.apply(key);
                   });
}

std::vector<Key> enumerate_tuples(std::span<const std::vector<Generator>> slot_basis) {
  std::vector<Key> out{Key{}};
  for (const auto& slot : slot_basis) {
    std::vector<Key> next;
    next.reserve(out.size() * slot.size());
    for (const auto& prefix : out) {
      for (const auto& g : slot) {
        Key k = prefix;
        k.push_back(g);
        next.push_back(std::move(k));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool maps_agree(const GradedMap& f, const GradedMap& g, std::span<const std::vector<Generator>> slot_basis,
                Key* witness) {
  for (const auto& key : enumerate_tuples(slot_basis)) {
    if (!(f.apply(key) == g.apply(key))) {
      if (witness) *witness = key;
      return false;
    }
  }
  return true;
}

}  // namespace bvkit
