#include "bvkit/core/linalg.hpp"

namespace bvkit {

Element SpanReducer::reduce(Element v, std::map<int, Scalar>& combination) const {
  for (const auto& row : rows_) {
    Scalar c = v.coefficient(row.pivot);
    if (c.is_zero()) continue;
    Scalar factor = c / row.vector.coefficient(row.pivot);
    Element scaled = row.vector;
    scaled *= factor;
    v -= scaled;
    for (const auto& [label, w] : row.combination) {
      Scalar& slot = combination[label];
      slot += factor * w;
      if (slot.is_zero()) combination.erase(label);
    }
  }
  return v;
}

bool SpanReducer::add(const Element& v, int label) {
  std::map<int, Scalar> combination;
  Element r = reduce(v, combination);
  if (r.is_zero()) return false;
  // r = v - sum(combination) so r is expressed as label - combination.
  std::map<int, Scalar> own;
  own[label] = Scalar(1);
  for (const auto& [l, w] : combination) own[l] -= w;
  for (auto it = own.begin(); it != own.end();) {
    it = it->second.is_zero() ? own.erase(it) : std::next(it);
  }
  rows_.push_back({r.terms().begin()->first, std::move(r), std::move(own)});
  return true;
}

std::optional<std::map<int, Scalar>> SpanReducer::express(const Element& v) const {
  std::map<int, Scalar> combination;
  Element r = reduce(v, combination);
  if (!r.is_zero()) return std::nullopt;
  return combination;
}

}  // namespace bvkit
