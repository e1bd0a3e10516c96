#pragma once

#include "bvkit/core/element.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bvkit {

/// Incremental exact row reduction over the span of a growing list of
/// vectors. Each added vector is tagged with an integer label; `express`
/// writes a vector as a combination of the labels of independent vectors.
class SpanReducer {
 public:
  /// Adds `v` under `label`. Returns false (and stores nothing) when `v`
  /// already lies in the span.
  bool add(const Element& v, int label);

  /// Coefficients c with v = sum c[label] * vector(label), if v is in the span.
  std::optional<std::map<int, Scalar>> express(const Element& v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Key pivot;
    Element vector;
    std::map<int, Scalar> combination;
  };

  /// Reduces v against the stored rows, accumulating the subtracted combination.
  Element reduce(Element v, std::map<int, Scalar>& combination) const;

  std::vector<Row> rows_;
};

}  // namespace bvkit
