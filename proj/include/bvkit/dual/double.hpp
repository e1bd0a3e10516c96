#pragma once

#include "bvkit/dual/dual.hpp"
#include "bvkit/instance.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bvkit {

/// Raised when the double cannot be formed: lambda . eta != 0 or an
/// infinite-dimensional input.
class DoubleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One block of the product or coproduct of D(A) = A + A^v[s], named by the
/// summands it connects, e.g. "A^v[s] (x) A -> A".
struct DoubleComponent {
  std::string name;
  std::vector<SpaceTag> inputs;
  GradedMap map;
};

struct DoubleData {
  Instance source;
  DualData dual;
  std::vector<DoubleComponent> product;    ///< six blocks of the product
  std::vector<DoubleComponent> coproduct;  ///< six blocks of the coproduct
  Instance result;                         ///< the assembled Frobenius instance
};

/// Builds the double of a finite bialgebra with lambda . eta = 0. The result
/// has basis A followed by the shifted duals e# of degree -|e| + |lambda|, unit
/// eta, counit 1# |-> 1 dual to the unit, and BV operator Delta on A and
/// -s Delta^v omega on the shifted duals.
DoubleData build_double_data(const Instance& a);
Instance build_double(const Instance& a);

}  // namespace bvkit
