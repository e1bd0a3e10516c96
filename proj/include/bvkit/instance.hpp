#pragma once

#include "bvkit/core/graded_map.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bvkit {

/// Bounds on enumerated input tuples. `max_index` limits the index of each
/// basis element in a slot (for the sphere model, the U-power); `max_index_ternary`
/// applies instead to relations with three or more inputs. Negative means
/// unbounded, which only finite spaces accept.
struct Window {
  int max_index = -1;
  int max_index_ternary = -1;

  static Window all() { return {}; }
  static Window up_to(int k, int k3) { return {k, k3}; }
  static Window up_to(int k) { return {k, k}; }
  int bound_for(int arity) const { return arity >= 3 ? max_index_ternary : max_index; }
  std::string describe() const;
};

/// A graded basis, either an explicit finite list or a rule enumerating
/// elements by index. Lookup by name covers every element, including those
/// outside any window.
class GradedBasis {
 public:
  using Enumerator = std::function<std::vector<Generator>(int max_index)>;
  using Lookup = std::function<std::optional<Generator>(std::string_view)>;

  static GradedBasis finite(std::vector<Generator> elements);
  static GradedBasis rule(std::string description, Enumerator enumerate, Lookup lookup);

  bool is_finite() const { return finite_.has_value(); }
  /// All elements; throws for rule-based bases.
  const std::vector<Generator>& elements() const;
  /// Elements with index <= bound (all of them when bound < 0 on a finite basis).
  std::vector<Generator> window(int bound) const;
  std::optional<Generator> find(std::string_view name) const;
  const std::string& description() const { return description_; }

 private:
  std::string description_;
  std::optional<std::vector<Generator>> finite_;
  Enumerator enumerate_;
  Lookup lookup_;
};

/// Erase/mark data: B with E: A -> B of degree 0 and M: B -> A of degree 1.
struct GysinData {
  GradedBasis basis;
  GradedMap E;
  GradedMap M;
};

/// A graded space with mu, eta, lambda, Delta and an optional counit epsilon.
/// Instances with epsilon are treated as Frobenius instances; dropping
/// epsilon gives the underlying bialgebra.
struct Instance {
  std::string name;
  Field field = Field::rationals();
  Degree lambda_degree = -1;
  GradedBasis basis;
  GradedMap mu;
  GradedMap lambda;
  GradedMap Delta;
  Element eta{1};
  std::optional<GradedMap> epsilon;
  std::shared_ptr<const GysinData> gysin;

  bool has_counit() const { return epsilon.has_value(); }
  GradedMap eta_map() const;
  /// c = lambda . eta
  Element copairing() const;
  /// p = (-1)^{|lambda|} epsilon . mu; requires epsilon.
  GradedMap pairing() const;
  /// Scalar c of this instance's field.
  Scalar scalar(long c) const { return Scalar::in(field, c); }
  /// Copy of this instance with every coefficient reduced into `f`.
  Instance over_field(const Field& f) const;
};

/// Drops epsilon; the structure maps are shared unchanged.
Instance forget_frobenius_to_bvui(const Instance& frobenius);

/// Checks degree bookkeeping: odd |lambda|, eta homogeneous of degree 0.
/// Returns the list of violations (empty when valid).
std::vector<std::string> validate_metadata(const Instance& inst);

/// Reduces every coefficient of x into `f`.
Element reduce_into(const Element& x, const Field& f);
GradedMap reduce_into(const GradedMap& m, const Field& f);

}  // namespace bvkit
