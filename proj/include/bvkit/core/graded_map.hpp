#pragma once

#include "bvkit/core/element.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bvkit {

/// Sign of a signed permutation of homogeneous tensor factors.
///
/// `target[i]` is the (0-based) position that factor i moves to. The result is
/// the product of (-1)^{|a||b|} over all inverted pairs, which is the sign of
/// any decomposition into adjacent transpositions.
Scalar koszul_sign(std::span<const int> target, std::span<const Degree> degrees);

/// Homogeneous linear map between tensor powers, given by its action on basis
/// tuples. Values are immutable and cheap to copy.
///
/// Every application checks that outputs have degree (input degree + map
/// degree); a violation is a logic error in the map's definition.
class GradedMap {
 public:
  using Action = std::function<Element(const Key&)>;

  GradedMap(std::string label, int source_arity, int target_arity, Degree degree, Action action);

  static GradedMap identity(int arity = 1);
  static GradedMap zero(std::string label, int source_arity, int target_arity, Degree degree);
  /// Map given by a finite table; basis tuples missing from the table go to zero.
  static GradedMap from_table(std::string label, int source_arity, int target_arity, Degree degree,
                              std::map<Key, Element, KeyLess> table);
  /// Signed permutation of `target.size()` factors (see koszul_sign).
  static GradedMap permutation(std::vector<int> target, std::string label = {});

  const std::string& label() const { return label_; }
  int source_arity() const { return source_arity_; }
  int target_arity() const { return target_arity_; }
  Degree degree() const { return degree_; }

  Element apply(const Key& key) const;
  Element operator()(const Element& x) const;

  GradedMap relabeled(std::string label) const;

 private:
  std::string label_;
  int source_arity_;
  int target_arity_;
  Degree degree_;
  std::shared_ptr<const Action> action_;
};

/// f (x) g with the rule (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b).
GradedMap tensor_maps(const GradedMap& f, const GradedMap& g);
/// f o g.
GradedMap compose(const GradedMap& f, const GradedMap& g);
/// f + g; arities and degrees must agree.
GradedMap add_maps(const GradedMap& f, const GradedMap& g);
GradedMap scale_map(const Scalar& c, const GradedMap& f);

/// Restriction of f to basis tuples whose generators carry the given tags, in
/// order; f is zero on every other tuple.
GradedMap restrict_to_tags(const GradedMap& f, std::vector<SpaceTag> tags);

/// True iff f and g agree on every tuple drawn from `slot_basis` (one list per
/// input slot). On mismatch, `witness` receives the first offending tuple.
bool maps_agree(const GradedMap& f, const GradedMap& g, std::span<const std::vector<Generator>> slot_basis,
                Key* witness = nullptr);

/// All tuples of the cartesian product, in canonical (lexicographic) order.
std::vector<Key> enumerate_tuples(std::span<const std::vector<Generator>> slot_basis);

}  // namespace bvkit
