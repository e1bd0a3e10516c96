#pragma once

#include "bvkit/core/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bvkit {

using Degree = int;

/// Which summand a generator belongs to. Dualizing toggles the low bit, so
/// every space kind has a matching dual kind.
enum class SpaceTag : std::uint8_t {
  primal = 0,
  dual = 1,
  shifted_dual = 2,
  shifted_dual_dual = 3,
  quotient = 4,
  quotient_dual = 5,
};

constexpr bool is_dual_tag(SpaceTag t) { return (static_cast<int>(t) & 1) != 0; }

namespace detail {
struct GeneratorRecord {
  std::string name;
  Degree degree;
  int order;
  SpaceTag tag;
};
}  // namespace detail

/// A named homogeneous basis vector. Generators are interned: two generators
/// with the same (name, degree, order, tag) are the same object, so copying
/// and comparing is cheap and thread-safe.
///
/// `order` is the position in the owning space's canonical basis order; keys
/// sort by (tag, order, name).
class Generator {
 public:
  static Generator make(std::string_view name, Degree degree, int order = 0,
                        SpaceTag tag = SpaceTag::primal);

  const std::string& name() const { return rec_->name; }
  Degree degree() const { return rec_->degree; }
  int order() const { return rec_->order; }
  SpaceTag tag() const { return rec_->tag; }

  friend bool operator==(Generator a, Generator b) { return a.rec_ == b.rec_; }
  friend bool operator<(Generator a, Generator b);

 private:
  explicit Generator(const detail::GeneratorRecord* rec) : rec_(rec) {}
  const detail::GeneratorRecord* rec_;
};

/// A basis tuple of a tensor power; the empty key is the unit of the ground field.
using Key = std::vector<Generator>;

Degree degree_of(const Key& key);
std::string key_to_string(const Key& key);

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const;
};

/// Finitely supported linear combination of basis tuples of a fixed tensor
/// power. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Key, Scalar, KeyLess>;

  explicit Element(int arity = 1) : arity_(arity) {}

  static Element basis(Key key, Scalar coeff = Scalar(1));
  /// Element of the zeroth tensor power (the ground field).
  static Element unit(Scalar coeff = Scalar(1));

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of `key` (zero when absent).
  Scalar coefficient(const Key& key) const;

  void add_term(const Key& key, const Scalar& coeff);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  Element operator-() const;

  /// Concatenation of tensor factors; no sign is involved.
  Element tensor(const Element& rhs) const;

  /// Single degree if homogeneous (the zero element has none).
  std::optional<Degree> degree() const;
  std::map<Degree, Element> homogeneous_parts() const;

  /// Canonical text form, e.g. "2*A(x)1 - 2*1(x)A"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  void check_arity(const Element& rhs) const;

  int arity_;
  Terms terms_;
};

}  // namespace bvkit
