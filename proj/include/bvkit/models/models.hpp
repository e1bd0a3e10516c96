#pragma once

#include "bvkit/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bvkit {

/// Basis element A^a U^k of the sphere model Lambda[A, U].
struct SphereKey {
  bool has_a = false;
  int k = 0;
};

/// Degree of A^a U^k for the sphere of dimension n: k(n-1) - a*n.
Degree sphere_degree(int n, SphereKey key);
/// "1", "U", "U^k", "A", "AU", "AU^k".
std::string sphere_name(SphereKey key);
/// Inverse of sphere_name; also accepts "U^0", "U^1", "AU^0", "AU^1".
std::optional<SphereKey> parse_sphere_name(std::string_view name);
Generator sphere_generator(int n, SphereKey key);

/// Loop homology of the odd sphere S^n as a rule-based instance:
/// |A| = -n, |U| = n-1, |lambda| = 1-2n,
/// lambda(AU^k) = sum_{i+j=k-1} AU^i (x) AU^j,
/// lambda(U^k) = sum_{i+j=k-1} (AU^i (x) U^j - U^i (x) AU^j),
/// Delta(U^k) = 0, Delta(AU^k) = k U^{k-1}.
/// Requires n odd and n >= 3.
Instance sphere_model(int n, const Field& field = Field::rationals());

/// Two-dimensional odd Frobenius algebra {1, x}, |x| = -n = |lambda|, with
/// x^2 = 0, lambda(1) = x (x) 1 - 1 (x) x, lambda(x) = x (x) x, epsilon(x) = 1,
/// Delta = 0.
Instance sphere_frobenius_model(int n, const Field& field = Field::rationals());

/// k with |lambda| = -1, all operations but the unit zero.
Instance trivial_model(const Field& field = Field::rationals());
/// Lambda[x] with |x| = -1, lambda = 0, Delta = 0.
Instance exterior_model(const Field& field = Field::rationals());
/// {1, a, b} with |a| = |b| = -1, all products of a and b zero,
/// lambda(b) = a (x) a and lambda = 0 otherwise, Delta = 0, |lambda| = -1.
Instance three_dim_model(const Field& field = Field::rationals());

/// The three finite examples above, each verified against the full
/// bialgebra suite before being returned (throws std::logic_error if not).
std::vector<Instance> finite_bvui_examples(const Field& field = Field::rationals());

/// Builds a named model: "sphere:N", "sphere-frob:N", "trivial", "exterior",
/// "three-dim". Returns nullopt for names that are not built-in models.
std::optional<Instance> builtin_model(std::string_view name, const Field& field = Field::rationals());

/// Applies a named perturbation and returns the perturbed instance:
///   identity                    no change
///   sphere-lambda-flip          the minus sign in the sphere's lambda(U^k) becomes plus
///   sphere-delta-coeff          Delta(AU) = 2 on the sphere
///   negate:<map>:<inputs>       negates one structure constant, e.g. "negate:lambda:b" or
///                               "negate:mu:a,b"; <map> is mu, lambda, Delta or epsilon
/// Throws std::invalid_argument for unknown names or targets.
Instance mutate(const Instance& inst, std::string_view mutation);

}  // namespace bvkit
