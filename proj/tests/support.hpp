#pragma once

#include "bvkit/io/literal.hpp"
#include "bvkit/models/models.hpp"
#include "bvkit/opexpr/evaluator.hpp"
#include "bvkit/opexpr/parser.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace bvkit;

inline std::mt19937& rng() {
  static std::mt19937 engine(20240611u);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Sign of a permutation computed by bubble-sorting the factors and
/// multiplying one Koszul sign per adjacent swap.
inline long bubble_sign(std::vector<int> target, std::vector<int> degrees) {
  long sign = 1;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < target.size(); ++i) {
      if (target[i] > target[i + 1]) {
        if ((degrees[i] * degrees[i + 1]) % 2 != 0) sign = -sign;
        std::swap(target[i], target[i + 1]);
        std::swap(degrees[i], degrees[i + 1]);
        swapped = true;
      }
    }
  }
  return sign;
}

/// Same sign by a different decomposition: bring the factor destined for the
/// last slot to the end first, then recurse on the rest.
inline long insertion_sign(std::vector<int> target, std::vector<int> degrees) {
  long sign = 1;
  for (int slot = static_cast<int>(target.size()) - 1; slot >= 0; --slot) {
    auto pos = static_cast<std::size_t>(std::find(target.begin(), target.end(), slot) - target.begin());
    for (std::size_t j = pos; j + 1 < target.size() && static_cast<int>(j) < slot; ++j) {
      if ((degrees[j] * degrees[j + 1]) % 2 != 0) sign = -sign;
      std::swap(target[j], target[j + 1]);
      std::swap(degrees[j], degrees[j + 1]);
    }
  }
  return sign;
}

inline std::vector<int> random_permutation(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline Element lit(const Instance& inst, std::string_view text) {
  return parse_element(text, inst.basis, inst.field);
}

inline Element lit(const Instance& inst, std::string_view text, int arity) {
  return parse_element(text, inst.basis, arity, inst.field);
}

inline Element eval(const Instance& inst, std::string_view expr, const Element& input) {
  Context ctx(inst);
  return evaluate(parse_expr(expr), ctx, input);
}

inline std::vector<Generator> window_basis(const Instance& inst, int bound) { return inst.basis.window(bound); }

inline Element random_element(const std::vector<Generator>& basis, int arity, int terms) {
  Element out(arity);
  for (int t = 0; t < terms; ++t) {
    Key k;
    for (int i = 0; i < arity; ++i) k.push_back(basis[uniform(0, static_cast<int>(basis.size()) - 1)]);
    out.add_term(k, Scalar(uniform(-4, 4)));
  }
  return out;
}

inline Key random_key(const std::vector<Generator>& basis, int arity) {
  Key k;
  for (int i = 0; i < arity; ++i) k.push_back(basis[uniform(0, static_cast<int>(basis.size()) - 1)]);
  return k;
}

}  // namespace testsupport
