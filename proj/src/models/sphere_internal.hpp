#pragma once

#include "bvkit/instance.hpp"

namespace bvkit::detail {

struct SpherePerturbation {
  bool flip_lambda_sign = false;
  long delta_au_coefficient = 1;
};

GradedBasis sphere_basis(int n);
Instance sphere_instance(int n, const Field& field, const SpherePerturbation& perturb);

}  // namespace bvkit::detail
