#pragma once

#include <vector>

#include "surfq/numeric.hpp"
#include "surfq/torus_spectrum.hpp"

namespace surfq::torus_detail {

// Trigonometric basis sampled on the trapezoid nodes: value, first and
// second derivative, one row per basis function.
struct SampledBasis {
  std::vector<int> harmonics;
  Matrix value, d1, d2;
};

std::vector<int> harmonics_for(Parity parity, int n_max);

SampledBasis sample_basis(Parity parity, int n_max, const QuadratureRule& rule);

}  // namespace surfq::torus_detail
