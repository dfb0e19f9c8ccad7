#pragma once

// Homogeneous partial fraction decomposition
//   prod_i 1/(a_i + x) = sum_i mu_i / (a_i + x),   mu_i = prod_{j != i} 1/(a_j - a_i).

#include <span>
#include <vector>

#include "omega_zeta/complex_special.hpp"

namespace omega_zeta {

inline constexpr double kPfdNodeTolerance = 1e-10;

struct PfdResult {
  std::vector<ComplexValue> nodes;
  std::vector<ComplexValue> coefficients;
  // max |mu_i| * min_{i != j} |a_i - a_j|; 1 for a single node.
  double condition_number = 1.0;
};

// DegenerateNodesError when two nodes are closer than kPfdNodeTolerance,
// DomainError for an empty list.
PfdResult pfd_coefficients(std::span<const ComplexValue> nodes);

// |prod 1/(a_i + x) - sum mu_i/(a_i + x)|. PoleError when x is within
// kPfdNodeTolerance of some -a_i.
double pfd_residual(const PfdResult& result, ComplexValue x);

}  // namespace omega_zeta
