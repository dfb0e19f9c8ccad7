#include "omega_zeta/finite_pfd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "omega_zeta/errors.hpp"

namespace omega_zeta {

PfdResult pfd_coefficients(std::span<const ComplexValue> nodes) {
  if (nodes.empty()) throw DomainError("pfd_coefficients needs at least one node");
  const std::size_t n = nodes.size();
  PfdResult result;
  result.nodes.assign(nodes.begin(), nodes.end());
  result.coefficients.resize(n);

  double min_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    ComplexValue denominator(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const ComplexValue diff = nodes[j] - nodes[i];
      const double distance = std::abs(diff);
      if (distance <= kPfdNodeTolerance) {
        throw DegenerateNodesError("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                   " coincide within tolerance");
      }
      min_distance = std::min(min_distance, distance);
      denominator *= diff;
    }
    result.coefficients[i] = 1.0 / denominator;
  }

  if (n > 1) {
    double max_coefficient = 0.0;
    for (const ComplexValue& mu : result.coefficients) {
      max_coefficient = std::max(max_coefficient, std::abs(mu));
    }
    result.condition_number = max_coefficient * min_distance;
  }
  return result;
}

double pfd_residual(const PfdResult& result, ComplexValue x) {
  ComplexValue product(1.0, 0.0);
  ComplexValue sum(0.0, 0.0);
  for (std::size_t i = 0; i < result.nodes.size(); ++i) {
    const ComplexValue shifted = result.nodes[i] + x;
    if (std::abs(shifted) <= kPfdNodeTolerance) {
      throw PoleError("probe point coincides with -a_" + std::to_string(i));
    }
    product /= shifted;
    sum += result.coefficients[i] / shifted;
  }
  return std::abs(product - sum);
}

}  // namespace omega_zeta
