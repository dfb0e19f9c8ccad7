#pragma once

// zeta(m) = sum_{n>=1} m (-1)^{n-1} prod_{j=1}^{m-1} Gamma(1 - omega_m^j n) / (n! n^m)
//         = sum_{n>=1} -m lambda_n / n^m.

#include <vector>

#include "omega_zeta/acceleration.hpp"
#include "omega_zeta/oracle.hpp"
#include "omega_zeta/phi.hpp"

namespace omega_zeta {

// The n-th summand in log space. For m = 2 the value is 2 (-1)^{n-1} / n^2
// computed directly. Propagates NumericalResidueError from lambda_n.
SeriesTermTrace zeta_term(int m, long n);
SeriesTermTrace zeta_term(LambdaTable& table, long n);

// Summands n = 1..count, evaluated on `threads` workers.
std::vector<SeriesTermTrace> zeta_terms(int m, long count, int threads = 1);

// Sums config.max_terms summands with config.method. The trace is attached
// when config.trace_enabled. DomainError for m < 2.
ConvergenceReport zeta_via_series(int m, const PrecisionConfig& config);

}  // namespace omega_zeta
