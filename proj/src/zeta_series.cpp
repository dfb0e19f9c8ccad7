#include "omega_zeta/zeta_series.hpp"

#include <cmath>
#include <string>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/parallel.hpp"

namespace omega_zeta {
namespace {

SeriesTermTrace term_from_lambda(int m, long n, const LambdaCoefficient& lambda) {
  SeriesTermTrace t;
  t.n = n;
  const double nd = static_cast<double>(n);
  if (m == 2) {
    // lambda_n = (-1)^n exactly; n^2 is exact for every n we accept.
    t.sign = (n % 2 == 1) ? 1 : -1;
    t.value = t.sign * (2.0 / (nd * nd));
    t.log_mag = kLn2 - 2.0 * std::log(nd);
    return t;
  }
  t.sign = -lambda.sign;
  t.log_mag = std::log(static_cast<double>(m)) + lambda.log_abs - m * std::log(nd);
  t.value = t.sign * std::exp(t.log_mag);
  return t;
}

void require_order(int m) {
  if (m < 2) throw DomainError("zeta series requires m >= 2, got " + std::to_string(m));
}

}  // namespace

SeriesTermTrace zeta_term(int m, long n) {
  require_order(m);
  if (n < 1) throw DomainError("zeta_term requires n >= 1");
  if (m == 2) return term_from_lambda(m, n, {});
  return term_from_lambda(m, n, lambda_coefficient(m, n, LambdaRoute::closed_form()));
}

SeriesTermTrace zeta_term(LambdaTable& table, long n) {
  if (table.m() == 2) return zeta_term(2, n);
  return term_from_lambda(table.m(), n, table.get(n));
}

std::vector<SeriesTermTrace> zeta_terms(int m, long count, int threads) {
  require_order(m);
  std::vector<SeriesTermTrace> out(static_cast<std::size_t>(std::max<long>(count, 0)));
  parallel_for(out.size(), threads,
               [&](std::size_t i) { out[i] = zeta_term(m, static_cast<long>(i) + 1); });
  return out;
}

ConvergenceReport zeta_via_series(int m, const PrecisionConfig& config) {
  require_order(m);
  validate(config);
  std::vector<SeriesTermTrace> trace = zeta_terms(m, config.max_terms, config.threads);
  std::vector<double> values(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) values[i] = trace[i].value;
  ConvergenceReport report = sum_alternating(std::span<const double>(values), config.method);
  report.regime = "convergent";
  if (config.trace_enabled) {
    trace.resize(static_cast<std::size_t>(report.terms_used));
    report.trace = std::move(trace);
  }
  return report;
}

}  // namespace omega_zeta
