#include "omega_zeta/phi.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/kernels.hpp"
#include "omega_zeta/oracle.hpp"
#include "omega_zeta/parallel.hpp"

namespace omega_zeta {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTailCutoff = 1e-18;

void require_order(int m) {
  if (m < 2) throw DomainError("Phi_m requires m >= 2, got " + std::to_string(m));
}

void check_poles(int m, ComplexValue z, const UnityRoots& roots) {
  const long reach = static_cast<long>(std::floor(std::abs(z))) + 1;
  for (long n = 1; n <= reach; ++n) {
    for (const ComplexValue& w : roots.roots) {
      // omega^{-j} = conj(omega^j) runs over the same set.
      if (std::abs(z - static_cast<double>(n) * w) < kPhiPoleTolerance) {
        throw PoleError("z is within tolerance of the pole " + std::to_string(n) +
                        " * omega_" + std::to_string(m) + "^j");
      }
    }
  }
}

// sum_{k>=1} w^k / k * sum_{n>N} (n)^{-mk}; needs |w| < (N+1)^m.
struct LogTail {
  ComplexValue value;
  double last_term = 0.0;
};

LogTail log_product_tail(ComplexValue w, int m, long cutoff) {
  LogTail tail{{0.0, 0.0}, 0.0};
  ComplexValue power(1.0, 0.0);
  for (int k = 1; k <= 200; ++k) {
    power *= w;
    const double s = dirichlet_tail(m * k, cutoff);
    const ComplexValue term = power * (s / k);
    tail.value += term;
    tail.last_term = std::abs(term);
    if (tail.last_term < kTailCutoff) break;
  }
  return tail;
}

PhiValue truncated_product(int m, ComplexValue z, int cutoff) {
  if (cutoff < 1) throw DomainError("TruncatedProduct needs N >= 1");
  if (static_cast<double>(cutoff) < 2.0 * std::abs(z)) {
    throw DomainError("TruncatedProduct needs N >= 2|z|");
  }
  const ComplexValue w = ipow(z, m);
  const ComplexValue head = kernels::reciprocal_factor_product(w, 0.0, m, 1, cutoff);
  const LogTail tail = log_product_tail(w, m, cutoff);
  const ComplexValue value = head * std::exp(tail.value);
  const double estimate =
      std::abs(value) * (tail.last_term + 4.0 * kEps * static_cast<double>(cutoff));
  return {value, estimate, cutoff};
}

PhiValue gamma_product(int m, ComplexValue z, const UnityRoots& roots) {
  LogComplex product;
  double log_scale = 0.0;
  for (const ComplexValue& w : roots.roots) {
    const LogComplex g = log_gamma(1.0 - w * z);
    product *= g;
    log_scale += 4.0 + std::abs(g.log_mag()) + std::abs(g.arg());
  }
  const ComplexValue value = product.to_complex();
  return {value, std::abs(value) * kEps * log_scale, m};
}

PhiValue exp_zeta_series(int m, ComplexValue z, int max_k) {
  if (std::abs(z) > kExpZetaRadius) {
    throw DomainError("ExpZetaSeries needs |z| <= 0.95");
  }
  const ComplexValue w = ipow(z, m);
  const double abs_w = std::abs(w);
  const int cap = max_k > 0 ? max_k : 100000;
  ComplexValue sum(0.0, 0.0);
  ComplexValue power(1.0, 0.0);
  double abs_power = 1.0;
  double last = 0.0;
  int k = 0;
  while (k < cap) {
    ++k;
    power *= w;
    abs_power *= abs_w;
    const double coefficient = zeta_oracle(m * k) / k;
    sum += coefficient * power;
    last = coefficient * abs_power;
    if (last < kTailCutoff) break;
  }
  const ComplexValue value = std::exp(sum);
  const double estimate = std::abs(value) * (last + kEps * (4.0 + k + std::abs(sum)));
  return {value, estimate, k};
}

}  // namespace

std::string_view route_name(PhiRoute::Kind kind) {
  switch (kind) {
    case PhiRoute::Kind::TruncatedProduct:
      return "product";
    case PhiRoute::Kind::GammaProduct:
      return "gamma";
    case PhiRoute::Kind::ExpZetaSeries:
      return "expzeta";
  }
  return "gamma";
}

PhiValue evaluate_phi(int m, ComplexValue z, const PhiRoute& route) {
  require_order(m);
  const UnityRoots roots = roots_of_unity(m);
  check_poles(m, z, roots);
  if (z == ComplexValue(0.0, 0.0)) return {{1.0, 0.0}, 0.0, 0};
  switch (route.kind) {
    case PhiRoute::Kind::TruncatedProduct:
      return truncated_product(m, z, route.order);
    case PhiRoute::Kind::GammaProduct:
      return gamma_product(m, z, roots);
    case PhiRoute::Kind::ExpZetaSeries:
      return exp_zeta_series(m, z, route.order);
  }
  return gamma_product(m, z, roots);
}

ComplexValue phi(int m, ComplexValue z, const PhiRoute& route) {
  return evaluate_phi(m, z, route).value;
}

LambdaCoefficient lambda_coefficient(int m, long n, LambdaRoute route) {
  require_order(m);
  if (n < 1) throw DomainError("lambda_n requires n >= 1");
  LambdaCoefficient out;
  out.m = m;
  out.n = n;
  out.route = route;
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  const double nd = static_cast<double>(n);

  if (route.kind == LambdaRoute::Kind::GammaClosedForm) {
    if (m == 2) {
      // Gamma(1 - omega_2 n) = Gamma(1 + n) = n!, so the ratio is exactly 1.
      const double log_factorial = log_gamma(nd + 1.0).log_mag();
      out.log_abs = log_factorial - log_factorial;
      out.sign = static_cast<int>(parity);
      out.value = parity * std::exp(out.log_abs);
      return out;
    }
    const UnityRoots roots = roots_of_unity(m);
    LogComplex product;
    for (int j = 1; j < m; ++j) {
      product *= log_gamma(1.0 - roots.roots[static_cast<std::size_t>(j)] * nd);
    }
    product /= log_gamma(nd + 1.0);
    const double residue = std::sin(product.arg());
    if (std::abs(residue) > kLambdaResidueTolerance) {
      throw NumericalResidueError("lambda_" + std::to_string(n) + " for m = " +
                                  std::to_string(m) + " has relative imaginary part " +
                                  std::to_string(residue));
    }
    const double cosine = std::cos(product.arg());
    out.log_abs = product.log_mag() + std::log(std::abs(cosine));
    out.sign = static_cast<int>(parity) * (cosine < 0.0 ? -1 : 1);
    out.value = out.sign * std::exp(out.log_abs);
    return out;
  }

  if (route.cutoff < 4 * n) {
    throw DomainError("lambda product route needs N >= 4n");
  }
  const double md = static_cast<double>(m);
  double log_abs = -std::log(md);
  for (long s = 1; s <= route.cutoff; ++s) {
    if (s == n) continue;
    const double sd = static_cast<double>(s);
    if (s > n) {
      // s^m / (s^m - n^m) = 1 / (1 - (n/s)^m)
      log_abs -= std::log1p(-std::pow(nd / sd, md));
    } else {
      // |s^m / (s^m - n^m)| = (s/n)^m / (1 - (s/n)^m)
      const double ratio = sd / nd;
      log_abs += md * std::log(ratio) - std::log1p(-std::pow(ratio, md));
    }
  }
  // prod_{s>N} 1/(1 - n^m/s^m) = exp(sum_k n^{mk}/k sum_{s>N} s^{-mk})
  for (int k = 1; k <= 200; ++k) {
    const double term =
        std::exp(md * k * std::log(nd) + std::log(dirichlet_tail(m * k, route.cutoff))) / k;
    log_abs += term;
    if (term < kTailCutoff) break;
  }
  // n - 1 negative factors (s < n) and the leading -1/m: sign (-1)^n.
  out.log_abs = log_abs;
  out.sign = static_cast<int>(parity);
  out.value = parity * std::exp(log_abs);
  return out;
}

LambdaTable::LambdaTable(int m) : m_(m) { require_order(m); }

const LambdaCoefficient& LambdaTable::get(long n) {
  if (n < 1) throw DomainError("lambda_n requires n >= 1");
  const auto index = static_cast<std::size_t>(n - 1);
  if (cache_.size() <= index) cache_.resize(index + 1);
  if (!cache_[index]) cache_[index] = lambda_coefficient(m_, n, LambdaRoute::closed_form());
  return *cache_[index];
}

void LambdaTable::prefill(long count, int threads) {
  if (count < 1) return;
  if (cache_.size() < static_cast<std::size_t>(count)) cache_.resize(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
    if (!cache_[i]) {
      cache_[i] = lambda_coefficient(m_, static_cast<long>(i) + 1, LambdaRoute::closed_form());
    }
  });
}

PhiSeriesResult phi_pfd_series(int m, ComplexValue z, int cutoff) {
  LambdaTable table(m);
  return phi_pfd_series(table, z, cutoff);
}

PhiSeriesResult phi_pfd_series(LambdaTable& table, ComplexValue z, int cutoff) {
  const int m = table.m();
  if (cutoff < 1) throw DomainError("phi_pfd_series needs N >= 1");
  check_poles(m, z, roots_of_unity(m));
  const double md = static_cast<double>(m);
  const ComplexValue w = ipow(z, m);

  ComplexValue sum(0.0, 0.0);
  if (w != ComplexValue(0.0, 0.0)) {
    for (long n = 1; n <= cutoff; ++n) {
      const double nm = ipow(static_cast<double>(n), m);
      sum += md * table.get(n).value * w / (w - nm);
    }
  }

  const double abs_z = std::abs(z);
  const double abs_w = ipow(abs_z, m);
  double tail = 0.0;
  if (abs_w > 0.0) {
    const long explicit_end = std::max<long>(cutoff, static_cast<long>(std::ceil(2.0 * abs_z)));
    for (long n = cutoff + 1; n <= explicit_end; ++n) {
      tail += 1.0 / std::abs(ipow(static_cast<double>(n), m) - abs_w);
    }
    const double ratio = ipow(abs_z / static_cast<double>(explicit_end + 1), m);
    tail += dirichlet_tail(m, explicit_end) / (1.0 - ratio);
    tail *= md * abs_w;
  }
  return {1.0 + sum, tail};
}

}  // namespace omega_zeta
