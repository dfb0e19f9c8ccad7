#include "omega_zeta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/finite_pfd.hpp"
#include "omega_zeta/gamma_pfd.hpp"
#include "omega_zeta/oracle.hpp"
#include "omega_zeta/phi.hpp"
#include "omega_zeta/zeta3_variants.hpp"
#include "omega_zeta/zeta_series.hpp"

namespace omega_zeta {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrt3 = 1.73205080756887729352744634150587237;
constexpr std::uint64_t kSeed = 0x6f6d6567617a6574ULL;

double rel(ComplexValue value, ComplexValue reference) {
  const double scale = std::abs(reference);
  return scale == 0.0 ? std::abs(value) : std::abs(value - reference) / scale;
}

class Recorder {
 public:
  Recorder(std::string suite, std::optional<double> tolerance, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), tolerance_(tolerance), out_(out) {}

  // Runs body; an escaping exception fails the check with its message.
  void check(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult result;
    result.suite = suite_;
    result.name = name;
    result.measured = kNaN;
    result.threshold = kNaN;
    try {
      body(result);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("unexpected error: ") + e.what();
    }
    out_.push_back(std::move(result));
  }

  // measured <= threshold, with threshold relaxed by the tolerance floor.
  void bound(CheckResult& r, double measured, double threshold) const {
    if (tolerance_) threshold = std::max(threshold, *tolerance_);
    r.measured = measured;
    r.threshold = threshold;
    r.passed = measured <= threshold;
  }

 private:
  std::string suite_;
  std::optional<double> tolerance_;
  std::vector<CheckResult>& out_;
};

template <class Error, class Fn>
bool throws(Fn&& fn) {
  try {
    fn();
  } catch (const Error&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

// ---------------------------------------------------------------- oracle

void oracle_suite(Recorder& rec) {
  const double pi2 = kPi * kPi;
  rec.check("closed-forms-even-s", [&](CheckResult& r) {
    const double forms[] = {pi2 / 6.0, pi2 * pi2 / 90.0, pi2 * pi2 * pi2 / 945.0,
                            pi2 * pi2 * pi2 * pi2 / 9450.0};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, rel(zeta_oracle(2 * i + 2), forms[i]));
    rec.bound(r, worst, 1e-13);
  });
  rec.check("stored-zeta3-constant", [&](CheckResult& r) {
    rec.bound(r, std::abs(known_constant("zeta3") - zeta_oracle(3)), 1e-13);
  });
  rec.check("zeta20-minus-one", [&](CheckResult& r) {
    rec.bound(r, std::abs((zeta_oracle(20) - 1.0) / std::ldexp(1.0, -20) - 1.0), 0.01);
  });
  rec.check("monotone-decrease-to-one", [&](CheckResult& r) {
    bool ok = true;
    for (int s = 2; s < 40; ++s) ok = ok && zeta_oracle(s + 1) <= zeta_oracle(s) && zeta_oracle(s) > 1.0;
    r.passed = ok;
  });
  rec.check("cutoff-20-vs-40", [&](CheckResult& r) {
    double worst = 0.0;
    for (int s = 2; s <= 12; ++s) {
      const double a = zeta_euler_maclaurin(s, 20, 6).value;
      const double b = zeta_euler_maclaurin(s, 40, 6).value;
      worst = std::max(worst, std::abs(a - b) / b);
    }
    rec.bound(r, worst, 1e-13);
  });
  rec.check("unknown-constant-rejected", [&](CheckResult& r) {
    r.passed = throws<UnknownConstantError>([] { known_constant("zeta5"); });
  });
}

// ------------------------------------------------------------------- pfd

ComplexValue random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double t = 2.0 * kPi * unit(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

double min_distance(const std::vector<ComplexValue>& points, ComplexValue p) {
  double best = std::numeric_limits<double>::infinity();
  for (const ComplexValue& q : points) best = std::min(best, std::abs(p - q));
  return best;
}

struct RandomPfdStats {
  double worst_residual = 0.0;  // residual / |lhs|
  double worst_sum = 0.0;       // |sum mu| / max |mu|
};

// 100 node sets of size 2..10 in |a| <= 10 with separation >= 0.1, each
// probed at 100 points x with -x in the same disk and >= 0.1 from every node.
RandomPfdStats random_pfd_stats() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> size(2, 10);
  RandomPfdStats stats;
  for (int set = 0; set < 100; ++set) {
    std::vector<ComplexValue> nodes;
    const int n = size(rng);
    while (static_cast<int>(nodes.size()) < n) {
      const ComplexValue c = random_in_disk(rng, 10.0);
      if (min_distance(nodes, c) >= 0.1) nodes.push_back(c);
    }
    const PfdResult pfd = pfd_coefficients(nodes);
    ComplexValue sum(0.0, 0.0);
    double largest = 0.0;
    for (const ComplexValue& mu : pfd.coefficients) {
      sum += mu;
      largest = std::max(largest, std::abs(mu));
    }
    stats.worst_sum = std::max(stats.worst_sum, std::abs(sum) / largest);
    for (int probe = 0; probe < 100;) {
      const ComplexValue x = -random_in_disk(rng, 10.0);
      if (min_distance(nodes, -x) < 0.1) continue;
      ++probe;
      ComplexValue lhs(1.0, 0.0);
      for (const ComplexValue& a : nodes) lhs /= (a + x);
      stats.worst_residual = std::max(stats.worst_residual, pfd_residual(pfd, x) / std::abs(lhs));
    }
  }
  return stats;
}

void pfd_suite(Recorder& rec) {
  rec.check("two-and-three-node-examples", [&](CheckResult& r) {
    const ComplexValue two[] = {1.0, 2.0};
    const ComplexValue three[] = {0.0, 1.0, 3.0};
    const PfdResult a = pfd_coefficients(two);
    const PfdResult b = pfd_coefficients(three);
    double worst = std::max(std::abs(a.coefficients[0] - 1.0), std::abs(a.coefficients[1] + 1.0));
    worst = std::max(worst, std::abs(b.coefficients[0] - 1.0 / 3.0));
    worst = std::max(worst, std::abs(b.coefficients[1] + 0.5));
    worst = std::max(worst, std::abs(b.coefficients[2] - 1.0 / 6.0));
    worst = std::max(worst, pfd_residual(b, 1.0));
    rec.bound(r, worst, 1e-14);
  });
  rec.check("random-node-sets", [&](CheckResult& r) {
    const RandomPfdStats stats = random_pfd_stats();
    rec.bound(r, stats.worst_residual, 1e-10);
  });
  rec.check("random-node-coefficient-sum", [&](CheckResult& r) {
    const RandomPfdStats stats = random_pfd_stats();
    rec.bound(r, stats.worst_sum, 1e-11);
  });
  rec.check("permutation-equivariance", [&](CheckResult& r) {
    std::vector<ComplexValue> nodes = {{1.0, 2.0}, {-3.0, 0.5}, {0.25, -1.0}, {4.0, 4.0}};
    const PfdResult a = pfd_coefficients(nodes);
    std::vector<ComplexValue> swapped = {nodes[2], nodes[0], nodes[3], nodes[1]};
    const PfdResult b = pfd_coefficients(swapped);
    const double worst = std::max({rel(b.coefficients[0], a.coefficients[2]),
                                   rel(b.coefficients[1], a.coefficients[0]),
                                   rel(b.coefficients[2], a.coefficients[3]),
                                   rel(b.coefficients[3], a.coefficients[1])});
    rec.bound(r, worst, 1e-14);
  });
  rec.check("degenerate-nodes-rejected", [&](CheckResult& r) {
    r.passed = throws<DegenerateNodesError>([] {
      const ComplexValue nodes[] = {1.0, 1.0 + 1e-12};
      pfd_coefficients(nodes);
    });
  });
}

// ------------------------------------------------------------------- phi

std::vector<ComplexValue> phi_grid() {
  std::vector<ComplexValue> grid;
  const double radii[] = {0.15, 0.35, 0.55, 0.75, 0.9};
  const double angles[] = {0.1, 0.7, 1.9, 2.8};
  for (double r : radii) {
    for (double t : angles) grid.push_back(std::polar(r, t));
  }
  return grid;
}

void phi_suite(Recorder& rec) {
  rec.check("route-triangle", [&](CheckResult& r) {
    double worst = 0.0;
    for (int m = 2; m <= 5; ++m) {
      for (const ComplexValue& z : phi_grid()) {
        const ComplexValue p = phi(m, z, PhiRoute::truncated_product(1000));
        const ComplexValue g = phi(m, z, PhiRoute::gamma_product());
        const ComplexValue e = phi(m, z, PhiRoute::exp_zeta_series());
        worst = std::max({worst, rel(p, g), rel(e, g), rel(p, e)});
      }
    }
    rec.bound(r, worst, 1e-9);
  });
  rec.check("m2-equals-pi-z-csc-pi-z", [&](CheckResult& r) {
    const ComplexValue zs[] = {0.1, 0.3, {0.5, 0.2}, {0.0, 0.8}};
    double worst = 0.0;
    for (const ComplexValue& z : zs) {
      const ComplexValue closed = kPi * z / std::sin(kPi * z);
      worst = std::max(worst, rel(phi(2, z, PhiRoute::gamma_product()), closed));
    }
    rec.bound(r, worst, 1e-11);
  });
  rec.check("phi-at-zero-is-one", [&](CheckResult& r) {
    bool ok = true;
    for (int m = 2; m <= 6; ++m) {
      ok = ok && phi(m, 0.0, PhiRoute::truncated_product(10)) == ComplexValue(1.0, 0.0);
      ok = ok && phi(m, 0.0, PhiRoute::gamma_product()) == ComplexValue(1.0, 0.0);
      ok = ok && phi(m, 0.0, PhiRoute::exp_zeta_series()) == ComplexValue(1.0, 0.0);
    }
    r.passed = ok;
  });
  rec.check("rotation-symmetry", [&](CheckResult& r) {
    double worst = 0.0;
    for (int m = 3; m <= 5; ++m) {
      const ComplexValue w = roots_of_unity(m).roots[1];
      for (const ComplexValue& z : phi_grid()) {
        worst = std::max(worst, rel(phi(m, w * z, PhiRoute::gamma_product()),
                                    phi(m, z, PhiRoute::gamma_product())));
      }
    }
    rec.bound(r, worst, 1e-11);
  });
  rec.check("lambda-sign-and-bound", [&](CheckResult& r) {
    bool ok = true;
    for (int m = 3; m <= 5; ++m) {
      for (long n = 1; n <= 30; ++n) {
        const LambdaCoefficient c = lambda_coefficient(m, n, LambdaRoute::closed_form());
        ok = ok && c.sign == ((n % 2 == 0) ? 1 : -1) && c.log_abs < 0.0 && std::abs(c.value) < 1.0;
      }
    }
    r.passed = ok;
  });
  rec.check("lambda-routes-agree", [&](CheckResult& r) {
    double worst = 0.0;
    for (int m = 2; m <= 5; ++m) {
      for (long n = 1; n <= 15; ++n) {
        const double g = lambda_coefficient(m, n, LambdaRoute::closed_form()).value;
        const double p =
            lambda_coefficient(m, n, LambdaRoute::product(static_cast<int>(8 * n))).value;
        worst = std::max(worst, std::abs(p - g) / std::abs(g));
      }
    }
    rec.bound(r, worst, 1e-6);
  });
  rec.check("lambda-m2-exact", [&](CheckResult& r) {
    double worst = 0.0;
    for (long n = 1; n <= 100; ++n) {
      const double v = lambda_coefficient(2, n, LambdaRoute::closed_form()).value;
      worst = std::max(worst, std::abs(v - ((n % 2 == 0) ? 1.0 : -1.0)));
    }
    rec.bound(r, worst, 1e-14);
  });
  rec.check("partial-fraction-series", [&](CheckResult& r) {
    const PhiSeriesResult half = phi_pfd_series(2, 0.5, 200);
    const PhiSeriesResult third = phi_pfd_series(3, 0.3, 100);
    const ComplexValue g = phi(3, 0.3, PhiRoute::gamma_product());
    const double miss = std::abs(third.value - g) - third.tail_bound;
    rec.bound(r, std::max(std::abs(half.value - kPi / 2.0), std::max(miss, 0.0)), 1e-5);
  });
  rec.check("pole-rejected", [&](CheckResult& r) {
    r.passed = throws<PoleError>([] { phi(3, roots_of_unity(3).roots[1] * 2.0, PhiRoute::gamma_product()); }) &&
               throws<DomainError>([] { phi(3, 0.97, PhiRoute::exp_zeta_series()); });
  });
}

// ------------------------------------------------------------------ zeta

double direct_zeta_term(int m, long n) {
  const UnityRoots roots = roots_of_unity(m);
  const double nd = static_cast<double>(n);
  ComplexValue product(1.0, 0.0);
  for (int j = 1; j < m; ++j) product *= gamma(1.0 - roots.roots[static_cast<std::size_t>(j)] * nd);
  const double parity = (n % 2 == 1) ? 1.0 : -1.0;
  return parity * m * product.real() / (std::tgamma(nd + 1.0) * std::pow(nd, m));
}

void zeta_suite(Recorder& rec, int threads) {
  PrecisionConfig cvz;
  cvz.threads = threads;
  rec.check("zeta2-32-terms", [&](CheckResult& r) {
    cvz.max_terms = 32;
    rec.bound(r, std::abs(zeta_via_series(2, cvz).value - kPi * kPi / 6.0), 1e-12);
  });
  rec.check("zeta3-64-terms", [&](CheckResult& r) {
    cvz.max_terms = 64;
    rec.bound(r, std::abs(zeta_via_series(3, cvz).value - zeta_oracle(3)), 1e-9);
  });
  rec.check("zeta4-5-6-64-terms", [&](CheckResult& r) {
    cvz.max_terms = 64;
    double worst = 0.0;
    for (int m = 4; m <= 6; ++m) {
      worst = std::max(worst, std::abs(zeta_via_series(m, cvz).value - zeta_oracle(m)));
    }
    rec.bound(r, worst, 1e-8);
  });
  rec.check("m2-term-collapse", [&](CheckResult& r) {
    double worst = 0.0;
    for (long n = 1; n <= 100; ++n) {
      const double expected = ((n % 2 == 1) ? 2.0 : -2.0) / static_cast<double>(n * n);
      worst = std::max(worst, std::abs(zeta_term(2, n).value - expected) / std::abs(expected));
    }
    rec.bound(r, worst, 1e-14);
  });
  rec.check("term-bound-and-alternation", [&](CheckResult& r) {
    bool ok = true;
    for (int m = 2; m <= 6; ++m) {
      for (long n = 1; n <= 100; ++n) {
        const SeriesTermTrace t = zeta_term(m, n);
        ok = ok && t.sign == ((n % 2 == 1) ? 1 : -1);
        ok = ok && t.log_mag <= std::log(static_cast<double>(m)) - m * std::log(static_cast<double>(n)) + 1e-12;
      }
    }
    r.passed = ok;
  });
  rec.check("monotone-improvement", [&](CheckResult& r) {
    bool ok = true;
    for (int m = 3; m <= 5; ++m) {
      const double target = zeta_oracle(m);
      const double floor = 8.0 * kEps * target;
      double previous = std::numeric_limits<double>::infinity();
      for (int terms : {8, 16, 32, 64}) {
        cvz.max_terms = terms;
        const double err = std::abs(zeta_via_series(m, cvz).value - target);
        ok = ok && err <= std::max(previous, floor);
        previous = err;
      }
    }
    r.passed = ok;
  });
  rec.check("log-space-robustness", [&](CheckResult& r) {
    double worst = 0.0;
    bool finite = true;
    for (int m = 2; m <= 8; ++m) {
      const std::vector<SeriesTermTrace> terms = zeta_terms(m, 200, threads);
      for (const SeriesTermTrace& t : terms) {
        finite = finite && std::isfinite(t.log_mag) && std::isfinite(t.value);
        if (t.n <= 20) {
          const double direct = direct_zeta_term(m, t.n);
          if (std::isfinite(direct)) worst = std::max(worst, std::abs(t.value - direct) / std::abs(direct));
        }
      }
    }
    rec.bound(r, finite ? worst : std::numeric_limits<double>::infinity(), 1e-10);
  });
  rec.check("order-below-two-rejected", [&](CheckResult& r) {
    r.passed = throws<DomainError>([&] { zeta_via_series(1, cvz); });
  });
}

// ----------------------------------------------------------------- gamma

void gamma_suite(Recorder& rec) {
  const ComplexValue zs[] = {0.1, 0.3, 0.45, {0.0, 0.2}};
  rec.check("raw-regime-within-5x-estimate", [&](CheckResult& r) {
    double worst = 0.0;
    for (double a : {0.5, 0.8, 1.0, 1.25}) {
      for (const ComplexValue& z : zs) {
        const ConvergenceReport rep =
            gamma_pfd_series(a, z, 2000, AccelerationMethod::NoAcceleration);
        const double miss = std::abs(rep.complex_value() - gamma_pair(a, z));
        worst = std::max(worst, miss / (5.0 * rep.error_estimate));
      }
    }
    r.measured = worst;
    r.threshold = 1.0;
    r.passed = worst <= 1.0;
  });
  rec.check("regularized-regime", [&](CheckResult& r) {
    double worst = 0.0;
    for (double a : {1.5, 2.0, 3.0}) {
      for (const ComplexValue& z : zs) {
        const ConvergenceReport rep = gamma_pfd_series(a, z, 64, AccelerationMethod::EulerTransform);
        worst = std::max(worst, rel(rep.complex_value(), gamma_pair(a, z)));
      }
    }
    rec.bound(r, worst, 1e-6);
  });
  rec.check("divergence-detected", [&](CheckResult& r) {
    r.passed = throws<DivergenceError>(
        [] { gamma_pfd_series(3.0, 0.4, 64, AccelerationMethod::NoAcceleration); });
  });
  rec.check("evenness-bit-identical", [&](CheckResult& r) {
    bool ok = true;
    for (double a : {0.5, 1.25, 3.0}) {
      for (const ComplexValue& z : {ComplexValue(0.3, 0.1), ComplexValue(0.0, 0.2), ComplexValue(0.45, 0.0)}) {
        const ConvergenceReport p = gamma_pfd_series(a, z, 64, std::nullopt);
        const ConvergenceReport q = gamma_pfd_series(a, -z, 64, std::nullopt);
        ok = ok && p.value == q.value && p.value_im == q.value_im;
      }
    }
    r.passed = ok;
  });
  rec.check("inverse-square-vs-trigamma", [&](CheckResult& r) {
    double worst = 0.0;
    for (double q : {0.0, 0.5, 1.0, 2.5}) {
      const ConvergenceReport rep = inverse_square_series(q, 64, AccelerationMethod::EulerTransform);
      worst = std::max(worst, std::abs(rep.value - trigamma(q + 1.0)));
    }
    rec.bound(r, worst, 1e-6);
  });
  rec.check("inverse-square-raw-collapse", [&](CheckResult& r) {
    // q = 0 collapses to 2 sum (-1)^(n-1) / n^2; the raw tail is ~1/N^2.
    const ConvergenceReport raw = inverse_square_series(0.0, 1000, AccelerationMethod::NoAcceleration);
    rec.bound(r, std::abs(raw.value - kPi * kPi / 6.0), 1e-5);
  });
  rec.check("product-form", [&](CheckResult& r) {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.5}) {
      const double ga2 = std::norm(gamma(ComplexValue(a, 0.0)));
      for (double scale : {0.2, 0.5, 1.0}) {
        for (double angle : {0.0, kPi / 4.0, kPi / 2.0}) {
          const ComplexValue z = std::polar(0.9 * a * scale, angle);
          worst = std::max(worst, rel(modulus_product(a, z, 1000), gamma_pair(a, z) / ga2));
        }
      }
    }
    rec.bound(r, worst, 1e-8);
  });
  rec.check("summation-identity", [&](CheckResult& r) {
    const IdentityLimits shifted = summation_identity_limits(shifted_sequence(1.3), 10000, 64);
    const IdentityLimits integer = summation_identity_limits(integer_sequence(), 10000, 64);
    const double worst = std::max({std::abs(shifted.lhs - trigamma(1.3)),
                                   std::abs(shifted.rhs.value - trigamma(1.3)),
                                   std::abs(integer.lhs - kPi * kPi / 6.0),
                                   std::abs(integer.rhs.value - kPi * kPi / 6.0)});
    rec.bound(r, worst, 1e-6);
  });
}

// ----------------------------------------------------------------- zeta3

double direct_sine_term(long n) {
  const double nd = static_cast<double>(n);
  const ComplexValue w2 = roots_of_unity(3).roots[2];
  ComplexValue product = 3.0 * kPi * w2;
  for (long k = 1; k <= n; ++k) product *= static_cast<double>(k) + w2 * nd;
  const ComplexValue s = std::sin(kPi * w2 * nd);
  const double parity = (n % 2 == 1) ? 1.0 : -1.0;
  return parity * (product / (std::tgamma(nd + 1.0) * nd * nd * s)).real();
}

double direct_hyperbolic_term(long n) {
  if (n % 2 == 1) {
    const long d = (n + 1) / 2;
    const double odd = static_cast<double>(n);
    double p = 1.0;
    for (long k = 1; k <= d; ++k) {
      const double h = static_cast<double>(k) - 0.5;
      p *= h * h + 0.75 * odd * odd;
    }
    return 3.0 * kPi * p / (std::tgamma(odd + 1.0) * odd * odd * odd * std::cosh(kSqrt3 * kPi * odd / 2.0));
  }
  const long d = n / 2;
  const double dd = static_cast<double>(d);
  double q = 1.0;
  for (long k = 1; k <= d; ++k) q *= static_cast<double>(k * k) + 3.0 * dd * dd;
  return -3.0 * kSqrt3 * kPi * q / (8.0 * std::sinh(kSqrt3 * kPi * dd) * std::tgamma(2.0 * dd + 1.0) * dd * dd);
}

void zeta3_suite(Recorder& rec, int threads) {
  const double target = zeta_oracle(3);
  PrecisionConfig plain;
  plain.method = AccelerationMethod::NoAcceleration;
  plain.threads = threads;

  rec.check("hyperbolic-12-terms", [&](CheckResult& r) {
    plain.max_terms = 12;
    rec.bound(r, std::abs(zeta3_series(Zeta3Variant::HyperbolicForm, plain).value - target), 1e-9);
  });
  rec.check("sine-terms-match-series-terms", [&](CheckResult& r) {
    double worst = 0.0;
    for (long n = 1; n <= 20; ++n) {
      const double reference = zeta_term(3, n).value;
      worst = std::max(worst, std::abs(sine_form_term(n).value - reference) / std::abs(reference));
    }
    rec.bound(r, worst, 1e-9);
  });
  rec.check("hyperbolic-terms-match-series-terms", [&](CheckResult& r) {
    double worst = 0.0;
    for (long n = 1; n <= 20; ++n) {
      const double reference = zeta_term(3, n).value;
      worst = std::max(worst, std::abs(hyperbolic_term(n).value - reference) / std::abs(reference));
    }
    rec.bound(r, worst, 1e-9);
  });
  rec.check("gamma-pair-closed-forms", [&](CheckResult& r) {
    double worst = 0.0;
    for (long d = 1; d <= 15; ++d) {
      const double dd = static_cast<double>(d);
      const ComplexValue even = gamma_pair(1.0 + dd, ComplexValue(0.0, kSqrt3 * dd));
      const double even_closed =
          std::exp(std::log(kSqrt3 * kPi * dd) + q_poly(d) - log_sinh(kSqrt3 * kPi * dd));
      const double odd_arg = kSqrt3 * (2.0 * dd - 1.0) / 2.0;
      const ComplexValue odd = gamma_pair(0.5 + dd, ComplexValue(0.0, odd_arg));
      const double odd_closed = std::exp(std::log(kPi) + p_poly(d) - log_cosh(kPi * odd_arg));
      worst = std::max({worst, rel(even, even_closed), rel(odd, odd_closed)});
    }
    rec.bound(r, worst, 1e-9);
  });
  rec.check("sine-40-terms", [&](CheckResult& r) {
    plain.max_terms = 40;
    rec.bound(r, std::abs(zeta3_series(Zeta3Variant::SineForm, plain).value - target), 1e-6);
  });
  rec.check("beta-40-terms", [&](CheckResult& r) {
    plain.max_terms = 40;
    rec.bound(r, std::abs(zeta3_series(Zeta3Variant::BetaForm, plain).value - target), 1e-5);
  });
  rec.check("beta-constant-small-n", [&](CheckResult& r) {
    // All three inner series converge classically for n <= 3.
    double worst = 0.0;
    for (long n = 1; n <= 3; ++n) {
      const double reference = zeta_term(3, n).value;
      const BetaOuterTerm t = beta_outer_term(n, 96, AccelerationMethod::EulerTransform);
      worst = std::max(worst, std::abs(t.value - reference) / std::abs(reference));
    }
    rec.bound(r, worst, 1e-9);
  });
  rec.check("beta-unregularized-rejected", [&](CheckResult& r) {
    r.passed = throws<DivergenceError>(
        [] { beta_inner_sum(4, 96, AccelerationMethod::NoAcceleration); });
  });
  rec.check("cross-variant-agreement", [&](CheckResult& r) {
    double worst = 0.0;
    PrecisionConfig config = plain;
    const std::pair<Zeta3Variant, int> runs[] = {{Zeta3Variant::SineForm, 40},
                                                  {Zeta3Variant::HyperbolicForm, 12},
                                                  {Zeta3Variant::BetaForm, 40}};
    for (const auto& [variant, terms] : runs) {
      config.max_terms = terms;
      const ConvergenceReport rep = zeta3_series(variant, config);
      worst = std::max(worst, std::abs(rep.value - target) / (5.0 * rep.error_estimate));
    }
    PrecisionConfig accelerated;
    accelerated.max_terms = 64;
    accelerated.threads = threads;
    const ConvergenceReport series = zeta_via_series(3, accelerated);
    worst = std::max(worst, std::abs(series.value - target) / (5.0 * series.error_estimate));
    r.measured = worst;
    r.threshold = 1.0;
    r.passed = worst <= 1.0;
  });
  rec.check("finite-terms-to-200", [&](CheckResult& r) {
    double worst = 0.0;
    bool finite = true;
    for (long n = 1; n <= 200; ++n) {
      const SeriesTermTrace s = sine_form_term(n);
      const SeriesTermTrace h = hyperbolic_term(n);
      const SeriesTermTrace b = beta_first_term(n);
      finite = finite && std::isfinite(s.log_mag) && std::isfinite(h.log_mag) &&
               std::isfinite(b.log_mag) && std::isfinite(s.value) && std::isfinite(h.value);
      if (n <= 20) {
        worst = std::max(worst, std::abs(s.value - direct_sine_term(n)) / std::abs(s.value));
        worst = std::max(worst, std::abs(h.value - direct_hyperbolic_term(n)) / std::abs(h.value));
      }
    }
    rec.bound(r, finite ? worst : std::numeric_limits<double>::infinity(), 1e-10);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pfd", "phi", "zeta", "gamma", "zeta3", "oracle"};
  return names;
}

std::vector<CheckResult> run_verify(std::string_view suite, std::optional<double> tolerance,
                                    int threads) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  }
  if (tolerance && !(*tolerance > 0.0)) throw DomainError("tolerance must be > 0");
  std::vector<CheckResult> out;
  for (const std::string& name : names) {
    if (suite != "all" && suite != name) continue;
    Recorder rec(name, tolerance, out);
    if (name == "pfd") pfd_suite(rec);
    if (name == "phi") phi_suite(rec);
    if (name == "zeta") zeta_suite(rec, threads);
    if (name == "gamma") gamma_suite(rec);
    if (name == "zeta3") zeta3_suite(rec, threads);
    if (name == "oracle") oracle_suite(rec);
  }
  return out;
}

}  // namespace omega_zeta
