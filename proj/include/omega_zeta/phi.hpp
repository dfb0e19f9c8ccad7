#pragma once

// Phi_m(z) = prod_{n>=1} n^m / (n^m - z^m), evaluated three independent ways,
// and the partial-fraction coefficients lambda_n of Phi_m(z)/z at z = n.

#include <optional>
#include <string_view>
#include <vector>

#include "omega_zeta/complex_special.hpp"

namespace omega_zeta {

inline constexpr double kPhiPoleTolerance = 1e-8;
inline constexpr double kExpZetaRadius = 0.95;
inline constexpr double kLambdaResidueTolerance = 1e-9;

struct PhiRoute {
  enum class Kind { TruncatedProduct, GammaProduct, ExpZetaSeries };

  Kind kind = Kind::GammaProduct;
  // Factor count N for TruncatedProduct; cap on k for ExpZetaSeries (0 = none).
  int order = 0;

  static PhiRoute truncated_product(int cutoff = 1000) { return {Kind::TruncatedProduct, cutoff}; }
  static PhiRoute gamma_product() { return {Kind::GammaProduct, 0}; }
  static PhiRoute exp_zeta_series(int max_k = 0) { return {Kind::ExpZetaSeries, max_k}; }
};

// "product", "gamma", "expzeta"
std::string_view route_name(PhiRoute::Kind kind);

struct PhiValue {
  ComplexValue value;
  double error_estimate = 0.0;
  int terms_used = 0;
};

// TruncatedProduct  prod_{n<=N} n^m/(n^m - z^m) times exp(sum_k z^{mk}/k sum_{n>N} n^{-mk});
//                   needs N >= 2|z|.
// GammaProduct      prod_{j<m} Gamma(1 - omega_m^j z) in log space.
// ExpZetaSeries     exp(sum_k zeta(mk)/k z^{mk}) with oracle zeta values; |z| <= 0.95,
//                   truncated once zeta(mk)/k |z|^{mk} < 1e-18.
// PoleError within kPhiPoleTolerance of n omega_m^{-j}; DomainError for m < 2
// or a route used outside its range.
PhiValue evaluate_phi(int m, ComplexValue z, const PhiRoute& route);
ComplexValue phi(int m, ComplexValue z, const PhiRoute& route);

struct LambdaRoute {
  enum class Kind { Product, GammaClosedForm };

  Kind kind = Kind::GammaClosedForm;
  int cutoff = 0;  // Product only; must be >= 4n

  static LambdaRoute product(int cutoff) { return {Kind::Product, cutoff}; }
  static LambdaRoute closed_form() { return {Kind::GammaClosedForm, 0}; }
};

struct LambdaCoefficient {
  int m = 0;
  long n = 0;
  double value = 0.0;    // 0 when |lambda_n| underflows
  double log_abs = 0.0;  // log |lambda_n|, always finite
  int sign = 1;          // (-1)^n by construction, kept explicit for underflowed values
  LambdaRoute route;
};

// Product:          -(1/m) prod_{s<=N, s!=n} s^m/(s^m - n^m), with the same
//                   exp-tail correction as the truncated Phi product.
// GammaClosedForm:  (-1)^n / n! prod_{j=1}^{m-1} Gamma(1 - omega_m^j n). For
//                   m = 2 this is exactly (-1)^n. Throws NumericalResidueError
//                   when the product's relative imaginary part exceeds 1e-9.
LambdaCoefficient lambda_coefficient(int m, long n, LambdaRoute route);

// Closed-form lambda_n memoized for one m within a single evaluation. Not
// safe for concurrent get(); prefill() may use several threads because each
// slot is written by exactly one worker.
class LambdaTable {
 public:
  explicit LambdaTable(int m);

  int m() const { return m_; }
  const LambdaCoefficient& get(long n);
  void prefill(long count, int threads);

 private:
  int m_;
  std::vector<std::optional<LambdaCoefficient>> cache_;
};

struct PhiSeriesResult {
  ComplexValue value;
  // m |z|^m sum_{n>N} 1/(n^m - |z|^m), from |lambda_n| <= 1.
  double tail_bound = 0.0;
};

// 1 + sum_{n<=N} m lambda_n z^m / (z^m - n^m).
PhiSeriesResult phi_pfd_series(int m, ComplexValue z, int cutoff);
PhiSeriesResult phi_pfd_series(LambdaTable& table, ComplexValue z, int cutoff);

}  // namespace omega_zeta
