#include "omega_zeta/oracle.hpp"

#include <array>
#include <cmath>
#include <string>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/kernels.hpp"

namespace omega_zeta {
namespace {

// B_2j / (2j)! for j = 1..7; the seventh entry only feeds the remainder bound.
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
    (7.0 / 6.0) / 87178291200.0,
};

constexpr double kDirectCutoff = 20.0;

struct Tail {
  double value;
  double remainder;
};

// sum_{i>=0} (q+i)^-s by Euler-Maclaurin at q (q should be >= ~20).
Tail euler_maclaurin_tail(int s, double q, int corrections) {
  const double sd = static_cast<double>(s);
  const double log_q = std::log(q);
  double value = std::exp((1.0 - sd) * log_q) / (sd - 1.0) + 0.5 * std::exp(-sd * log_q);
  // rising = (s)_{2j-1}, computed as a log to survive large s.
  double log_rising = std::log(sd);
  double correction = 0.0;
  for (int j = 1; j <= corrections + 1; ++j) {
    const double exponent = -sd - 2.0 * j + 1.0;
    correction = kBernoulliOverFactorial[static_cast<std::size_t>(j - 1)] *
                 std::exp(log_rising + exponent * log_q);
    if (j <= corrections) value += correction;
    log_rising += std::log(sd + 2.0 * j - 1.0) + std::log(sd + 2.0 * j);
  }
  return {value, std::abs(correction)};
}

}  // namespace

void validate(const PrecisionConfig& config) {
  if (config.max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (!(config.target_abs_error > 0.0)) throw DomainError("target_abs_error must be > 0");
  if (config.inner_terms < 1) throw DomainError("inner_terms must be >= 1");
}

EulerMaclaurinResult zeta_euler_maclaurin(int s, int cutoff, int corrections) {
  if (s < 2) throw DomainError("zeta oracle requires s >= 2, got " + std::to_string(s));
  if (cutoff < 2) throw DomainError("Euler-Maclaurin cutoff must be >= 2");
  if (corrections < 1 || corrections > 6) throw DomainError("corrections must be in 1..6");
  const double head = kernels::inverse_power_sum(0.0, s, 1, cutoff - 1);
  const Tail tail = euler_maclaurin_tail(s, static_cast<double>(cutoff), corrections);
  return {head + tail.value, tail.remainder};
}

double zeta_oracle(int s) {
  return zeta_euler_maclaurin(s, 20, 6).value;
}

double power_tail(int s, double q) {
  if (s < 2) throw DomainError("power_tail requires s >= 2");
  if (!(q > 0.0)) throw DomainError("power_tail requires q > 0");
  long direct = 0;
  if (q < kDirectCutoff) direct = static_cast<long>(std::ceil(kDirectCutoff - q));
  const double head = direct > 0 ? kernels::inverse_power_sum(q, s, 0, direct - 1) : 0.0;
  return head + euler_maclaurin_tail(s, q + static_cast<double>(direct), 6).value;
}

double dirichlet_tail(int s, long cutoff) {
  return power_tail(s, static_cast<double>(cutoff) + 1.0);
}

double known_constant(std::string_view name) {
  if (name == "pi") return kPi;
  if (name == "euler_gamma") return kEulerGamma;
  if (name == "zeta2") return kPi * kPi / 6.0;
  if (name == "zeta3") return 1.2020569031595942854;
  if (name == "zeta4") return kPi * kPi * kPi * kPi / 90.0;
  if (name == "zeta6") return std::pow(kPi, 6) / 945.0;
  throw UnknownConstantError("unknown constant '" + std::string(name) + "'");
}

}  // namespace omega_zeta
