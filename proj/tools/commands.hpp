#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "output.hpp"

namespace omega_zeta::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify: some invariant failed
inline constexpr int kExitDivergence = 2;
inline constexpr int kExitDomain = 3;  // domain, pole, parse and usage errors
inline constexpr int kExitResidue = 4;  // numerical residue or overflow

struct GlobalOptions {
  std::optional<int> threads;
  std::optional<std::string> format;
};

struct ZetaOptions {
  int m = 0;
  int terms = 64;
  std::string method = "cvz";
  bool trace = false;
};

struct PhiOptions {
  int m = 0;
  std::string z = "0,0";
  std::string route = "gamma";
  int product_terms = 1000;
};

struct GammaPfdOptions {
  double a = 1.0;
  std::string z = "0,0";
  long terms = 64;
  std::string method = "auto";
};

struct Zeta3Options {
  std::string variant = "hyperbolic";
  int terms = 40;
  std::string method = "none";
  int inner_terms = 96;
  std::string inner_method = "euler";
};

struct ConvergeOptions {
  int m = 2;
  int max_terms = 32;
  std::string method = "cvz";
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<double> tolerance;
};

// Each returns the exit code; library errors are left to run_guarded.
int cmd_zeta(const GlobalOptions& g, const ZetaOptions& o, std::ostream& out);
int cmd_phi(const GlobalOptions& g, const PhiOptions& o, std::ostream& out);
int cmd_gamma_pfd(const GlobalOptions& g, const GammaPfdOptions& o, std::ostream& out);
int cmd_zeta3(const GlobalOptions& g, const Zeta3Options& o, std::ostream& out);
int cmd_converge(const GlobalOptions& g, const ConvergeOptions& o, std::ostream& out);
int cmd_verify(const GlobalOptions& g, const VerifyOptions& o, std::ostream& out);

// Runs fn and maps library errors onto exit codes, with a one-line
// diagnostic on err:
//   DivergenceError                                         -> 2
//   DomainError, PoleError, DegenerateNodesError,
//   SignPatternError, UnknownConstantError                  -> 3
//   NumericalResidueError, OverflowError                    -> 4
int run_guarded(const std::function<int()>& fn, std::ostream& err);

// "re,im" or "re". DomainError on anything else.
std::complex<double> parse_complex(const std::string& text);

}  // namespace omega_zeta::cli
