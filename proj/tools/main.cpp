#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

const std::vector<std::string> kMethods = {"none", "euler", "cvz"};

}  // namespace

int main(int argc, char** argv) {
  using namespace omega_zeta::cli;

  CLI::App app{"Zeta values from gamma functions at roots of unity"};
  app.name("omega-zeta");
  app.require_subcommand(1);
  // Lets --threads and --format follow the subcommand too.
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--threads", global.threads, "Worker threads (default: OMEGA_ZETA_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  ZetaOptions zeta;
  CLI::App* zeta_cmd = app.add_subcommand("zeta", "zeta(m) from the root-of-unity gamma series");
  zeta_cmd->add_option("m", zeta.m, "Order m >= 2")->required();
  zeta_cmd->add_option("--terms", zeta.terms, "Number of series terms");
  zeta_cmd->add_option("--method", zeta.method, "Acceleration")->check(CLI::IsMember(kMethods));
  zeta_cmd->add_flag("--trace", zeta.trace, "Attach the per-term trace");

  PhiOptions phi;
  CLI::App* phi_cmd = app.add_subcommand("phi", "Phi_m(z) = prod n^m / (n^m - z^m)");
  phi_cmd->add_option("m", phi.m, "Order m >= 2")->required();
  phi_cmd->add_option("--z", phi.z, "Argument as re,im");
  phi_cmd->add_option("--route", phi.route, "Evaluation route")
      ->check(CLI::IsMember({"product", "gamma", "expzeta", "all"}));
  phi_cmd->add_option("--product-terms", phi.product_terms, "Factors for the product route");

  GammaPfdOptions gamma_pfd;
  CLI::App* gamma_cmd =
      app.add_subcommand("gamma-pfd", "Partial-fraction series of Gamma(a+z) Gamma(a-z)");
  gamma_cmd->add_option("--a", gamma_pfd.a, "Real shift a")->required();
  gamma_cmd->add_option("--z", gamma_pfd.z, "Argument as re,im");
  gamma_cmd->add_option("--terms", gamma_pfd.terms, "Number of series terms");
  gamma_cmd->add_option("--method", gamma_pfd.method, "Acceleration; auto picks euler")
      ->check(CLI::IsMember({"none", "euler", "cvz", "auto"}));

  Zeta3Options zeta3;
  CLI::App* zeta3_cmd = app.add_subcommand("zeta3", "Alternative series for zeta(3)");
  zeta3_cmd->add_option("--variant", zeta3.variant, "Series variant")
      ->check(CLI::IsMember({"sine", "hyperbolic", "beta"}));
  zeta3_cmd->add_option("--terms", zeta3.terms, "Outer terms");
  zeta3_cmd->add_option("--method", zeta3.method, "Outer acceleration")
      ->check(CLI::IsMember(kMethods));
  zeta3_cmd->add_option("--inner-terms", zeta3.inner_terms, "Inner terms (beta)");
  zeta3_cmd->add_option("--inner-method", zeta3.inner_method, "Inner summation (beta)")
      ->check(CLI::IsMember(kMethods));

  ConvergeOptions converge;
  CLI::App* converge_cmd = app.add_subcommand("converge", "Convergence table of the zeta series");
  converge_cmd->add_option("--m", converge.m, "Order m >= 2");
  converge_cmd->add_option("--max-terms", converge.max_terms, "Rows n = 1..N");
  converge_cmd->add_option("--method", converge.method, "Acceleration")
      ->check(CLI::IsMember(kMethods));

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite")
      ->check(CLI::IsMember({"all", "pfd", "phi", "zeta", "gamma", "zeta3", "oracle"}));
  verify_cmd->add_option("--tolerance", verify.tolerance, "Relax every threshold to at least T")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "omega-zeta: usage error: " << e.what() << '\n';
    return kExitDomain;
  }

  std::ostream& out = std::cout;
  return run_guarded(
      [&]() -> int {
        if (zeta_cmd->parsed()) return cmd_zeta(global, zeta, out);
        if (phi_cmd->parsed()) return cmd_phi(global, phi, out);
        if (gamma_cmd->parsed()) return cmd_gamma_pfd(global, gamma_pfd, out);
        if (zeta3_cmd->parsed()) return cmd_zeta3(global, zeta3, out);
        if (converge_cmd->parsed()) return cmd_converge(global, converge, out);
        return cmd_verify(global, verify, out);
      },
      std::cerr);
}
