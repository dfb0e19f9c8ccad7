#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <vector>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/gamma_pfd.hpp"
#include "omega_zeta/oracle.hpp"
#include "omega_zeta/parallel.hpp"
#include "omega_zeta/phi.hpp"
#include "omega_zeta/verify.hpp"
#include "omega_zeta/zeta3_variants.hpp"
#include "omega_zeta/zeta_series.hpp"

namespace omega_zeta::cli {
namespace {

using json = nlohmann::ordered_json;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Format resolve_format(const GlobalOptions& g, Format fallback) {
  return g.format ? parse_format(*g.format) : fallback;
}

int threads_of(const GlobalOptions& g) { return resolve_threads(g.threads); }

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError("cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

json trace_json(const std::vector<SeriesTermTrace>& trace) {
  json rows = json::array();
  for (const SeriesTermTrace& t : trace) {
    rows.push_back(json{{"n", t.n}, {"value", t.value}, {"log_mag", t.log_mag}, {"sign", t.sign}});
  }
  return rows;
}

void fill_from_report(OutputRecord& r, const ConvergenceReport& report) {
  r.value_re = report.value;
  r.value_im = report.value_im;
  r.abs_error_estimate = report.error_estimate;
  r.terms_used = report.terms_used;
  r.method = std::string(method_tag(report.method));
  if (!report.regime.empty()) r.extras["regime"] = report.regime;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text), 0.0};
  if (text.find(',', comma + 1) != std::string::npos) {
    throw DomainError("complex values are written re,im; got '" + text + "'");
  }
  const std::string_view view(text);
  return {parse_double(view.substr(0, comma)), parse_double(view.substr(comma + 1))};
}

int cmd_zeta(const GlobalOptions& g, const ZetaOptions& o, std::ostream& out) {
  const Format format = resolve_format(g, Format::Json);
  PrecisionConfig config;
  config.max_terms = o.terms;
  config.method = parse_method(o.method);
  config.trace_enabled = o.trace;
  config.threads = threads_of(g);

  const Stopwatch clock;
  const ConvergenceReport report = zeta_via_series(o.m, config);
  const double oracle = zeta_oracle(o.m);

  OutputRecord r;
  r.command = "zeta";
  r.inputs = json{{"m", o.m}, {"terms", o.terms}, {"method", o.method}};
  fill_from_report(r, report);
  r.extras["oracle"] = oracle;
  r.extras["abs_deviation_vs_oracle"] = std::abs(report.value - oracle);
  if (o.trace) r.extras["trace"] = trace_json(report.trace);
  r.elapsed_ms = clock.elapsed_ms();
  write_records(out, {r}, format);
  return kExitOk;
}

int cmd_phi(const GlobalOptions& g, const PhiOptions& o, std::ostream& out) {
  const Format format = resolve_format(g, Format::Json);
  const ComplexValue z = parse_complex(o.z);
  std::vector<PhiRoute> routes;
  json skipped = json::array();
  if (o.route == "product" || o.route == "all") routes.push_back(PhiRoute::truncated_product(o.product_terms));
  if (o.route == "gamma" || o.route == "all") routes.push_back(PhiRoute::gamma_product());
  if (o.route == "expzeta" || (o.route == "all" && std::abs(z) <= kExpZetaRadius)) {
    routes.push_back(PhiRoute::exp_zeta_series());
  } else if (o.route == "all") {
    skipped.push_back("expzeta");
  }
  if (routes.empty()) throw DomainError("unknown route '" + o.route + "'");

  const json inputs{{"m", o.m}, {"z_re", z.real()}, {"z_im", z.imag()}};
  std::vector<OutputRecord> records;
  std::vector<ComplexValue> values;
  const Stopwatch total;
  for (const PhiRoute& route : routes) {
    const Stopwatch clock;
    const PhiValue v = evaluate_phi(o.m, z, route);
    OutputRecord r;
    r.command = "phi";
    r.inputs = inputs;
    r.inputs["route"] = std::string(route_name(route.kind));
    if (route.kind == PhiRoute::Kind::TruncatedProduct) r.inputs["product_terms"] = o.product_terms;
    r.value_re = v.value.real();
    r.value_im = v.value.imag();
    r.abs_error_estimate = v.error_estimate;
    r.terms_used = v.terms_used;
    r.method = std::string(route_name(route.kind));
    r.elapsed_ms = clock.elapsed_ms();
    records.push_back(std::move(r));
    values.push_back(v.value);
  }

  if (o.route == "all") {
    double max_relative = 0.0;
    double max_absolute = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const double diff = std::abs(values[i] - values[j]);
        const double scale = std::max(std::abs(values[i]), std::abs(values[j]));
        max_absolute = std::max(max_absolute, diff);
        if (scale > 0.0) max_relative = std::max(max_relative, diff / scale);
      }
    }
    OutputRecord summary;
    summary.command = "phi";
    summary.inputs = inputs;
    summary.inputs["route"] = "all";
    const ComplexValue reference = values[routes.size() > 1 ? 1 : 0];
    summary.value_re = reference.real();
    summary.value_im = reference.imag();
    summary.abs_error_estimate = max_absolute;
    summary.terms_used = static_cast<int>(values.size());
    summary.method = "all";
    summary.extras["max_relative_disagreement"] = max_relative;
    if (!skipped.empty()) summary.extras["skipped_routes"] = skipped;
    summary.elapsed_ms = total.elapsed_ms();
    records.push_back(std::move(summary));
  }
  write_records(out, records, format);
  return kExitOk;
}

int cmd_gamma_pfd(const GlobalOptions& g, const GammaPfdOptions& o, std::ostream& out) {
  const Format format = resolve_format(g, Format::Json);
  const ComplexValue z = parse_complex(o.z);
  std::optional<AccelerationMethod> method;
  if (o.method != "auto") method = parse_method(o.method);

  const Stopwatch clock;
  const ConvergenceReport report = gamma_pfd_series(o.a, z, o.terms, method);
  const ComplexValue reference = gamma_pair(o.a, z);

  OutputRecord r;
  r.command = "gamma-pfd";
  r.inputs = json{{"a", o.a}, {"z_re", z.real()}, {"z_im", z.imag()}, {"terms", o.terms},
                  {"method", o.method}};
  fill_from_report(r, report);
  r.extras["reference_re"] = reference.real();
  r.extras["reference_im"] = reference.imag();
  r.extras["abs_deviation"] = std::abs(report.complex_value() - reference);
  r.elapsed_ms = clock.elapsed_ms();
  write_records(out, {r}, format);
  return kExitOk;
}

int cmd_zeta3(const GlobalOptions& g, const Zeta3Options& o, std::ostream& out) {
  const Format format = resolve_format(g, Format::Json);
  const Zeta3Variant variant = parse_variant(o.variant);
  PrecisionConfig config;
  config.max_terms = o.terms;
  config.method = parse_method(o.method);
  config.inner_terms = o.inner_terms;
  config.inner_method = parse_method(o.inner_method);
  config.threads = threads_of(g);

  const Stopwatch clock;
  const ConvergenceReport report = zeta3_series(variant, config);
  const double oracle = zeta_oracle(3);

  OutputRecord r;
  r.command = "zeta3";
  r.inputs = json{{"variant", o.variant}, {"terms", o.terms}, {"method", o.method}};
  if (variant == Zeta3Variant::BetaForm) {
    r.inputs["inner_terms"] = o.inner_terms;
    r.inputs["inner_method"] = o.inner_method;
  }
  fill_from_report(r, report);
  r.extras["oracle"] = oracle;
  r.extras["abs_deviation_vs_oracle"] = std::abs(report.value - oracle);
  r.elapsed_ms = clock.elapsed_ms();
  write_records(out, {r}, format);
  return kExitOk;
}

int cmd_converge(const GlobalOptions& g, const ConvergeOptions& o, std::ostream& out) {
  const Format format = resolve_format(g, Format::Csv);
  if (o.max_terms < 1) throw DomainError("--max-terms must be >= 1");
  const AccelerationMethod method = parse_method(o.method);
  const std::vector<SeriesTermTrace> terms = zeta_terms(o.m, o.max_terms, threads_of(g));
  const double oracle = zeta_oracle(o.m);

  std::vector<double> values;
  values.reserve(terms.size());
  double partial = 0.0;
  if (format == Format::Csv) out << "n,term,partial_sum,accelerated,abs_error_vs_oracle\n";
  if (format == Format::Text) out << "n term partial_sum accelerated abs_error_vs_oracle\n";
  for (const SeriesTermTrace& t : terms) {
    values.push_back(t.value);
    partial += t.value;
    const double accelerated = sum_alternating(std::span<const double>(values), method).value;
    const double error = std::abs(accelerated - oracle);
    switch (format) {
      case Format::Csv:
        out << t.n << ',' << format_number(t.value) << ',' << format_number(partial) << ','
            << format_number(accelerated) << ',' << format_number(error) << '\n';
        break;
      case Format::Text:
        out << t.n << ' ' << format_number(t.value) << ' ' << format_number(partial) << ' '
            << format_number(accelerated) << ' ' << format_number(error) << '\n';
        break;
      case Format::Json:
        out << json{{"n", t.n},
                    {"term", t.value},
                    {"partial_sum", partial},
                    {"accelerated", accelerated},
                    {"abs_error_vs_oracle", error}}
                   .dump()
            << '\n';
        break;
    }
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& o, std::ostream& out) {
  const Format format = resolve_format(g, Format::Json);
  const Stopwatch clock;
  const std::vector<CheckResult> results = run_verify(o.suite, o.tolerance, threads_of(g));
  const double elapsed = clock.elapsed_ms();
  const auto passed = static_cast<int>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; }));
  const int failed = static_cast<int>(results.size()) - passed;

  switch (format) {
    case Format::Json:
      for (const CheckResult& c : results) {
        out << json{{"command", "verify"}, {"suite", c.suite},     {"check", c.name},
                    {"passed", c.passed},  {"measured", c.measured}, {"threshold", c.threshold},
                    {"detail", c.detail}}
                   .dump()
            << '\n';
      }
      out << json{{"command", "verify"}, {"suite", o.suite}, {"passed", passed},
                  {"failed", failed},    {"elapsed_ms", elapsed}}
                 .dump()
          << '\n';
      break;
    case Format::Csv:
      out << "suite,check,passed,measured,threshold,detail\n";
      for (const CheckResult& c : results) {
        out << c.suite << ',' << c.name << ',' << (c.passed ? "true" : "false") << ','
            << format_number(c.measured) << ',' << format_number(c.threshold) << ",\""
            << c.detail << "\"\n";
      }
      break;
    case Format::Text:
      for (const CheckResult& c : results) {
        out << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name;
        if (!std::isnan(c.measured)) {
          out << "  measured=" << format_number(c.measured)
              << " threshold=" << format_number(c.threshold);
        }
        if (!c.detail.empty()) out << "  (" << c.detail << ')';
        out << '\n';
      }
      out << passed << " passed, " << failed << " failed in " << format_number(elapsed)
          << " ms\n";
      break;
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const DivergenceError& e) {
    err << "omega-zeta: divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const NumericalResidueError& e) {
    err << "omega-zeta: numerical residue: " << e.what() << '\n';
    return kExitResidue;
  } catch (const OverflowError& e) {
    err << "omega-zeta: overflow: " << e.what() << '\n';
    return kExitResidue;
  } catch (const Error& e) {
    // Domain, pole, degenerate nodes, sign pattern, unknown constant.
    err << "omega-zeta: domain error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace omega_zeta::cli
