#include "output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "omega_zeta/errors.hpp"

namespace omega_zeta::cli {
namespace {

std::string scalar_text(const nlohmann::ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return format_number(value.get<double>());
  return value.dump();
}

// key=value pairs joined by ';' for the csv columns.
std::string flatten(const nlohmann::ordered_json& object) {
  std::string out;
  for (const auto& [key, value] : object.items()) {
    if (!out.empty()) out += ';';
    out += key + '=' + scalar_text(value);
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

Format parse_format(std::string_view tag) {
  if (tag == "json") return Format::Json;
  if (tag == "csv") return Format::Csv;
  if (tag == "text") return Format::Text;
  throw DomainError("unknown format '" + std::string(tag) + "'");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["inputs"] = record.inputs;
  j["value_re"] = record.value_re;
  j["value_im"] = record.value_im;
  j["abs_error_estimate"] = record.abs_error_estimate;
  j["terms_used"] = record.terms_used;
  j["method"] = record.method;
  j["extras"] = record.extras;
  j["elapsed_ms"] = record.elapsed_ms;
  return j;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
  switch (format) {
    case Format::Json:
      for (const OutputRecord& r : records) out << to_json(r).dump() << '\n';
      break;
    case Format::Csv:
      out << "command,inputs,value_re,value_im,abs_error_estimate,terms_used,method,extras,"
             "elapsed_ms\n";
      for (const OutputRecord& r : records) {
        out << csv_field(r.command) << ',' << csv_field(flatten(r.inputs)) << ','
            << format_number(r.value_re) << ',' << format_number(r.value_im) << ','
            << format_number(r.abs_error_estimate) << ',' << r.terms_used << ','
            << csv_field(r.method) << ',' << csv_field(flatten(r.extras)) << ','
            << format_number(r.elapsed_ms) << '\n';
      }
      break;
    case Format::Text:
      for (std::size_t i = 0; i < records.size(); ++i) {
        const OutputRecord& r = records[i];
        if (i > 0) out << '\n';
        out << "command: " << r.command << '\n';
        for (const auto& [key, value] : r.inputs.items()) {
          out << "  " << key << ": " << scalar_text(value) << '\n';
        }
        out << "value: " << format_number(r.value_re);
        if (r.value_im != 0.0) out << (r.value_im < 0 ? " - " : " + ") << format_number(std::abs(r.value_im)) << "i";
        out << '\n'
            << "abs_error_estimate: " << format_number(r.abs_error_estimate) << '\n'
            << "terms_used: " << r.terms_used << '\n'
            << "method: " << r.method << '\n';
        for (const auto& [key, value] : r.extras.items()) {
          out << key << ": " << scalar_text(value) << '\n';
        }
        out << "elapsed_ms: " << format_number(r.elapsed_ms) << '\n';
      }
      break;
  }
}

}  // namespace omega_zeta::cli
