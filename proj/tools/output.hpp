#pragma once

// Result records and their json / csv / text renderings.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace omega_zeta::cli {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view tag);

// Shortest round-trip decimal form of x ("nan", "inf", "-inf" for
// non-finite values).
std::string format_number(double x);

struct OutputRecord {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  double value_re = 0.0;
  double value_im = 0.0;
  double abs_error_estimate = 0.0;
  int terms_used = 0;
  std::string method;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
  // Always rendered last so that it can be cut off for comparisons.
  double elapsed_ms = 0.0;
};

nlohmann::ordered_json to_json(const OutputRecord& record);

// Prints records one per line (json), with one header (csv), or as blocks
// of "key: value" lines (text).
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format);

}  // namespace omega_zeta::cli
