#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hyperq {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// One verification outcome: {op, n, inputs, value, bound, pass}.
struct Record {
  std::string op;
  std::size_t n = 0;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

nlohmann::ordered_json to_json(const Record& record);
Record record_from_json(const nlohmann::ordered_json& j);

/// JSON array of records.
void write_json(std::ostream& out, const std::vector<Record>& records);
/// Fixed header "op,n,inputs,value,bound,pass"; inputs flattened as k=v;k=v.
void write_csv(std::ostream& out, const std::vector<Record>& records);
/// Aligned columns for terminals.
void write_text(std::ostream& out, const std::vector<Record>& records);

void write_records(std::ostream& out, const std::vector<Record>& records, OutputFormat format);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

}  // namespace hyperq
