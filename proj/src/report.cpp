#include "hyperq/report.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace hyperq {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string format_number(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
}

nlohmann::ordered_json to_json(const Record& record) {
  nlohmann::ordered_json j;
  j["op"] = record.op;
  j["n"] = record.n;
  j["inputs"] = record.inputs;
  j["value"] = record.value;
  j["bound"] = record.bound;
  j["pass"] = record.pass;
  return j;
}

Record record_from_json(const nlohmann::ordered_json& j) {
  Record r;
  r.op = j.at("op").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.inputs = j.at("inputs");
  r.value = j.at("value").get<double>();
  r.bound = j.at("bound").get<double>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

void write_json(std::ostream& out, const std::vector<Record>& records) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& r : records) array.push_back(to_json(r));
  out << array.dump(2) << '\n';
}

namespace {

std::string flatten_inputs(const nlohmann::ordered_json& inputs) {
  std::string flat;
  for (auto it = inputs.begin(); it != inputs.end(); ++it) {
    if (!flat.empty()) flat += ';';
    flat += it.key();
    flat += '=';
    flat += it.value().is_number_float() ? format_number(it.value().get<double>())
            : it.value().is_string()     ? it.value().get<std::string>()
                                         : it.value().dump();
  }
  return flat;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  out << "op,n,inputs,value,bound,pass\n";
  for (const auto& r : records) {
    out << r.op << ',' << r.n << ",\"" << flatten_inputs(r.inputs) << "\","
        << format_number(r.value) << ',' << format_number(r.bound) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

void write_text(std::ostream& out, const std::vector<Record>& records) {
  std::vector<std::vector<std::string>> rows{{"op", "n", "value", "bound", "pass", "inputs"}};
  for (const auto& r : records) {
    rows.push_back({r.op, std::to_string(r.n), format_number(r.value), format_number(r.bound),
                    r.pass ? "ok" : "FAIL", flatten_inputs(r.inputs)});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void write_records(std::ostream& out, const std::vector<Record>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: write_json(out, records); break;
    case OutputFormat::Csv: write_csv(out, records); break;
    case OutputFormat::Text: write_text(out, records); break;
  }
}

}  // namespace hyperq
