#include "semilab/report.hpp"

#include <fstream>

#include "json.hpp"

namespace semilab {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string CsvTable::to_string() const {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
    return out + "\n";
  };
  std::string out = line(columns);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["query"] = r.query;
  j["instance"] = r.instance;
  if (r.bounds) {
    j["bounds"] = {{"max_degree", r.bounds->max_degree},
                   {"max_height", r.bounds->max_height},
                   {"max_length", r.bounds->max_length},
                   {"max_candidates", r.bounds->max_candidates},
                   {"chain_budget", r.bounds->chain_budget}};
  } else {
    j["bounds"] = nullptr;
  }
  j["verdict"] = r.verdict ? nlohmann::ordered_json(*r.verdict) : nlohmann::ordered_json(nullptr);
  j["witnesses"] = r.witnesses;
  j["elements"] = r.elements;
  j["complete"] = r.complete ? nlohmann::ordered_json(*r.complete) : nlohmann::ordered_json(nullptr);
  j["truncated"] = r.truncated;
  for (const auto& [key, value] : r.extra) j[key] = nlohmann::ordered_json::parse(value);
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) raise(Errc::IoError, "cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) raise(Errc::IoError, "write to " + path + " failed");
}

void emit_report(const Report& r, std::ostream& out, const std::optional<std::string>& json_path,
                 const CsvTable* csv, const std::optional<std::string>& csv_path) {
  const std::string text = to_json(r);
  out << text;
  if (json_path) write_file(*json_path, text);
  if (csv && csv_path) write_file(*csv_path, csv->to_string());
}

}  // namespace semilab
