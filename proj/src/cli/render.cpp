#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qvh/cli/dispatch.hpp"

namespace qvh::cli {

using nlohmann::json;

namespace {

constexpr int kMachineDigits = 12;
constexpr int kTableDigits = 6;

std::string cell_text(const std::optional<double>& v, int digits) {
  return v ? format_number(*v, digits) : std::string("inf");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string render_csv(const ResultEnvelope& env) {
  std::ostringstream os;
  if (!env.outputs.empty()) {
    os << "name,value,unit,dimension,source\n";
    for (const auto& o : env.outputs)
      os << o.name << ',' << format_number(o.value, kMachineDigits) << ',' << csv_escape(o.unit) << ','
         << csv_escape(o.dimension) << ',' << o.source << '\n';
  }
  for (const auto& t : env.tables) {
    if (!env.outputs.empty() || env.tables.size() > 1) os << "# " << t.name << '\n';
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << cell_text(row[j], kMachineDigits);
      os << '\n';
    }
  }
  return os.str();
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_table(const ResultEnvelope& env) {
  std::ostringstream os;
  os << "qvh " << env.command << '\n';
  for (const auto& [name, entry] : env.inputs.items()) {
    const json& v = entry.at("value");
    std::string text;
    if (v.is_number())
      text = format_number(v.get<double>(), kTableDigits);
    else if (v.is_string())
      text = v.get<std::string>();
    else
      text = v.dump();
    const std::string unit = entry.at("unit").get<std::string>();
    os << "  " << pad(name, 14) << text << (unit.empty() || unit == "1" ? "" : " " + unit) << '\n';
  }
  if (!env.outputs.empty()) {
    std::size_t w = 4;
    for (const auto& o : env.outputs) w = std::max(w, o.name.size());
    os << '\n';
    for (const auto& o : env.outputs)
      os << "  " << pad(o.name, w + 2) << pad(format_number(o.value, kTableDigits), 14) << pad(o.unit, 14) << "["
         << o.source << "]\n";
  }
  for (const auto& t : env.tables) {
    os << '\n' << "  " << t.name << '\n';
    os << "  ";
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << pad(t.columns[j], 14);
    os << '\n';
    for (const auto& row : t.rows) {
      os << "  ";
      for (const auto& cell : row) os << pad(cell_text(cell, kTableDigits), 14);
      os << '\n';
    }
  }
  for (const auto& n : env.notes) os << "\n  note: " << n;
  if (!env.notes.empty()) os << '\n';
  return os.str();
}

}  // namespace

std::string format_number(double value, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant - 1, value);
  return buf;
}

double round_significant(double value, int significant) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::strtod(format_number(value, significant).c_str(), nullptr);
}

json to_json(const ResultEnvelope& env) {
  json j;
  j["command"] = env.command;
  j["inputs"] = env.inputs;
  j["outputs"] = json::array();
  for (const auto& o : env.outputs)
    j["outputs"].push_back({{"name", o.name},
                            {"value", round_significant(o.value, kMachineDigits)},
                            {"unit", o.unit},
                            {"dimension", o.dimension},
                            {"source", o.source}});
  j["tables"] = json::array();
  for (const auto& t : env.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const auto& cell : row) r.push_back(cell ? json(round_significant(*cell, kMachineDigits)) : json(nullptr));
      rows.push_back(std::move(r));
    }
    j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"units", t.units}, {"rows", std::move(rows)}});
  }
  j["notes"] = env.notes;
  return j;
}

std::string render(const ResultEnvelope& env, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(env).dump(2) + "\n";
    case OutputFormat::Csv: return render_csv(env);
    case OutputFormat::Table: return render_table(env);
  }
  return {};
}

}  // namespace qvh::cli
