#include "qflag/report.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qflag {

Format parse_format(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
  if (l == "json") return Format::Json;
  if (l == "markdown" || l == "md") return Format::Markdown;
  if (l == "text" || l == "txt") return Format::Text;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, markdown or text)");
}

void Report::add_row(Json row, bool ok) {
  if (!ok) pass = false;
  rows.push_back(std::move(row));
}

Json Report::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  Json p = params;
  if (root_order > 1) p["variable"] = "q = t^" + std::to_string(root_order);
  j["params"] = p;
  j["rows"] = Json::array();
  for (const auto& r : rows) j["rows"].push_back(r);
  if (!notes.empty()) j["notes"] = notes;
  j["pass"] = pass;
  return j;
}

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += cell_text(v[i]);
    }
    return s + ")";
  }
  return v.dump();
}

namespace {

std::vector<std::pair<std::string, std::string>> resolve_columns(const Report& r) {
  if (!r.columns.empty()) return r.columns;
  std::vector<std::pair<std::string, std::string>> cols;
  if (r.rows.empty()) return cols;
  for (const auto& [k, v] : r.rows.front().items()) cols.emplace_back(k, k);
  return cols;
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace

std::string Report::render(Format f) const {
  if (f == Format::Json) return to_json().dump(2) + "\n";

  std::ostringstream os;
  const auto cols = resolve_columns(*this);
  if (f == Format::Markdown) {
    os << "## " << command << "\n\n";
    if (root_order > 1) os << "q = t^" << root_order << "\n\n";
    if (!cols.empty()) {
      os << "|";
      for (const auto& c : cols) os << " " << md_escape(c.first) << " |";
      os << "\n|";
      for (size_t i = 0; i < cols.size(); ++i) os << "---|";
      os << "\n";
      for (const auto& row : rows) {
        os << "|";
        for (const auto& c : cols) os << " " << md_escape(row.contains(c.second) ? cell_text(row[c.second]) : "") << " |";
        os << "\n";
      }
      os << "\n";
    }
    for (const auto& n : notes) os << "- " << n << "\n";
    if (!notes.empty()) os << "\n";
    os << "**" << (pass ? "PASS" : "FAIL") << "**\n";
    return os.str();
  }

  os << command;
  for (const auto& [k, v] : params.items()) os << " " << k << "=" << cell_text(v);
  os << "\n";
  if (root_order > 1) os << "q = t^" << root_order << "\n";
  for (const auto& row : rows) {
    for (const auto& c : cols) {
      if (!row.contains(c.second)) continue;
      os << "  " << c.first << "=" << cell_text(row[c.second]);
    }
    os << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << (pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(1) << elapsed_ms << " ms)\n";
  return os.str();
}

}  // namespace qflag
