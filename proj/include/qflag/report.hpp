#pragma once

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qflag {

using Json = nlohmann::ordered_json;

enum class Format { Json, Markdown, Text };

/// Accepts "json", "markdown" (or "md") and "text".
Format parse_format(const std::string& s);

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Json> rows;
  bool pass = true;
  int root_order = 1;  // scalars are written in t with q = t^root_order when > 1
  /// Markdown/text column headers paired with row keys; empty means every key of the first row.
  std::vector<std::pair<std::string, std::string>> columns;
  std::vector<std::string> notes;
  double elapsed_ms = 0;  // shown in text output only

  void add_row(Json row, bool ok);

  Json to_json() const;
  std::string render(Format f) const;
};

/// Plain-text rendering of a JSON value: arrays as "(a, b)", strings unquoted.
std::string cell_text(const Json& v);

}  // namespace qflag
