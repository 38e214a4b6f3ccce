#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace kregular::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view name);

// What a command produced: the query echo, the payload and the wall time.
// Exact integers are carried as decimal strings.
struct OutputRecord {
  Json query;
  Json result;
  std::optional<double> elapsed_ms;

  Json to_json() const;
  static OutputRecord from_json(const Json& j);
};

// Text and CSV are derived from the same JSON payload, keyed on
// query["command"], so the three formats cannot disagree.
std::string render(const OutputRecord& record, Format format);

}  // namespace kregular::cli
