#include "output.hpp"

#include <sstream>

namespace kregular::cli {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string str(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void report_text(const Json& result, std::ostringstream& os) {
  for (const auto& row : result.at("rows")) {
    os << (row.at("pass").get<bool>() ? "PASS" : "FAIL") << "  "
       << row.at("label").get<std::string>();
    for (const auto& [name, value] : row.at("fields").items())
      os << "  " << name << "=" << str(value);
    os << "\n";
  }
  os << result.at("summary").get<std::string>() << "\n";
}

void report_csv(const Json& result, std::ostringstream& os) {
  os << "label,pass,field,value\n";
  for (const auto& row : result.at("rows")) {
    const std::string label = csv_cell(row.at("label").get<std::string>());
    const char* pass = row.at("pass").get<bool>() ? "true" : "false";
    for (const auto& [name, value] : row.at("fields").items())
      os << label << "," << pass << "," << csv_cell(name) << ","
         << csv_cell(str(value)) << "\n";
  }
}

std::string render_text(const OutputRecord& r) {
  std::ostringstream os;
  const std::string command = r.query.at("command").get<std::string>();
  const Json& res = r.result;
  if (command == "count") {
    os << res.at("count").get<std::string>() << "\n";
  } else if (command == "list" || command == "annexes") {
    for (const auto& w : res.at("words")) os << w.get<std::string>() << "\n";
  } else if (command == "seq") {
    bool first = true;
    for (const auto& v : res.at("values")) {
      os << (first ? "" : " ") << v.get<std::string>();
      first = false;
    }
    os << "\n";
  } else if (command == "table") {
    for (const auto& row : res.at("rows")) {
      const auto& f = row.at("fields");
      os << row.at("label").get<std::string>() << "  "
         << f.at("name").get<std::string>() << "  "
         << f.at("values").get<std::string>();
      if (f.contains("brute"))
        os << "  brute=" << f.at("brute").get<std::string>() << "  "
           << (row.at("pass").get<bool>() ? "ok" : "MISMATCH");
      os << "\n";
    }
    os << res.at("summary").get<std::string>() << "\n";
  } else if (command == "verify" || command == "conjecture") {
    report_text(res, os);
  } else if (command == "partition") {
    os << "annex=" << res.at("annex").get<std::string>()
       << " base=" << res.at("base").get<std::string>() << "\n";
  } else if (command == "tree") {
    os << res.at("dot").get<std::string>();
  } else {
    os << res.dump(2) << "\n";
  }
  return os.str();
}

std::string render_csv(const OutputRecord& r) {
  std::ostringstream os;
  const std::string command = r.query.at("command").get<std::string>();
  const Json& res = r.result;
  if (command == "count") {
    os << "n,k,patterns,count\n"
       << str(r.query.at("n")) << "," << str(r.query.at("k")) << ","
       << csv_cell(r.query.at("patterns").get<std::string>()) << ","
       << res.at("count").get<std::string>() << "\n";
  } else if (command == "list" || command == "annexes") {
    os << "word\n";
    for (const auto& w : res.at("words")) os << csv_cell(w.get<std::string>()) << "\n";
  } else if (command == "seq") {
    os << "n,value\n";
    std::size_t n = 0;
    for (const auto& v : res.at("values")) os << n++ << "," << v.get<std::string>() << "\n";
  } else if (command == "verify" || command == "conjecture" || command == "table") {
    report_csv(res, os);
  } else if (command == "partition") {
    os << "annex,base\n" << res.at("annex").get<std::string>() << ","
       << res.at("base").get<std::string>() << "\n";
  } else {
    os << csv_cell(res.dump()) << "\n";
  }
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

Json OutputRecord::to_json() const {
  Json j;
  j["query"] = query;
  j["result"] = result;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
  OutputRecord r;
  r.query = j.at("query");
  r.result = j.at("result");
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string render(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::json: return record.to_json().dump(2) + "\n";
    case Format::csv: return render_csv(record);
    case Format::text: break;
  }
  return render_text(record);
}

}  // namespace kregular::cli
