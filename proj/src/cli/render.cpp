#include "render.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypersolid::cli {

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

void write_json(std::ostream& out, const Json& query, const Json& result, bool consistent) {
  Json doc;
  doc["query"] = query;
  doc["result"] = result;
  doc["consistent"] = consistent;
  out << doc.dump(2) << '\n';
}

void write_aligned(std::ostream& out, const Grid& rows, std::string_view separator) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << separator;
      out << std::string(widths[i] - row[i].size(), ' ') << row[i];
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const Grid& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

}  // namespace hypersolid::cli
