#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypersolid/nat.hpp"

namespace hypersolid::cli {

enum class OutputFormat { kText, kCsv, kJson };

OutputFormat parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

// Values may exceed 64 bits, so JSON carries them as decimal strings.
inline Json json_value(const Nat& value) { return value.str(); }

// {"query": ..., "result": ..., "consistent": ...}, pretty-printed, newline-terminated.
void write_json(std::ostream& out, const Json& query, const Json& result, bool consistent);

using Grid = std::vector<std::vector<std::string>>;

// Right-aligns every column to its widest cell; ragged rows are allowed.
void write_aligned(std::ostream& out, const Grid& rows, std::string_view separator = " ");

// Plain comma-joined rows, no quoting.
void write_csv(std::ostream& out, const Grid& rows);

}  // namespace hypersolid::cli
