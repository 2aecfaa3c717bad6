#pragma once

// Text and JSON renderings of check reports. Both are deterministic: the same
// report always renders to the same bytes.

#include "hgforge/checks.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hgforge {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const PropertyReport& report);
ordered_json to_json(const ConditionAReport& report);

/// "name: holds" or "name: fails (k violations)" followed by one indented
/// line per retained witness.
std::string to_text(const PropertyReport& report, const std::string& indent = "");

std::string index_tuple(const std::vector<std::size_t>& indices);

}  // namespace hgforge
