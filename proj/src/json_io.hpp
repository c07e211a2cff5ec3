#pragma once

#include <json.hpp>

#include <string>

namespace hhset::detail {

using json = nlohmann::ordered_json;

/// Like json::dump, but floating-point values use 17 significant digits and
/// non-finite values become null.
std::string dump(const json& j, int indent = 2);

/// Number field that may have been written as null.
double number(const json& j);

} // namespace hhset::detail
