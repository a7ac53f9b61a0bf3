#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace monoidx::cli {

using Json = nlohmann::ordered_json;

// A finite double rounded to 12 significant digits; non-finite values become
// the strings "inf", "-inf" or "nan".
Json number(double x);
// number(x), or the string "undefined" when empty.
Json number_or_undefined(const std::optional<double>& x);

std::string render_json(const Json& document);
// "key  value" lines for every leaf under document["results"], nested keys
// joined with '.', followed by any warnings.
std::string render_table(const Json& document);

}  // namespace monoidx::cli
