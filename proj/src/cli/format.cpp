#include "monoidx/cli/format.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace monoidx::cli {

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // Round through a 12-significant-digit decimal; the JSON writer then emits
  // the shortest text that reproduces the rounded value.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  double rounded = x;
  std::from_chars(buf, res.ptr, rounded);
  if (rounded == 0.0) rounded = 0.0;  // drop the sign of -0
  return rounded;
}

Json number_or_undefined(const std::optional<double>& x) {
  return x ? number(*x) : Json("undefined");
}

std::string render_json(const Json& document) { return document.dump(2) + "\n"; }

namespace {

void flatten(const Json& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (node.is_array()) {
    if (node.empty()) out.emplace_back(prefix, "[]");
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (node.is_string()) {
    out.emplace_back(prefix, node.get<std::string>());
  } else {
    out.emplace_back(prefix, node.dump());
  }
}

}  // namespace

std::string render_table(const Json& document) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(document.at("results"), "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());

  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  for (const auto& w : document.at("warnings")) out << "warning: " << w.get<std::string>() << '\n';
  return out.str();
}

}  // namespace monoidx::cli
