#include "monoidx/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace monoidx::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Parses the whole field as a double; false if it is not a number at all.
bool parse_number(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw CsvError(msg.str());
}

}  // namespace

std::vector<CsvRow> parse_csv(std::string_view text, std::size_t columns, std::string_view source) {
  std::vector<CsvRow> rows;
  bool first = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    const std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }

    CsvRow row{line_no, {}};
    bool numeric = true;
    for (std::string_view f : fields) {
      double v = 0.0;
      if (!parse_number(f, v)) {
        numeric = false;
        break;
      }
      row.values.push_back(v);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;  // header
      }
      fail(source, line_no, "non-numeric field");
    }
    first = false;
    if (row.values.size() != columns) {
      std::ostringstream msg;
      msg << "expected " << columns << " column" << (columns == 1 ? "" : "s") << ", found "
          << row.values.size();
      fail(source, line_no, msg.str());
    }
    for (double v : row.values) {
      if (!std::isfinite(v)) fail(source, line_no, "NaN or infinite value");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SampledFunction parse_function_csv(std::string_view text, std::string_view source) {
  const auto rows = parse_csv(text, 2, source);
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(rows.size());
  ys.reserve(rows.size());
  for (const CsvRow& r : rows) {
    if (!xs.empty()) {
      if (r.values[0] == xs.back()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "duplicate x value " << r.values[0];
        fail(source, r.line, msg.str());
      }
      if (r.values[0] < xs.back()) fail(source, r.line, "x values must be strictly increasing");
    }
    xs.push_back(r.values[0]);
    ys.push_back(r.values[1]);
  }
  if (xs.size() < 2) {
    throw CsvError(std::string(source) + ": need at least 2 data rows");
  }
  return SampledFunction(std::move(xs), std::move(ys));
}

AtomsCsv parse_atoms_csv(std::string_view text, std::string_view source) {
  const auto rows = parse_csv(text, 2, source);
  AtomsCsv out;
  std::vector<Atom> atoms;
  std::map<double, std::size_t> seen;  // location -> line
  for (const CsvRow& r : rows) {
    const auto [it, inserted] = seen.emplace(r.values[0], r.line);
    if (!inserted) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "duplicate location " << r.values[0] << " (first seen on line " << it->second << ")";
      fail(source, r.line, msg.str());
    }
    if (r.values[1] == 0.0) {
      std::ostringstream msg;
      msg.precision(12);
      msg << source << ":" << r.line << ": zero weight at location " << r.values[0] << " dropped";
      out.warnings.push_back(msg.str());
      continue;
    }
    atoms.push_back({r.values[0], r.values[1]});
  }
  out.measure = DiscreteSignedMeasure(std::move(atoms));
  return out;
}

std::vector<double> parse_sample_csv(std::string_view text, std::string_view source) {
  const auto rows = parse_csv(text, 1, source);
  if (rows.empty()) throw CsvError(std::string(source) + ": sample is empty");
  std::vector<double> sample;
  sample.reserve(rows.size());
  for (const CsvRow& r : rows) sample.push_back(r.values[0]);
  return sample;
}

}  // namespace monoidx::cli
