#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monoidx/error.hpp"
#include "monoidx/function_model.hpp"
#include "monoidx/signed_measure.hpp"

namespace monoidx::cli {

// Comma-separated, '.' decimal point. A first row that does not parse as
// numbers is taken as a header. Blank lines are skipped. Errors name the
// source and the 1-based line.
class CsvError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct CsvRow {
  std::size_t line;
  std::vector<double> values;
};

std::vector<CsvRow> parse_csv(std::string_view text, std::size_t columns, std::string_view source);
std::string read_file(const std::string& path);

// Two columns (x, y), x strictly increasing, at least two rows.
SampledFunction parse_function_csv(std::string_view text, std::string_view source);

struct AtomsCsv {
  DiscreteSignedMeasure measure;
  std::vector<std::string> warnings;  // one per dropped zero-weight row
};
// Two columns (location, weight), distinct locations.
AtomsCsv parse_atoms_csv(std::string_view text, std::string_view source);

// One column, at least one observation.
std::vector<double> parse_sample_csv(std::string_view text, std::string_view source);

}  // namespace monoidx::cli
