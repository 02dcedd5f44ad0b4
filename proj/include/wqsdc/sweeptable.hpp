// Column-oriented numeric table with CSV serialization.
//
// Format: optional leading comment lines starting with '#' (one per warning),
// then the header row, then data rows. Values are printed with 12 significant
// digits, which round-trips through read_csv to the last printed digit.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wqsdc {

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each row matches columns in size
  std::vector<std::string> warnings;      // serialized as '#' comment lines

  std::size_t column_index(const std::string& name) const;  // throws if absent
};

void write_csv(const SweepTable& table, std::ostream& out);
std::string to_csv_string(const SweepTable& table);

// Parses the write_csv format; throws std::runtime_error on shape errors.
SweepTable read_csv(std::istream& in);
SweepTable read_csv_string(const std::string& text);

// The shared numeric formatting: 12 significant digits, shortest form.
std::string format_value(double value);

}  // namespace wqsdc
