#include "wqsdc/sweeptable.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wqsdc {

std::size_t SweepTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("SweepTable: no column named '" + name + "'");
}

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::string(buf);
}

void write_csv(const SweepTable& table, std::ostream& out) {
  for (const auto& w : table.warnings) {
    out << "# " << w << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("SweepTable: row width does not match header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ",";
      out << format_value(row[i]);
    }
    out << "\n";
  }
}

std::string to_csv_string(const SweepTable& table) {
  std::ostringstream oss;
  write_csv(table, oss);
  return oss.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

SweepTable read_csv(std::istream& in) {
  SweepTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
      table.warnings.push_back(line.substr(start));
      continue;
    }
    if (!have_header) {
      table.columns = split_fields(line);
      have_header = true;
      continue;
    }
    auto fields = split_fields(line);
    if (fields.size() != table.columns.size()) {
      throw std::runtime_error("read_csv: row width does not match header");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      std::size_t pos = 0;
      double v = std::stod(f, &pos);
      if (pos != f.size()) {
        throw std::runtime_error("read_csv: malformed number '" + f + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) {
    throw std::runtime_error("read_csv: missing header row");
  }
  return table;
}

SweepTable read_csv_string(const std::string& text) {
  std::istringstream iss(text);
  return read_csv(iss);
}

}  // namespace wqsdc
