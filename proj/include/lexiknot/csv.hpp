#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexiknot::csv {

// One header row, comma separated, double quotes allowed around fields.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;  // source line of each row

  int column(const std::string& name) const;  // throws ParseError if absent
};

Table read(std::istream& in);
std::vector<std::string> split_line(const std::string& line);
std::string quote(const std::string& field);

}  // namespace lexiknot::csv
