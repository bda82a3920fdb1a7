#pragma once

#include <charconv>
#include <string>
#include <vector>

namespace liefrenet::cli {

// Shortest decimal form that round-trips the binary value, so identical
// runs diff clean and reloading loses nothing.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

}  // namespace liefrenet::cli
