#pragma once

#include <string>
#include <vector>

namespace cuspcheck {

/// Rows of strings with a fixed header, rendered as aligned text or CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string text() const;
  std::string csv() const;
};

std::string csv_field(const std::string& s);

}  // namespace cuspcheck
