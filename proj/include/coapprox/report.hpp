#pragma once

#include <string>
#include <vector>

#include "coapprox/vec.hpp"

namespace coapprox {

// CSV report with the versioned header line. Formatting is locale-free and
// deterministic so identical jobs produce byte-identical files.
class Report {
 public:
  explicit Report(std::string columns) : columns_(std::move(columns)) {}

  void add_row(std::string row) { rows_.push_back(std::move(row)); }
  std::string to_csv() const;
  void write_csv(const std::string& path) const;

  std::size_t size() const { return rows_.size(); }

 private:
  std::string columns_;
  std::vector<std::string> rows_;
};

std::string format_double(double v);
std::string format_vec(const Vec& v);  // semicolon-joined coordinates

}  // namespace coapprox
