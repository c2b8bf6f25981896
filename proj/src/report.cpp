#include "coapprox/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace coapprox {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_vec(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

std::string Report::to_csv() const {
  std::string out = "coapprox-report v1\n";
  out += columns_;
  out += '\n';
  for (const auto& r : rows_) {
    out += r;
    out += '\n';
  }
  return out;
}

void Report::write_csv(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write report file '" + path + "'");
  f << to_csv();
}

}  // namespace coapprox
