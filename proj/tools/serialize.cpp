#include "serialize.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace todadual::cli {

json to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

json to_json(const RealVector& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "tsv") return Format::Tsv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows, Format format) {
  const char sep = format == Format::Tsv ? '\t' : ',';
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += sep;
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += sep;
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed to write to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace todadual::cli
