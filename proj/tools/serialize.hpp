#pragma once

#include "todadual/rootsys.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace todadual::cli {

using json = nlohmann::json;

json to_json(const ComplexMatrix& m);
json to_json(const RealVector& v);

enum class Format { Json, Csv, Tsv };

Format parse_format(const std::string& name);

/// Delimited table with a header row; numbers printed with 17 significant digits.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows, Format format);

std::string format_number(double x);

/// Writes to `path`, or stdout when empty. Throws std::runtime_error on I/O failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace todadual::cli
