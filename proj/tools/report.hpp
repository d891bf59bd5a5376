#pragma once

// Report serialization shared by the command-line tool and its tests.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "seesaw/errors.hpp"
#include "seesaw/numeric.hpp"

namespace seesaw::report {

// nlohmann::json stores objects in std::map, so keys come out sorted.
using Json = nlohmann::json;

inline Json number(double value, double error_bound) {
  return Json{{"value", value}, {"error_bound", error_bound}};
}

inline Json complex_number(const Complex<double>& z, double error_bound) {
  return Json{{"re", z.re}, {"im", z.im}, {"error_bound", error_bound}};
}

// Flattens nested objects into dotted keys for the text and csv formats.
inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

inline std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  if (format == "csv") os << "key,value\n";
  for (const auto& [k, v] : rows) os << k << (format == "csv" ? "," : ": ") << v << "\n";
  return os.str();
}

// Coefficient dump "n,a_n" with a header line; read_coefficients inverts it.
inline std::string coefficients_csv(const std::vector<Integer>& a) {
  std::ostringstream os;
  os << "n,a_n\n";
  for (std::size_t n = 1; n < a.size(); ++n) os << n << "," << a[n].get_str() << "\n";
  return os.str();
}

inline std::vector<Integer> read_coefficients(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  require(static_cast<bool>(std::getline(is, line)) && line == "n,a_n", "read_coefficients: missing header");
  std::vector<Integer> a{0};
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    require(comma != std::string::npos, "read_coefficients: malformed row '" + line + "'");
    long n = std::stol(line.substr(0, comma));
    require(n == static_cast<long>(a.size()), "read_coefficients: rows out of order");
    a.emplace_back(line.substr(comma + 1));
  }
  return a;
}

}  // namespace seesaw::report
