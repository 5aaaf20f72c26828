#pragma once

// JSON matrix files:
//   {"dim": n, "complex": true,  "rows": [[[re, im], ...], ...]}
//   {"dim": n, "complex": false, "rows": [[x, ...], ...]}

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "gyromean/spectral.hpp"

namespace gyromean::io {

using nlohmann::json;

inline Matrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(Errc::parse_error, "matrix must be a JSON object");
    const auto n = j.at("dim").get<Index>();
    if (n < 1) throw Error(Errc::parse_error, "dim must be positive");
    const bool is_complex = j.value("complex", true);
    const auto& rows = j.at("rows");
    if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
      throw Error(Errc::parse_error, "expected " + std::to_string(n) + " rows");
    }
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Index>(row.size()) != n) {
        throw Error(Errc::parse_error, "row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries");
      }
      for (Index k = 0; k < n; ++k) {
        const auto& e = row[static_cast<std::size_t>(k)];
        if (is_complex) {
          if (!e.is_array() || e.size() != 2) throw Error(Errc::parse_error, "complex entries are [re, im] pairs");
          m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
          m(i, k) = Complex(e.get<double>(), 0.0);
        }
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"complex", true}, {"rows", std::move(rows)}};
}

inline Matrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return matrix_from_json(j);
}

inline Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace gyromean::io
