#pragma once

// JSON and CSV emission for matrices and pipeline reports.

#include "knotmat/dehn.hpp"
#include "knotmat/goeritz.hpp"
#include "knotmat/int.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace knotmat {

inline nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_int64());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = Int(j.at(i).at(k).get<long long>());
  return m;
}

inline std::string to_csv(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json to_json(const DehnMatrix& mD) {
  return {{"rows", mD.rows()},
          {"cols", mD.cols()},
          {"shaded_count", mD.shaded_count},
          {"matrix", to_json(mD.matrix)},
          {"col_region", mD.col_region},
          {"row_crossing", mD.row_crossing}};
}

inline nlohmann::json to_json(const GoeritzMatrix& g) {
  return {{"size", g.size()},
          {"matrix", to_json(g.matrix)},
          {"region_of", g.region_of}};
}

}  // namespace knotmat
