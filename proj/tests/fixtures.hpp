#pragma once

// Fixture diagrams and their reference data.
//
// The 8_19 fixture reproduces the diagram of the worked example this
// library is tested against: k819_region_order lists the discovered region
// ids in the reference labeling (five shaded regions first), and the
// expected matrices below are the reference Dehn and Goeritz matrices in
// that labeling.  The remaining PD codes are standard diagrams of table
// knots (closed braids, 4-plats and pretzels), a one-crossing kink, and a
// granny-knot connected sum as the non-prime case.

#include <knotmat/knotmat.hpp>

#include <string>
#include <vector>

namespace fixtures {

struct Fixture {
  std::string name;
  std::string pd;
  long long determinant;  // |det| of the reduced Goeritz matrix
  bool prime;             // combinatorial primality of the diagram
  int crossings;
  bool table_knot;        // a knot-table diagram with <= 9 crossings
};

inline const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> fs = {
      {"3_1", "X 6 3 1 4 / X 4 1 5 2 / X 2 5 3 6", 3, true, 3, true},
      {"4_1", "X 8 5 1 6 / X 6 4 7 3 / X 4 1 5 2 / X 2 8 3 7", 5, true, 4, true},
      {"5_1", "X 10 5 1 6 / X 6 1 7 2 / X 2 7 3 8 / X 8 3 9 4 / X 4 9 5 10", 5,
       true, 5, true},
      {"5_2", "X 10 8 1 7 / X 7 1 6 2 / X 2 6 3 5 / X 8 4 9 3 / X 5 9 4 10", 7,
       true, 5, true},
      {"6_1",
       "X 12 10 1 9 / X 9 1 8 2 / X 2 8 3 7 / X 7 3 6 4 / X 10 5 11 6 / "
       "X 4 11 5 12",
       9, true, 6, true},
      {"6_2",
       "X 12 7 1 8 / X 8 1 9 2 / X 2 9 3 10 / X 7 4 6 3 / X 10 6 11 5 / "
       "X 5 11 4 12",
       11, true, 6, true},
      {"6_3",
       "X 12 7 1 8 / X 8 1 9 2 / X 7 10 6 9 / X 2 6 3 5 / X 10 4 11 3 / "
       "X 5 11 4 12",
       13, true, 6, true},
      {"7_1",
       "X 14 7 1 8 / X 8 1 9 2 / X 2 9 3 10 / X 10 3 11 4 / X 4 11 5 12 / "
       "X 12 5 13 6 / X 6 13 7 14",
       7, true, 7, true},
      {"7_2",
       "X 14 12 1 11 / X 11 1 10 2 / X 2 10 3 9 / X 9 3 8 4 / X 4 8 5 7 / "
       "X 12 6 13 5 / X 7 13 6 14",
       11, true, 7, true},
      {"7_3",
       "X 14 10 1 9 / X 9 1 8 2 / X 2 8 3 7 / X 10 4 11 3 / X 4 12 5 11 / "
       "X 12 6 13 5 / X 7 13 6 14",
       13, true, 7, true},
      {"7_4",
       "X 14 10 1 9 / X 9 1 8 2 / X 2 8 3 7 / X 4 14 5 13 / X 13 5 12 6 / "
       "X 6 12 7 11 / X 10 4 11 3",
       15, true, 7, true},
      {"8_1",
       "X 16 14 1 13 / X 13 1 12 2 / X 2 12 3 11 / X 11 3 10 4 / X 4 10 5 9 / "
       "X 9 5 8 6 / X 14 7 15 8 / X 6 15 7 16",
       13, true, 8, true},
      {"8_19",
       "X 16 9 1 10 / X 15 4 16 5 / X 12 1 13 2 / X 11 6 12 7 / X 8 3 9 4 / "
       "X 7 14 8 15 / X 5 10 6 11 / X 2 13 3 14",
       3, true, 8, true},
      {"9_1",
       "X 18 9 1 10 / X 10 1 11 2 / X 2 11 3 12 / X 12 3 13 4 / X 4 13 5 14 / "
       "X 14 5 15 6 / X 6 15 7 16 / X 16 7 17 8 / X 8 17 9 18",
       9, true, 9, true},
      {"9_2",
       "X 18 16 1 15 / X 15 1 14 2 / X 2 14 3 13 / X 13 3 12 4 / X 4 12 5 11 / "
       "X 11 5 10 6 / X 6 10 7 9 / X 16 8 17 7 / X 9 17 8 18",
       15, true, 9, true},
      // further diagrams of knots already in the table above
      {"trefoil", "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3", 3, true, 3, false},
      {"3_1_pretzel", "X 6 4 1 3 / X 2 6 3 5 / X 4 2 5 1", 3, true, 3, false},
      {"4_1_plat", "X 8 6 1 5 / X 5 1 4 2 / X 6 3 7 4 / X 2 7 3 8", 5, true, 4, false},
      {"5_2_pretzel", "X 10 8 1 7 / X 7 1 6 2 / X 2 6 3 5 / X 4 10 5 9 / X 8 4 9 3",
       7, true, 5, false},
      // special cases
      {"unknot", "unknot", 1, false, 0, false},
      {"kink", "X 1 2 2 1", 1, false, 1, false},
      {"granny",
       "X 12 3 1 4 / X 4 1 5 2 / X 2 5 3 6 / X 12 9 11 8 / X 8 11 7 10 / "
       "X 10 7 9 6",
       9, false, 6, false},
  };
  return fs;
}

inline const Fixture& by_name(const std::string& name) {
  for (const auto& f : corpus())
    if (f.name == name) return f;
  throw std::runtime_error("no fixture named " + name);
}

inline knotmat::Diagram diagram(const std::string& name) {
  const Fixture& f = by_name(name);
  return knotmat::Diagram::parse(f.pd, f.name);
}

// 8_19 reference labeling: discovered region ids in the reference order
// R1..R5 (shaded), then R6..R9, R0.
inline const std::vector<int> k819_region_order{2, 0, 8, 5, 6, 3, 1, 4, 9, 7};
inline constexpr int k819_selector = 2;  // discovered id of the shaded unbounded region

inline knotmat::IntMatrix make_matrix(const std::vector<std::vector<long long>>& rows) {
  knotmat::IntMatrix m(static_cast<Eigen::Index>(rows.size()),
                       rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

// Reference 8x10 Dehn coloring matrix of the 8_19 diagram.
inline knotmat::IntMatrix k819_dehn() {
  return make_matrix({
      {-1, 1, 0, 0, 0, -1, 1, 0, 0, 0},
      {0, -1, 0, 1, 0, 0, -1, 1, 0, 0},
      {-1, 0, 0, 0, 1, 1, 0, 0, 0, -1},
      {0, 0, 1, 0, -1, -1, 0, 1, 0, 0},
      {-1, 0, 0, 1, 0, 0, -1, 0, 1, 0},
      {0, 0, 0, -1, 1, 0, 0, 1, -1, 0},
      {0, 1, -1, 0, 0, -1, 0, 1, 0, 0},
      {-1, 0, 0, 0, 1, 0, 0, 0, -1, 1},
  });
}

// Reference 5x5 Goeritz matrix of the 8_19 diagram.
inline knotmat::IntMatrix k819_goeritz() {
  return make_matrix({
      {4, -1, 0, -1, -2},
      {-1, -1, 1, 1, 0},
      {0, 1, -2, 0, 1},
      {-1, 1, 0, -1, 1},
      {-2, 0, 1, 1, 0},
  });
}

// Column sums produced by the algebraic sign solve with default anchors.
inline knotmat::IntMatrix k819_thm2_stack() {
  return make_matrix({
      {-4, 1, 0, 1, 2, 0, 0, 0, 0, 0},
      {-1, -1, 1, 1, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, 0, -1, 0, 0, 0, 0, 0},
      {1, -1, 0, 1, -1, 0, 0, 0, 0, 0},
      {-2, 0, 1, 1, 0, 0, 0, 0, 0, 0},
  });
}

}  // namespace fixtures
