#pragma once

// Dehn coloring matrix: one row per crossing, one column per region with
// the shaded regions first.  At each crossing the two corners on the
// under-strand entry side of the over-strand get +1 and the two on the
// other side get -1; a region occupying both corners of an opposite pair
// cancels, which is where monogon rows with only two nonzero entries come
// from.  Each row is only defined up to sign by its equation.

#include "knotmat/int.hpp"
#include "knotmat/regions.hpp"

#include <utility>
#include <vector>

namespace knotmat {

struct DehnMatrix {
  IntMatrix matrix;               // c(D) x (c(D)+2)
  std::vector<int> col_region;    // column -> region id; columns 0..b-1 shaded
  std::vector<int> row_crossing;  // row -> crossing index
  int shaded_count = 0;           // b

  Eigen::Index rows() const { return matrix.rows(); }
  Eigen::Index cols() const { return matrix.cols(); }
};

inline DehnMatrix dehn_matrix(const Diagram& d, const RegionSet& rs,
                              const Checkerboard& cb) {
  const int n = d.crossing_count();
  const int m = rs.region_count();
  DehnMatrix out;
  out.matrix = IntMatrix::Zero(n, m);
  out.col_region = cb.ordering();
  out.shaded_count = cb.shaded_count();
  out.row_crossing.resize(n);
  for (int c = 0; c < n; ++c) {
    out.row_crossing[c] = c;
    out.matrix(c, cb.column_of(rs.region_of({c, 0}))) += 1;
    out.matrix(c, cb.column_of(rs.region_of({c, 3}))) += 1;
    out.matrix(c, cb.column_of(rs.region_of({c, 1}))) -= 1;
    out.matrix(c, cb.column_of(rs.region_of({c, 2}))) -= 1;
  }
  return out;
}

// Rows whose j-th entry is nonzero, with that entry.
inline std::vector<std::pair<Eigen::Index, int>> select_rows(const DehnMatrix& mD,
                                                             Eigen::Index j) {
  if (j < 0 || j >= mD.cols())
    throw Error(Errc::column_out_of_range, "column " + std::to_string(j));
  std::vector<std::pair<Eigen::Index, int>> sel;
  for (Eigen::Index r = 0; r < mD.rows(); ++r)
    if (!mD.matrix(r, j).is_zero())
      sel.emplace_back(r, static_cast<int>(mD.matrix(r, j).to_int64()));
  return sel;
}

}  // namespace knotmat
