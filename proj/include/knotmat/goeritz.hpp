#pragma once

// Direct construction of the (pre-)Goeritz matrix from shaded-region
// adjacency: for distinct shaded regions j,k the entry is the sum of the
// Goeritz indices of the crossings where they meet; the diagonal makes
// every row sum to zero.  Removing one row and column gives the reduced
// matrix whose |det| is the knot determinant.

#include "knotmat/dehn.hpp"
#include "knotmat/intmat.hpp"
#include "knotmat/regions.hpp"

#include <string>
#include <vector>

namespace knotmat {

struct GoeritzMatrix {
  IntMatrix matrix;            // b x b, symmetric, zero row sums
  std::vector<int> region_of;  // row/col -> shaded region id

  Eigen::Index size() const { return matrix.rows(); }
};

inline GoeritzMatrix goeritz_matrix(const Diagram& d, const RegionSet& rs,
                                    const Checkerboard& cb,
                                    const GoeritzIndexTable& idx) {
  if (static_cast<int>(idx.size()) != d.crossing_count())
    throw Error(Errc::inconsistent_inputs, "index table size != crossing count");
  const int b = cb.shaded_count();
  GoeritzMatrix g;
  g.matrix = IntMatrix::Zero(b, b);
  g.region_of.assign(cb.ordering().begin(), cb.ordering().begin() + b);
  for (int c = 0; c < d.crossing_count(); ++c) {
    // the shaded pair sits at opposite corners {0,2} or {1,3}
    Corner first{c, 0}, second{c, 2};
    if (!cb.is_shaded(rs.region_of(first))) {
      first = {c, 1};
      second = {c, 3};
    }
    const int j = cb.column_of(rs.region_of(first));
    const int k = cb.column_of(rs.region_of(second));
    if (j == k) continue;  // doubled region: contributes to no pair
    g.matrix(j, k) += idx[c];
    g.matrix(k, j) += idx[c];
  }
  for (int j = 0; j < b; ++j) {
    Int diag = 0;
    for (int l = 0; l < b; ++l)
      if (l != j) diag -= g.matrix(j, l);
    g.matrix(j, j) = diag;
  }
  return g;
}

// Delete row k and column k (0-based).
inline IntMatrix reduced(const GoeritzMatrix& g, Eigen::Index k) {
  const Eigen::Index b = g.size();
  if (k < 0 || k >= b)
    throw Error(Errc::index_out_of_range, "deletion index " + std::to_string(k));
  IntMatrix r(b - 1, b - 1);
  for (Eigen::Index i = 0, ri = 0; i < b; ++i) {
    if (i == k) continue;
    for (Eigen::Index j = 0, rj = 0; j < b; ++j) {
      if (j == k) continue;
      r(ri, rj) = g.matrix(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

// |det| of the reduced matrix; independent of the deletion index, the
// canonical one is the last.
inline Int knot_determinant(const GoeritzMatrix& g) {
  return abs(det_exact(reduced(g, g.size() - 1)));
}

}  // namespace knotmat
