#pragma once

// Reconstructing the Goeritz matrix from the Dehn coloring matrix.
//
// First route: for each shaded column j, re-sign the rows with nonzero j-th
// entry so that entry becomes the negative of the crossing's Goeritz index,
// then sum.  Needs the index table but works for any diagram, monogons
// included.
//
// Second route: purely algebraic, for prime diagrams.  Each unshaded region
// adjacent to the j-th shaded one meets it along a single arc, so exactly
// two selected rows hit each unshaded column; the cancellation requirement
// propagates signs uniquely up to one global flip per column, and a final
// per-row re-signing makes the left block symmetric, recovering the Goeritz
// matrix up to sign.

#include "knotmat/dehn.hpp"
#include "knotmat/goeritz.hpp"
#include "knotmat/regions.hpp"

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knotmat {

struct SignAssignment {
  std::vector<std::pair<Eigen::Index, int>> signs;  // (row, ±1), selection order
  Eigen::Index anchor = -1;

  int sign_of(Eigen::Index row) const {
    for (const auto& [r, s] : signs)
      if (r == row) return s;
    throw Error(Errc::index_out_of_range, "row not in assignment");
  }
};

struct ReconstructionResult {
  IntMatrix full;        // b x m
  int shaded_count = 0;  // b
  bool sign_fixed = true;

  IntMatrix left() const { return full.leftCols(shaded_count); }
  bool right_block_zero() const {
    for (Eigen::Index i = 0; i < full.rows(); ++i)
      for (Eigen::Index j = shaded_count; j < full.cols(); ++j)
        if (!full(i, j).is_zero()) return false;
    return true;
  }
};

// Flip the global sign so the first nonzero entry of row 0 is positive.
inline ReconstructionResult canonicalized(ReconstructionResult r) {
  for (Eigen::Index j = 0; j < r.full.cols(); ++j) {
    if (r.full(0, j).is_zero()) continue;
    if (r.full(0, j) < 0) r.full = -r.full;
    break;
  }
  return r;
}

inline ReconstructionResult thm1_reconstruct(const DehnMatrix& mD,
                                             const GoeritzIndexTable& idx) {
  const Eigen::Index m = mD.cols();
  const int b = mD.shaded_count;
  for (int c : mD.row_crossing)
    if (c < 0 || c >= static_cast<int>(idx.size()))
      throw Error(Errc::inconsistent_inputs,
                  "index table does not cover crossing " + std::to_string(c));
  ReconstructionResult out;
  out.shaded_count = b;
  out.sign_fixed = true;
  out.full = IntMatrix::Zero(b, m);
  for (int j = 0; j < b; ++j) {
    for (Eigen::Index r = 0; r < mD.rows(); ++r) {
      const Int& e = mD.matrix(r, j);
      if (e.is_zero()) continue;
      // s * e = -index  =>  s = -index * e  (entries are ±1)
      const Int s = Int(-idx[mD.row_crossing[r]]) * e;
      out.full.row(j) += mD.matrix.row(r) * s;
    }
  }
  return out;
}

struct ColumnSolve {
  SignAssignment signs;
  IntVector row;  // the summed row vector, length m
};

// Sign solving for one shaded column by breadth-first parity propagation:
// selected rows are linked whenever they share a nonzero unshaded column,
// with the constraint that their contributions there cancel.
inline ColumnSolve thm2_sign_solve(const DehnMatrix& mD, Eigen::Index j,
                                   std::optional<Eigen::Index> anchor = {},
                                   int anchor_sign = +1) {
  const Eigen::Index m = mD.cols();
  const int b = mD.shaded_count;
  if (j < 0 || j >= b)
    throw Error(Errc::column_out_of_range,
                "column " + std::to_string(j) + " is not a shaded column");
  std::vector<Eigen::Index> sel;
  for (Eigen::Index r = 0; r < mD.rows(); ++r)
    if (!mD.matrix(r, j).is_zero()) sel.push_back(r);

  ColumnSolve out;
  out.row = IntVector::Zero(m);
  if (sel.empty()) return out;

  std::vector<Eigen::Index> where(mD.rows(), -1);
  for (size_t i = 0; i < sel.size(); ++i) where[sel[i]] = static_cast<Eigen::Index>(i);

  // adjacency: (other selected row, linking unshaded column)
  std::vector<std::vector<std::pair<size_t, Eigen::Index>>> adj(sel.size());
  for (Eigen::Index k = b; k < m; ++k) {
    std::vector<size_t> hit;
    for (size_t i = 0; i < sel.size(); ++i)
      if (!mD.matrix(sel[i], k).is_zero()) hit.push_back(i);
    if (hit.empty()) continue;
    if (hit.size() != 2)
      throw Error(Errc::not_two_incident,
                  "unshaded column " + std::to_string(k) + " is nonzero in " +
                      std::to_string(hit.size()) + " selected rows");
    adj[hit[0]].emplace_back(hit[1], k);
    adj[hit[1]].emplace_back(hit[0], k);
  }

  Eigen::Index anchor_row = anchor.value_or(sel.front());
  if (anchor_row < 0 || anchor_row >= mD.rows() || where[anchor_row] < 0)
    throw Error(Errc::index_out_of_range,
                "anchor row " + std::to_string(anchor_row) + " not selected for column " +
                    std::to_string(j));

  std::vector<int> sign(sel.size(), 0);
  sign[where[anchor_row]] = anchor_sign;
  std::deque<size_t> queue{static_cast<size_t>(where[anchor_row])};
  while (!queue.empty()) {
    const size_t i = queue.front();
    queue.pop_front();
    for (const auto& [i2, k] : adj[i]) {
      const int prod = static_cast<int>(
          (mD.matrix(sel[i], k) * mD.matrix(sel[i2], k)).to_int64());
      const int want = -sign[i] * prod;
      if (sign[i2] == 0) {
        sign[i2] = want;
        queue.push_back(i2);
      } else if (sign[i2] != want) {
        throw Error(Errc::inconsistent,
                    "parity conflict through unshaded column " + std::to_string(k));
      }
    }
  }
  for (size_t i = 0; i < sel.size(); ++i)
    if (sign[i] == 0)
      throw Error(Errc::disconnected,
                  "sign constraints for column " + std::to_string(j) +
                      " split into several components");

  out.signs.anchor = anchor_row;
  for (size_t i = 0; i < sel.size(); ++i) {
    out.signs.signs.emplace_back(sel[i], sign[i]);
    out.row += (mD.matrix.row(sel[i]) * Int(sign[i])).transpose();
  }
  for (Eigen::Index k = b; k < m; ++k)
    if (!out.row(k).is_zero())
      throw Error(Errc::inconsistent, "summed row has a nonzero unshaded entry");
  return out;
}

struct SymmetrizeResult {
  std::vector<int> signs;            // eps, anchored with eps[0] = +1
  std::vector<int> canonical_signs;  // global sign normalized
};

// Per-row signs making the left b x b block symmetric; unique up to one
// global flip.  The canonical copy makes the first nonzero entry of row 0
// positive.
inline SymmetrizeResult symmetrize(const IntMatrix& rows, Eigen::Index b) {
  const Eigen::Index n = rows.rows();
  if (b > rows.cols() || n != b)
    throw Error(Errc::inconsistent_inputs, "expected one stacked row per shaded column");
  for (Eigen::Index j = 0; j < b; ++j)
    for (Eigen::Index k = 0; k < b; ++k)
      if (abs(rows(j, k)) != abs(rows(k, j)))
        throw Error(Errc::asymmetric_magnitudes,
                    "|a(" + std::to_string(j) + "," + std::to_string(k) +
                        ")| != |a(" + std::to_string(k) + "," + std::to_string(j) + ")|");
  std::vector<int> eps(n, 0);
  eps[0] = 1;
  std::deque<Eigen::Index> queue{0};
  while (!queue.empty()) {
    const Eigen::Index j = queue.front();
    queue.pop_front();
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == j || rows(j, k).is_zero()) continue;
      const int want = eps[j] * ((rows(j, k) * rows(k, j)).sign() > 0 ? 1 : -1);
      if (eps[k] == 0) {
        eps[k] = want;
        queue.push_back(k);
      } else if (eps[k] != want) {
        throw Error(Errc::inconsistent, "no consistent re-signing is symmetric");
      }
    }
  }
  for (int e : eps)
    if (e == 0)
      throw Error(Errc::disconnected, "shaded-adjacency graph is disconnected");

  SymmetrizeResult out;
  out.signs = eps;
  out.canonical_signs = eps;
  for (Eigen::Index k = 0; k < rows.cols(); ++k) {
    if (rows(0, k).is_zero()) continue;
    if ((rows(0, k) * Int(eps[0])) < 0)
      for (int& e : out.canonical_signs) e = -e;
    break;
  }
  return out;
}

struct Thm2Result {
  ReconstructionResult reconstruction;        // anchored: eps[0] = +1
  std::vector<ColumnSolve> columns;           // per-column audit trail
  std::vector<int> symmetrize_signs;
};

inline Thm2Result thm2_reconstruct(const Diagram& d, const RegionSet& rs,
                                   const DehnMatrix& mD,
                                   std::optional<Eigen::Index> anchor = {}) {
  if (!is_prime_diagram(d, rs))
    throw Error(Errc::not_prime_diagram, "the second construction requires a prime diagram");
  const Eigen::Index m = mD.cols();
  const int b = mD.shaded_count;
  Thm2Result out;
  IntMatrix stack = IntMatrix::Zero(b, m);
  for (int j = 0; j < b; ++j) {
    std::optional<Eigen::Index> a;
    if (anchor && !mD.matrix(*anchor, j).is_zero()) a = anchor;
    out.columns.push_back(thm2_sign_solve(mD, j, a));
    stack.row(j) = out.columns.back().row.transpose();
  }
  SymmetrizeResult sym = [&] {
    try {
      return symmetrize(stack.leftCols(b), b);
    } catch (const Error& e) {
      throw Error(Errc::symmetrize_failed, e.what());
    }
  }();
  out.symmetrize_signs = sym.signs;
  out.reconstruction.shaded_count = b;
  out.reconstruction.sign_fixed = false;  // determined up to one global sign
  out.reconstruction.full = IntMatrix::Zero(b, m);
  for (int j = 0; j < b; ++j)
    out.reconstruction.full.row(j) = stack.row(j) * Int(sym.signs[j]);
  return out;
}

}  // namespace knotmat
