#pragma once

// Dehn p-colorings as the mod-p kernel of the Dehn coloring matrix, and the
// equivalence "nontrivial non-checkerboard coloring exists iff p divides
// the knot determinant" checked empirically.

#include "knotmat/dehn.hpp"
#include "knotmat/goeritz.hpp"
#include "knotmat/intmat.hpp"

#include <vector>

namespace knotmat {

struct DehnColoring {
  std::vector<Int> colors;  // by region id, residues in [0, p)
  Int modulus;
};

enum class ColoringKind { trivial, checkerboard, essential };

struct ColoringBasis {
  IntMatrix basis;  // m x dim, columns are kernel vectors, entries in [0, p)
  Int modulus;
  std::vector<int> col_region;  // matrix column -> region id

  Eigen::Index dimension() const { return basis.cols(); }
};

inline ColoringBasis coloring_space(const DehnMatrix& mD, const Int& p) {
  if (!is_prime(p)) throw Error(Errc::not_prime_modulus, p.str());
  ColoringBasis out;
  out.basis = kernel_mod_p(mD.matrix, p);
  out.modulus = p;
  out.col_region = mD.col_region;
  return out;
}

inline std::vector<DehnColoring> colorings(const ColoringBasis& cb) {
  std::vector<DehnColoring> out;
  const Eigen::Index m = cb.basis.rows();
  for (Eigen::Index k = 0; k < cb.basis.cols(); ++k) {
    DehnColoring col;
    col.modulus = cb.modulus;
    col.colors.assign(static_cast<size_t>(m), Int(0));
    for (Eigen::Index i = 0; i < m; ++i)
      col.colors[static_cast<size_t>(cb.col_region[i])] = cb.basis(i, k);
    out.push_back(std::move(col));
  }
  return out;
}

// trivial: constant; checkerboard: constant on each color class (the span
// of the constant and the shaded-indicator vectors); essential otherwise.
inline ColoringKind classify(const DehnColoring& col, const Checkerboard& cb) {
  bool constant = true;
  for (const Int& v : col.colors) constant = constant && (v == col.colors[0]);
  if (constant) return ColoringKind::trivial;
  const int m = static_cast<int>(col.colors.size());
  Int on_shaded, on_unshaded;
  bool seen_s = false, seen_u = false, split = true;
  for (int r = 0; r < m; ++r) {
    if (cb.is_shaded(r)) {
      if (!seen_s) { on_shaded = col.colors[r]; seen_s = true; }
      split = split && (col.colors[r] == on_shaded);
    } else {
      if (!seen_u) { on_unshaded = col.colors[r]; seen_u = true; }
      split = split && (col.colors[r] == on_unshaded);
    }
  }
  return split ? ColoringKind::checkerboard : ColoringKind::essential;
}

// Dehn p-colorable: an essential coloring exists, i.e. the solution space
// is bigger than the span of the constant and checkerboard vectors.
inline bool is_dehn_p_colorable(const DehnMatrix& mD, const Int& p) {
  return coloring_space(mD, p).dimension() > 2;
}

struct DivisibilityReport {
  Int modulus;
  bool colorable = false;
  bool divides = false;
  bool agree = false;
  Int determinant;
  Eigen::Index kernel_dim = 0;
};

// Runs the whole pipeline with the default shading and compares the
// colorability verdict against divisibility of the knot determinant;
// disagreement would be a library bug, so the report flags it.
inline DivisibilityReport determinant_divisibility_check(const Diagram& d, const Int& p) {
  if (!is_prime(p)) throw Error(Errc::not_prime_modulus, p.str());
  const RegionSet rs = faces(d);
  const Checkerboard cb = Checkerboard::compute(d, rs);
  const DehnMatrix mD = dehn_matrix(d, rs, cb);
  const GoeritzMatrix g = goeritz_matrix(d, rs, cb, goeritz_indices(d, rs, cb));
  DivisibilityReport rep;
  rep.modulus = p;
  rep.kernel_dim = coloring_space(mD, p).dimension();
  rep.colorable = rep.kernel_dim > 2;
  rep.determinant = knot_determinant(g);
  rep.divides = (rep.determinant % p).is_zero();
  rep.agree = (rep.colorable == rep.divides);
  return rep;
}

}  // namespace knotmat
