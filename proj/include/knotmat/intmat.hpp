#pragma once

// Exact integer linear algebra on Eigen dense matrices with the Int scalar:
// fraction-free determinant, kernels over prime fields, Smith normal form.

#include "knotmat/error.hpp"
#include "knotmat/int.hpp"

#include <Eigen/Core>
#include <utility>
#include <vector>

namespace knotmat {

template <typename Derived>
constexpr void assert_int_scalar() {
  static_assert(std::is_same_v<typename Derived::Scalar, Int>,
                "knotmat linear algebra operates on Int matrices");
}

// Bareiss fraction-free elimination; every division is exact.
// The determinant of the 0x0 matrix is 1 (empty product).
template <typename Derived>
Int det_exact(const Eigen::MatrixBase<Derived>& m) {
  assert_int_scalar<Derived>();
  if (m.rows() != m.cols())
    throw Error(Errc::not_square, std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()) + " matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (!a(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      a.row(piv).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (!p.is_odd()) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if ((p % d).is_zero()) return false;
  return true;
}

namespace detail {

inline Int mod_nonneg(Int x, const Int& p) {
  x %= p;
  if (x < 0) x += p;
  return x;
}

inline Int inverse_mod(const Int& a, const Int& p) {
  // extended Euclid; a nonzero mod p, p prime
  Int old_r = mod_nonneg(a, p), r = p;
  Int old_s = 1, s = 0;
  while (!r.is_zero()) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::exchange(r, tmp);
    tmp = old_s - q * s;
    old_s = std::exchange(s, tmp);
  }
  return mod_nonneg(old_s, p);
}

// Row-reduce a copy mod p; returns (rref, pivot columns).
inline std::pair<IntMatrix, std::vector<Eigen::Index>> rref_mod_p(IntMatrix a,
                                                                  const Int& p) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = mod_nonneg(a(i, j), p);
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Int inv = inverse_mod(a(r, c), p);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = mod_nonneg(a(r, j) * inv, p);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Int f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        a(i, j) = mod_nonneg(a(i, j) - f * a(r, j), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

template <typename Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& m, const Int& p) {
  assert_int_scalar<Derived>();
  if (!is_prime(p)) throw Error(Errc::not_prime_modulus, p.str());
  return static_cast<Eigen::Index>(detail::rref_mod_p(m, p).second.size());
}

// Basis of { v : m v = 0 mod p }, one column per basis vector, entries
// normalized into [0, p).
template <typename Derived>
IntMatrix kernel_mod_p(const Eigen::MatrixBase<Derived>& m, const Int& p) {
  assert_int_scalar<Derived>();
  if (!is_prime(p)) throw Error(Errc::not_prime_modulus, p.str());
  const Eigen::Index cols = m.cols();
  auto [rref, pivots] = detail::rref_mod_p(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;
  const Eigen::Index dim = cols - static_cast<Eigen::Index>(pivots.size());
  IntMatrix basis = IntMatrix::Zero(cols, dim);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = detail::mod_nonneg(-rref(static_cast<Eigen::Index>(r), free), p);
    ++k;
  }
  return basis;
}

// Invariant factors d_1 | d_2 | ... (nonnegative, zeros trailing); length
// min(rows, cols).  Product of the nonzero factors equals |det| for square
// nonsingular input.
template <typename Derived>
std::vector<Int> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  assert_int_scalar<Derived>();
  IntMatrix a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix to (t,t)
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (!a(i, j).is_zero() &&
              (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // submatrix all zero
      if (pi != t) a.row(pi).swap(a.row(t));
      if (pj != t) a.col(pj).swap(a.col(t));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        const Int q = a(i, t) / a(t, t);
        a.row(i) -= a.row(t) * q;
        if (!a(i, t).is_zero()) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        const Int q = a(t, j) / a(t, t);
        a.col(j) -= a.col(t) * q;
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;  // remainders left; pick a smaller pivot

      // enforce divisibility of the trailing submatrix by the pivot
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i)
        for (Eigen::Index j = t + 1; j < cols && divides; ++j)
          if (!(a(i, j) % a(t, t)).is_zero()) {
            a.row(t) += a.row(i);
            divides = false;
          }
      if (divides) break;
    }
  }
  std::vector<Int> factors(static_cast<size_t>(steps));
  for (Eigen::Index t = 0; t < steps; ++t) factors[static_cast<size_t>(t)] = abs(a(t, t));
  return factors;
}

}  // namespace knotmat
