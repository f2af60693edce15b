#pragma once

// Exact arbitrary-precision integer scalar for Eigen dense types.
//
// knotmat::Int wraps boost::multiprecision::cpp_int behind a plain value
// type so that Eigen's expression machinery sees an ordinary scalar with
// no competing expression templates or implicit container conversions.
// All arithmetic in this library is exact; there is no floating point
// anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace knotmat {

class Int {
 public:
  Int() : v_(0) {}
  template <std::integral T>
  Int(T v) : v_(v) {}
  explicit Int(const std::string& s) : v_(s) {}

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  // Truncating division, exact where the callers require it (Bareiss).
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }
  friend Int operator/(Int a, const Int& b) { return a /= b; }
  friend Int operator%(Int a, const Int& b) { return a %= b; }
  Int operator-() const { Int r; r.v_ = -v_; return r; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_odd() const { return boost::multiprecision::bit_test(v_, 0); }

  bool fits_int64() const {
    return v_ >= std::numeric_limits<std::int64_t>::min() &&
           v_ <= std::numeric_limits<std::int64_t>::max();
  }
  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Int does not fit in 64 bits");
    return v_.convert_to<std::int64_t>();
  }

  std::string str() const { return v_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Int& x) {
    return os << x.v_;
  }

  friend Int abs(const Int& x) { Int r; r.v_ = boost::multiprecision::abs(x.v_); return r; }
  friend Int gcd(const Int& a, const Int& b) {
    Int r; r.v_ = boost::multiprecision::gcd(a.v_, b.v_); return r;
  }

 private:
  boost::multiprecision::cpp_int v_;
};

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

}  // namespace knotmat

namespace Eigen {

template <>
struct NumTraits<knotmat::Int> : GenericNumTraits<knotmat::Int> {
  using Real = knotmat::Int;
  using NonInteger = knotmat::Int;
  using Nested = knotmat::Int;
  using Literal = long long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen
