#pragma once

#include <Eigen/Core>

#include "blockcalc/cyclotomic.hpp"
#include "blockcalc/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<blockcalc::Rat> : GenericNumTraits<blockcalc::Rat> {
  using Real = blockcalc::Rat;
  using NonInteger = blockcalc::Rat;
  using Literal = blockcalc::Rat;
  using Nested = blockcalc::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<blockcalc::CycNum> : GenericNumTraits<blockcalc::CycNum> {
  using Real = blockcalc::CycNum;
  using NonInteger = blockcalc::CycNum;
  using Literal = blockcalc::CycNum;
  using Nested = blockcalc::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0L); }
  static inline Real dummy_precision() { return Real(0L); }
  static inline Real highest() { return Real(0L); }
  static inline Real lowest() { return Real(0L); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace blockcalc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Mat<S> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Mat<S>::Constant(rows, cols, S(0L));
}

template <class S>
Mat<S> identity(Eigen::Index n) {
  Mat<S> m = zeros<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1L);
  return m;
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// Plain triple loop that skips zero entries. Exact matrices here are small
// and sparse, so this beats Eigen's blocked product for these scalars.
template <class S>
Mat<S> mul(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out = zeros<S>(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const S& x = a(i, k);
      if (is_zero(x)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const S& y = b(k, j);
        if (!is_zero(y)) out(i, j) += x * y;
      }
    }
  }
  return out;
}

}  // namespace blockcalc
