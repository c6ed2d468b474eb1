#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include "blockcalc/rational.hpp"

namespace blockcalc {

// Element of Q(zeta_M), stored in the power basis 1, z, ..., z^{phi(M)-1}
// reduced modulo the cyclotomic polynomial Phi_M, so equal elements of the
// same order have equal coefficient vectors.
//
// Arithmetic operators accept mixed orders and work in the lcm order.
// The cyc_* free functions are strict and throw on an order mismatch.
class CycNum {
 public:
  CycNum();
  CycNum(long n);  // NOLINT(google-explicit-constructor)
  CycNum(int n) : CycNum(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rat& x);  // NOLINT(google-explicit-constructor)
  // Reduces an arbitrary-length polynomial in zeta_M.
  CycNum(int order, std::vector<Rat> poly);

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rat rational_part() const { return c_[0]; }

  std::complex<double> evaluate() const;
  std::string str() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator-(const CycNum& a);

  // Field equality, independent of the order used to store either side.
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.str(); }

 private:
  int order_;
  std::vector<Rat> c_;
};

// Degree of Phi_M.
int euler_phi(int m);
// Integer coefficients of Phi_M, constant term first; cached per order.
const std::vector<Rat>& cyclotomic_polynomial(int m);

CycNum cyc_root(int m, long k);
CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_mul(const CycNum& a, const CycNum& b);
CycNum cyc_neg(const CycNum& a);
CycNum cyc_inv(const CycNum& a);
CycNum cyc_embed(const CycNum& a, int target_order);
CycNum cyc_pow(const CycNum& a, long e);
// (q^n - q^-n)/(q - q^-1); throws std::domain_error if q^2 = 1.
CycNum qint(long n, const CycNum& q);

inline bool is_zero(const CycNum& x) { return x.is_zero(); }

}  // namespace blockcalc
