#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

namespace blockcalc {

// Exact rational number. Wraps mpq_class but keeps value semantics plain
// (no GMP expression templates leak out, which keeps Eigen happy).
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rat(const std::string& text);

  const mpq_class& raw() const { return q_; }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }
  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  // Requires is_integer(); throws std::domain_error otherwise or on overflow.
  long to_long() const;
  Rat floor() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.q_.get_str(); }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }
// Eigen asks for these when it instantiates some generic paths.
inline const Rat& conj(const Rat& x) { return x; }
inline const Rat& real(const Rat& x) { return x; }
inline Rat imag(const Rat&) { return Rat(0); }
inline Rat abs2(const Rat& x) { return x * x; }

// Nonnegative representative of a modulo m (m > 0).
Rat mod(const Rat& a, const Rat& m);

struct RatHash {
  std::size_t operator()(const Rat& x) const {
    return std::hash<std::string>()(x.str());
  }
};

}  // namespace blockcalc
