#include "blockcalc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace blockcalc {

namespace {

using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Long division a = q*b + r, b nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rat lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    Rat c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, Poly>& cache() {
  static std::map<int, Poly> c;
  return c;
}

Poly compute_phi(int m) {
  Poly p(static_cast<std::size_t>(m) + 1);
  p[0] = Rat(-1);
  p[static_cast<std::size_t>(m)] = Rat(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    if (!r.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
    p = std::move(q);
  }
  return p;
}

// Reduce modulo Phi_m in place, leaving exactly phi(m) coefficients.
void reduce(int m, Poly& p) {
  const Poly& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k].is_zero()) continue;
    Rat c = p[k];
    std::size_t shift = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) p[shift + j] -= c * phi[j];
  }
  p.resize(deg);
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

void require_same_order(const CycNum& a, const CycNum& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw std::domain_error("euler_phi: order must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const Poly& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::domain_error("cyclotomic_polynomial: order must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(m);
    if (it != cache().end()) return it->second;
  }
  Poly p = compute_phi(m);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(m, std::move(p)).first->second;
}

CycNum::CycNum() : order_(1), c_{Rat(0)} {}
CycNum::CycNum(long n) : order_(1), c_{Rat(n)} {}
CycNum::CycNum(const Rat& x) : order_(1), c_{x} {}

CycNum::CycNum(int order, std::vector<Rat> poly) : order_(order), c_(std::move(poly)) {
  if (order < 1) throw std::domain_error("CycNum: order must be positive");
  reduce(order_, c_);
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

std::complex<double> CycNum::evaluate() const {
  std::complex<double> z = std::polar(1.0, 2.0 * M_PI / order_);
  std::complex<double> acc = 0.0, pw = 1.0;
  for (const auto& x : c_) {
    acc += x.to_double() * pw;
    pw *= z;
  }
  return acc;
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k];
    } else {
      if (c_[k] != Rat(1)) os << c_[k] << "*";
      os << "z" << order_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.order_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (order_ != o.order_) {
    int m = lcm_order(order_, o.order_);
    *this = cyc_embed(*this, m);
    if (o.order_ != m) return *this += cyc_embed(o, m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.order_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    Rat s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (order_ != o.order_) {
    int m = lcm_order(order_, o.order_);
    CycNum a = cyc_embed(*this, m);
    CycNum b = o.order_ == m ? o : cyc_embed(o, m);
    *this = cyc_mul(a, b);
    return *this;
  }
  *this = cyc_mul(*this, o);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= cyc_inv(o); }

CycNum operator-(const CycNum& a) { return cyc_neg(a); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int m = lcm_order(a.order_, b.order_);
  return cyc_embed(a, m).c_ == cyc_embed(b, m).c_;
}

CycNum cyc_root(int m, long k) {
  if (m < 1) throw std::domain_error("cyc_root: order must be positive");
  long e = ((k % m) + m) % m;
  Poly p(static_cast<std::size_t>(e) + 1);
  p[static_cast<std::size_t>(e)] = Rat(1);
  return CycNum(m, std::move(p));
}

CycNum cyc_add(const CycNum& a, const CycNum& b) {
  require_same_order(a, b);
  return CycNum(a) += b;
}

CycNum cyc_mul(const CycNum& a, const CycNum& b) {
  require_same_order(a, b);
  return CycNum(a.order(), poly_mul(a.coeffs(), b.coeffs()));
}

CycNum cyc_neg(const CycNum& a) {
  Poly p = a.coeffs();
  for (auto& x : p) x = -x;
  return CycNum(a.order(), std::move(p));
}

CycNum cyc_inv(const CycNum& a) {
  if (a.is_zero()) throw std::domain_error("cyc_inv: division by zero");
  if (a.order() == 1) return CycNum(Rat(1) / a.coeffs()[0]);
  // Extended Euclid: track s with s*a = r (mod Phi).
  Poly r0 = cyclotomic_polynomial(a.order());
  Poly r1 = a.coeffs();
  trim(r1);
  Poly s0, s1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyc_inv: gcd with cyclotomic polynomial not constant");
  for (auto& x : s0) x /= r0[0];
  return CycNum(a.order(), std::move(s0));
}

CycNum cyc_embed(const CycNum& a, int target_order) {
  if (target_order < 1 || target_order % a.order() != 0)
    throw std::invalid_argument("cyc_embed: " + std::to_string(a.order()) + " does not divide " +
                                std::to_string(target_order));
  if (target_order == a.order()) return a;
  std::size_t step = static_cast<std::size_t>(target_order / a.order());
  const Poly& c = a.coeffs();
  Poly p((c.size() - 1) * step + 1);
  for (std::size_t k = 0; k < c.size(); ++k) p[k * step] = c[k];
  return CycNum(target_order, std::move(p));
}

CycNum cyc_pow(const CycNum& a, long e) {
  CycNum base = e < 0 ? cyc_inv(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycNum acc = cyc_embed(CycNum(1L), a.order());
  while (n) {
    if (n & 1UL) acc = cyc_mul(acc, base);
    n >>= 1;
    if (n) base = cyc_mul(base, base);
  }
  return acc;
}

CycNum qint(long n, const CycNum& q) {
  if (q * q == CycNum(1L)) throw std::domain_error("qint: q = +-1");
  CycNum num = cyc_pow(q, n) - cyc_pow(q, -n);
  CycNum den = q - cyc_inv(q);
  return num / den;
}

}  // namespace blockcalc
