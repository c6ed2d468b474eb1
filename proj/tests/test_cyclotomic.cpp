#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "blockcalc/cyclotomic.hpp"

using namespace blockcalc;
using cd = std::complex<double>;

namespace {

cd root(int m, long k) { return std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / m); }

CycNum random_element(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> c(-4, 4), d(1, 3);
  std::vector<Rat> p;
  for (int i = 0; i < m; ++i) p.push_back(Rat(c(rng), d(rng)));
  return CycNum(m, p);
}

cd shadow(const CycNum& x) { return x.evaluate(); }

// Random expression tree evaluated exactly and in floating point side by side.
std::pair<CycNum, cd> random_expr(std::mt19937& rng, int m, int depth) {
  std::uniform_int_distribution<int> op(0, 4);
  if (depth == 0) {
    CycNum x = random_element(rng, m);
    return {x, shadow(x)};
  }
  auto [a, fa] = random_expr(rng, m, depth - 1);
  auto [b, fb] = random_expr(rng, m, depth - 1 > 2 ? 2 : depth - 1);
  switch (op(rng)) {
    case 0: return {a + b, fa + fb};
    case 1: return {a - b, fa - fb};
    case 2: return {a * b, fa * fb};
    case 3:
      if (b.is_zero()) return {a, fa};
      return {a / b, fa / fb};
    default: return {-a, -fa};
  }
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(cyc_root(4, 2) == CycNum(-1L));
  for (int m = 1; m <= 12; ++m) CHECK(cyc_root(m, 0) == CycNum(1L));
  CHECK(cyc_pow(cyc_root(3, 1), 3) == CycNum(1L));
  CHECK(cyc_root(7, 9) == cyc_root(7, 2));
  CHECK(cyc_root(7, -1) == cyc_root(7, 6));
  CHECK(cyc_root(5, 3).coeffs().size() == 4u);
}

TEST_CASE("cyclotomic polynomials match the product over primitive roots") {
  for (int m = 1; m <= 30; ++m) {
    // Oracle: expand prod (x - zeta^k), gcd(k, m) = 1, in complex doubles.
    std::vector<cd> p{1.0};
    for (int k = 1; k <= m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      std::vector<cd> q(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= p[i] * root(m, k);
      }
      p = q;
    }
    const auto& phi = cyclotomic_polynomial(m);
    REQUIRE(phi.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(phi[i].to_double() == doctest::Approx(p[i].real()).epsilon(1e-9));
    int count = 0;
    for (int k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    CHECK(euler_phi(m) == count);
  }
}

TEST_CASE("field operations on the examples") {
  CycNum z3 = cyc_root(3, 1);
  CHECK(cyc_add(cyc_add(CycNum(3, {Rat(1)}), z3), cyc_mul(z3, z3)).is_zero());
  std::mt19937 rng(1);
  CycNum a = random_element(rng, 9);
  CHECK(cyc_mul(a, cyc_embed(CycNum(1L), 9)) == a);
  CycNum z6 = cyc_root(6, 1);
  CHECK(cyc_mul(z6, z6) == cyc_embed(z3, 6));
  CHECK(std::abs(shadow(cyc_mul(z6, z6)) - root(3, 1)) < 1e-12);
  CHECK(cyc_inv(CycNum(1L)) == CycNum(1L));
  CycNum one_plus = CycNum(3, {Rat(1)}) + z3;
  CHECK(cyc_inv(one_plus) == cyc_neg(z3));
  CHECK(cyc_mul(one_plus, cyc_inv(one_plus)) == CycNum(3, {Rat(1)}));
  for (int m : {5, 8, 12})
    for (long k = 0; k < m; ++k) CHECK(cyc_inv(cyc_root(m, k)) == cyc_root(m, m - k));
  CHECK_THROWS_AS(cyc_inv(CycNum(5, {})), std::domain_error);
}

TEST_CASE("embedding") {
  CycNum minus_one(2, {Rat(-1)});
  CHECK(cyc_embed(minus_one, 4) == cyc_root(4, 2));
  CHECK(cyc_embed(minus_one, 4).order() == 4);
  CHECK(cyc_embed(cyc_root(3, 1), 6) == cyc_root(6, 2));
  CHECK(std::abs(shadow(cyc_embed(cyc_root(3, 1), 6)) - root(6, 2)) < 1e-12);
  for (int m : {1, 5, 12}) CHECK(cyc_embed(CycNum(1L), m) == CycNum(1L));
  CHECK_THROWS(cyc_embed(cyc_root(3, 1), 8));
}

TEST_CASE("strict free functions, auto-embedding operators") {
  CHECK_THROWS(cyc_add(cyc_root(3, 1), cyc_root(4, 1)));
  CHECK_THROWS(cyc_mul(cyc_root(3, 1), cyc_root(4, 1)));
  CycNum s = cyc_root(3, 1) + cyc_root(4, 1);
  CHECK(s.order() == 12);
  CHECK(std::abs(shadow(s) - (root(3, 1) + root(4, 1))) < 1e-12);
  CHECK(cyc_root(4, 1) * cyc_root(4, 1) == CycNum(-1L));
  CHECK(CycNum(Rat(1, 2)) == CycNum(8, {Rat(1, 2)}));
}

TEST_CASE("quantum integers") {
  for (int r = 2; r <= 9; ++r) {
    CycNum q = cyc_root(2 * r, 1);
    CHECK(qint(0, q).is_zero());
    CHECK(qint(1, q) == CycNum(1L));
    CHECK(qint(r, q).is_zero());
    for (long n = -2 * r; n <= 2 * r; ++n)
      CHECK(qint(n, q).evaluate().real() ==
            doctest::Approx(std::sin(M_PI * n / r) / std::sin(M_PI / r)).epsilon(1e-9));
  }
  CycNum z8 = cyc_root(8, 1);
  CHECK(qint(2, z8) == z8 + cyc_root(8, -1));
  CHECK_THROWS_AS(qint(2, CycNum(1L)), std::domain_error);
  CHECK_THROWS_AS(qint(2, CycNum(-1L)), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240611);
  for (int m : {5, 7, 8, 12, 15, 24}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * cyc_inv(a) == CycNum(m, {Rat(1)}));
      CHECK(cyc_embed(a * b, 2 * m) == cyc_embed(a, 2 * m) * cyc_embed(b, 2 * m));
      CHECK(cyc_embed(a + b, 3 * m) == cyc_embed(a, 3 * m) + cyc_embed(b, 3 * m));
    }
  }
}

TEST_CASE("numerical shadow of random expressions") {
  std::mt19937 rng(7);
  for (int m : {5, 8, 9, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto [x, fx] = random_expr(rng, m, 1 + trial % 8);
      cd ex = shadow(x);
      CHECK(std::abs(ex - fx) <= 1e-9 * std::max(1.0, std::abs(fx)));
    }
  }
}
