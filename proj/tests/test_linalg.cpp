#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <Eigen/LU>

#include "blockcalc/cyclotomic.hpp"
#include "blockcalc/linalg.hpp"

using namespace blockcalc;

namespace {

Mat<Rat> random_matrix(std::mt19937& rng, int rows, int cols, int rank_cap) {
  // Product of random rows x k and k x cols factors, so the rank is at most k.
  std::uniform_int_distribution<int> d(-3, 3);
  const int k = std::min({rows, cols, rank_cap});
  Mat<Rat> a(rows, k), b(k, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = Rat(d(rng));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = Rat(d(rng), 1 + (i + j) % 2);
  return mul<Rat>(a, b);
}

int float_rank(const Mat<Rat>& a) {
  Eigen::MatrixXd f(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) f(i, j) = a(i, j).to_double();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(f);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

// Leibniz expansion over all permutations.
Rat leibniz(const Mat<Rat>& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rat total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    Rat term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= a(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("rank and nullspace agree with a floating point oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 7, cols = 1 + (trial * 3) % 8, cap = 1 + trial % 5;
    Mat<Rat> a = random_matrix(rng, rows, cols, cap);
    const int rk = rank(a);
    CHECK(rk == float_rank(a));
    Mat<Rat> n = nullspace(a);
    CHECK(n.cols() == cols - rk);
    CHECK(is_zero_matrix<Rat>(mul<Rat>(a, n)));
    CHECK(rank(n) == n.cols());
    CHECK(static_cast<int>(independent_columns(a).size()) == rk);
    CHECK(rank(column_basis(a)) == rk);
  }
}

TEST_CASE("determinant and inverse") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Mat<Rat> a = random_matrix(rng, n, n, n);
      CHECK(determinant(a) == leibniz(a));
      if (!determinant(a).is_zero()) {
        Mat<Rat> inv = inverse(a);
        CHECK(mul<Rat>(a, inv) == Mat<Rat>::Identity(n, n));
      } else {
        CHECK_THROWS_AS(inverse(a), std::domain_error);
      }
    }
  }
  Mat<Rat> singular = random_matrix(rng, 4, 4, 2);
  CHECK(determinant(singular).is_zero());
}

TEST_CASE("determinant over a cyclotomic field") {
  // Vandermonde in the 5th roots of unity: product of differences.
  const int n = 5;
  Mat<CycNum> v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i, j) = cyc_root(5, static_cast<long>(i) * j);
  CycNum expected(1L);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) expected *= cyc_root(5, j) - cyc_root(5, i);
  CHECK(determinant(v) == expected);
  Mat<CycNum> inv = inverse(v);
  CHECK(mul<CycNum>(v, inv) == Mat<CycNum>::Identity(n, n));
}

TEST_CASE("incremental echelon") {
  Echelon<Rat> e(3);
  Vec<Rat> a(3), b(3), c(3);
  a << Rat(1), Rat(2), Rat(3);
  b << Rat(2), Rat(4), Rat(6);
  c << Rat(0), Rat(1), Rat(1);
  CHECK(e.insert(a));
  CHECK_FALSE(e.insert(b));
  CHECK(e.insert(c));
  CHECK(e.rank() == 2);
  CHECK(e.contains(Vec<Rat>(a + c)));
  auto ns = e.nullspace();
  REQUIRE(ns.size() == 1u);
  CHECK(a.dot(ns[0]) == Rat(0));
  CHECK(c.dot(ns[0]) == Rat(0));
}

TEST_CASE("coordinates in a column span") {
  std::mt19937 rng(3);
  Mat<Rat> u = column_basis(random_matrix(rng, 6, 4, 3));
  Mat<Rat> x(u.cols(), 2);
  for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, 0) = Rat(static_cast<long>(i) + 1), x(i, 1) = Rat(-1, 2);
  CHECK(coordinates<Rat>(u, mul<Rat>(u, x)) == x);
  Mat<Rat> outside = Mat<Rat>::Zero(6, 1);
  for (int k = 0; k < 6; ++k) {
    outside(k, 0) = Rat(1);
    if (rank(Mat<Rat>((Mat<Rat>(6, u.cols() + 1) << u, outside).finished())) > u.cols()) break;
    outside(k, 0) = Rat(0);
  }
  CHECK_THROWS_AS(coordinates<Rat>(u, outside), std::domain_error);
}
