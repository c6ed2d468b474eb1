#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blockcalc/eigen_support.hpp"

namespace blockcalc {

// Sparse row: (column, value) pairs sorted by column, values nonzero.
template <class S>
using SparseRow = std::vector<std::pair<int, S>>;

template <class S>
SparseRow<S> to_sparse(const Vec<S>& v) {
  SparseRow<S> out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
  return out;
}

template <class S>
SparseRow<S> to_sparse(const std::map<int, S>& m) {
  SparseRow<S> out;
  for (const auto& [c, x] : m)
    if (!is_zero(x)) out.emplace_back(c, x);
  return out;
}

// Row echelon form built one row at a time over an exact field. Each stored
// row has leading coefficient 1 at its pivot column. Inserting reduces the
// new row against the stored pivots, so insertion order decides which rows
// are kept as independent.
template <class S>
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow<S>>& rows() const { return rows_; }

  SparseRow<S> reduce(const SparseRow<S>& row) const {
    std::map<int, S> work;
    for (const auto& [c, x] : row) {
      if (c < 0 || c >= ncols_) throw std::out_of_range("Echelon: column out of range");
      if (!is_zero(x)) work[c] += x;
    }
    auto it = work.begin();
    while (it != work.end()) {
      if (is_zero(it->second)) {
        it = work.erase(it);
        continue;
      }
      auto piv = pivot_row_.find(it->first);
      if (piv == pivot_row_.end()) {
        ++it;
        continue;
      }
      S factor = it->second;
      int col = it->first;
      for (const auto& [c, x] : rows_[piv->second]) work[c] -= factor * x;
      it = work.upper_bound(col);
      work.erase(col);
    }
    return to_sparse<S>(work);
  }

  // Returns true (and stores the row) iff it is independent of the rows so far.
  bool insert(const SparseRow<S>& row) {
    SparseRow<S> red = reduce(row);
    if (red.empty()) return false;
    S lead = red.front().second;
    for (auto& e : red) e.second /= lead;
    pivot_row_[red.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(red));
    return true;
  }

  bool insert(const Vec<S>& v) { return insert(to_sparse<S>(v)); }

  bool contains(const SparseRow<S>& row) const { return reduce(row).empty(); }
  bool contains(const Vec<S>& v) const { return contains(to_sparse<S>(v)); }

  bool is_pivot(int col) const { return pivot_row_.count(col) != 0; }

  // Basis of { x : r . x = 0 for every stored row r }, one vector per free column.
  std::vector<Vec<S>> nullspace() const {
    std::vector<Vec<S>> out;
    for (int f = 0; f < ncols_; ++f) {
      if (is_pivot(f)) continue;
      Vec<S> x = Vec<S>::Zero(ncols_);
      x(f) = S(1);
      for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
        int p = it->first;
        if (p > f) continue;
        S acc(0);
        for (const auto& [c, v] : rows_[it->second])
          if (c != p && !is_zero(x(c))) acc += v * x(c);
        x(p) = -acc;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int ncols_;
  std::vector<SparseRow<S>> rows_;
  std::map<int, int> pivot_row_;
};

template <class S>
int rank(const Mat<S>& a) {
  Echelon<S> e(static_cast<int>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) e.insert(Vec<S>(a.row(i).transpose()));
  return e.rank();
}

// Basis of { x : a x = 0 } as the columns of the result.
template <class S>
Mat<S> nullspace(const Mat<S>& a) {
  Echelon<S> e(static_cast<int>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) e.insert(Vec<S>(a.row(i).transpose()));
  auto ns = e.nullspace();
  Mat<S> out = Mat<S>::Zero(a.cols(), static_cast<Eigen::Index>(ns.size()));
  for (std::size_t j = 0; j < ns.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = ns[j];
  return out;
}

// Indices of a greedy maximal independent subset of the columns of a.
template <class S>
std::vector<int> independent_columns(const Mat<S>& a) {
  Echelon<S> e(static_cast<int>(a.rows()));
  std::vector<int> out;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (e.insert(Vec<S>(a.col(j)))) out.push_back(static_cast<int>(j));
  return out;
}

template <class S>
Mat<S> select_columns(const Mat<S>& a, const std::vector<int>& idx) {
  Mat<S> out(a.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = a.col(idx[j]);
  return out;
}

template <class S>
Mat<S> select_rows(const Mat<S>& a, const std::vector<int>& idx) {
  Mat<S> out(static_cast<Eigen::Index>(idx.size()), a.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = a.row(idx[i]);
  return out;
}

template <class S>
Mat<S> column_basis(const Mat<S>& a) {
  return select_columns(a, independent_columns(a));
}

template <class S>
S determinant(Mat<S> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = a.rows();
  S det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) return S(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    S inv = S(1) / a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      S f = a(i, k) * inv;
      for (Eigen::Index j = k; j < n; ++j)
        if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

template <class S>
Mat<S> inverse(Mat<S> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = a.rows();
  Mat<S> inv = Mat<S>::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != k) {
      a.row(p).swap(a.row(k));
      inv.row(p).swap(inv.row(k));
    }
    S s = S(1) / a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!is_zero(a(k, j))) a(k, j) *= s;
      if (!is_zero(inv(k, j))) inv(k, j) *= s;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      S f = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
        if (!is_zero(inv(k, j))) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// For u with independent columns and v inside its column span, the unique x
// with u x = v. Throws if v leaves the span.
template <class S>
Mat<S> coordinates(const Mat<S>& u, const Mat<S>& v) {
  if (u.cols() == 0) {
    if (!is_zero_matrix(v)) throw std::domain_error("coordinates: vector outside span");
    return Mat<S>::Zero(0, v.cols());
  }
  Mat<S> ut = u.transpose();
  std::vector<int> rows = independent_columns<S>(ut);
  if (static_cast<Eigen::Index>(rows.size()) != u.cols())
    throw std::domain_error("coordinates: columns not independent");
  Mat<S> x = mul<S>(inverse<S>(select_rows(u, rows)), select_rows(v, rows));
  if (mul<S>(u, x) != v) throw std::domain_error("coordinates: vector outside span");
  return x;
}

}  // namespace blockcalc
