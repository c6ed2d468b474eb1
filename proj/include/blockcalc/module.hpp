#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcalc/linalg.hpp"

namespace blockcalc {

struct Generator {
  std::string name;
  Rat degree;
  bool grading = false;
};

// One monomial of a relation. The word {g1, ..., gk} stands for the product
// g1 * ... * gk, so gk acts first. The coefficient is a function of the
// weight of the vector the monomial is applied to.
template <class S>
struct RelationTerm {
  std::function<S(const Rat&)> coef;
  std::vector<int> word;
};

template <class S>
struct Relation {
  std::string name;
  std::vector<RelationTerm<S>> terms;
};

template <class S>
RelationTerm<S> term(S c, std::vector<int> word) {
  return {[c](const Rat&) { return c; }, std::move(word)};
}

template <class S>
struct AlgebraPresentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<Relation<S>> relations;

  int index_of(const std::string& g) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == g) return static_cast<int>(i);
    throw std::out_of_range("unknown generator " + g);
  }
};

// Weight-graded module: one weight per basis vector, one matrix per
// non-grading generator. Grading generators act as diag(weights).
template <class S>
struct ModuleRep {
  std::vector<Rat> weights;
  std::map<std::string, Mat<S>> action;

  int dim() const { return static_cast<int>(weights.size()); }
  const Mat<S>& act(const std::string& g) const {
    auto it = action.find(g);
    if (it == action.end()) throw std::out_of_range("module has no action for " + g);
    return it->second;
  }
};

// phi(g) for each non-grading generator g, mapping the quotient into the sub.
template <class S>
using Cocycle = std::map<std::string, Mat<S>>;

template <class S>
struct ExtSpace {
  int dim = 0;
  std::vector<Cocycle<S>> cocycles;
};

template <class S>
struct NamedModule {
  std::string name;
  ModuleRep<S> module;
};

template <class S>
using Inventory = std::vector<NamedModule<S>>;

// Each layer is a sorted multiset of simple names, top layer first.
using Layers = std::vector<std::vector<std::string>>;

template <class S>
ModuleRep<S> zero_module(const AlgebraPresentation<S>& a) {
  ModuleRep<S> m;
  for (const auto& g : a.generators)
    if (!g.grading) m.action[g.name] = Mat<S>::Zero(0, 0);
  return m;
}

template <class S>
ModuleRep<S> direct_sum(const ModuleRep<S>& m, const ModuleRep<S>& n) {
  ModuleRep<S> out;
  out.weights = m.weights;
  out.weights.insert(out.weights.end(), n.weights.begin(), n.weights.end());
  const int dm = m.dim(), dn = n.dim();
  for (const auto& [g, a] : m.action) {
    Mat<S> x = Mat<S>::Zero(dm + dn, dm + dn);
    x.topLeftCorner(dm, dm) = a;
    x.bottomRightCorner(dn, dn) = n.act(g);
    out.action[g] = std::move(x);
  }
  return out;
}

template <class S>
ModuleRep<S> direct_sum(const std::vector<ModuleRep<S>>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
  ModuleRep<S> out = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) out = direct_sum(out, ms[i]);
  return out;
}

// Transport of structure along an invertible weight-preserving p: the new
// basis vectors are the columns of p.
template <class S>
ModuleRep<S> change_basis(const ModuleRep<S>& m, const Mat<S>& p) {
  Mat<S> pinv = inverse<S>(p);
  ModuleRep<S> out;
  out.weights = m.weights;
  for (const auto& [g, a] : m.action) out.action[g] = mul<S>(pinv, mul<S>(a, p));
  return out;
}

// Weight of each column of u; throws if a column mixes weights.
template <class S>
std::vector<Rat> column_weights(const ModuleRep<S>& m, const Mat<S>& u) {
  std::vector<Rat> out;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    const Rat* w = nullptr;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      if (is_zero(u(i, j))) continue;
      if (w && *w != m.weights[static_cast<std::size_t>(i)])
        throw std::domain_error("column is not weight-homogeneous");
      w = &m.weights[static_cast<std::size_t>(i)];
    }
    if (!w) throw std::domain_error("zero column in subspace basis");
    out.push_back(*w);
  }
  return out;
}

// Submodule spanned by the (weight-homogeneous, independent) columns of u.
template <class S>
ModuleRep<S> submodule(const ModuleRep<S>& m, const Mat<S>& u) {
  ModuleRep<S> out;
  out.weights = column_weights(m, u);
  for (const auto& [g, a] : m.action) out.action[g] = coordinates<S>(u, mul<S>(a, u));
  return out;
}

// Quotient by the submodule spanned by the columns of u. The quotient basis
// is a set of standard basis vectors completing u.
template <class S>
ModuleRep<S> quotient(const ModuleRep<S>& m, const Mat<S>& u, std::vector<int>* complement = nullptr) {
  const int n = m.dim();
  Echelon<S> e(n);
  for (Eigen::Index j = 0; j < u.cols(); ++j) e.insert(Vec<S>(u.col(j)));
  std::vector<int> comp;
  for (int i = 0; i < n; ++i) {
    SparseRow<S> row{{i, S(1)}};
    if (e.insert(row)) comp.push_back(i);
  }
  const int k = static_cast<int>(u.cols());
  const int q = static_cast<int>(comp.size());
  Mat<S> basis = Mat<S>::Zero(n, n);
  basis.leftCols(k) = u;
  for (int j = 0; j < q; ++j) basis(comp[static_cast<std::size_t>(j)], k + j) = S(1);
  Mat<S> binv = inverse<S>(basis);
  ModuleRep<S> out;
  for (int i : comp) out.weights.push_back(m.weights[static_cast<std::size_t>(i)]);
  for (const auto& [g, a] : m.action) {
    Mat<S> img = mul<S>(binv, mul<S>(a, basis.rightCols(q)));
    out.action[g] = img.bottomRows(q);
  }
  if (complement) *complement = comp;
  return out;
}

template <class S>
std::map<Rat, int> weight_multiset(const ModuleRep<S>& m) {
  std::map<Rat, int> out;
  for (const auto& w : m.weights) ++out[w];
  return out;
}

}  // namespace blockcalc
