#include "blockcalc/ext_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace blockcalc {

namespace {

template <class S>
std::vector<Mat<S>> all_generator_matrices(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  std::vector<Mat<S>> out;
  out.reserve(a.generators.size());
  for (std::size_t g = 0; g < a.generators.size(); ++g)
    out.push_back(generator_matrix(a, m, static_cast<int>(g)));
  return out;
}

template <class S>
void scale_columns_by_coef(Mat<S>& x, const std::function<S(const Rat&)>& coef, const std::vector<Rat>& w) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    S c = coef(w[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (!is_zero(x(i, j))) x(i, j) *= c;
  }
}

template <class S>
Vec<S> flatten(const Mat<S>& x) {
  Vec<S> v(x.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) v(k++) = x(i, j);
  return v;
}

template <class S>
Mat<S> unflatten(const Vec<S>& v, Eigen::Index rows, Eigen::Index cols) {
  Mat<S> x(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = v(k++);
  return x;
}

template <class S>
S trace_of_product(const Mat<S>& x, const Mat<S>& y) {
  S acc(0);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (!is_zero(x(i, j)) && !is_zero(y(j, i))) acc += x(i, j) * y(j, i);
  return acc;
}

// Unknown entries of a cocycle: for each non-grading generator g, positions
// (a, b) with weight(n_a) = weight(m_b) + deg g.
struct CocycleLayout {
  std::vector<int> gens;
  std::vector<std::vector<int>> index;  // per generator slot, a * dm + b -> variable or -1
  std::vector<std::vector<std::pair<int, int>>> pos;
  int dn = 0, dm = 0, nvars = 0;

  int slot_of(int g) const {
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (gens[k] == g) return static_cast<int>(k);
    return -1;
  }
};

template <class S>
CocycleLayout make_layout(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n) {
  CocycleLayout l;
  l.dn = n.dim();
  l.dm = m.dim();
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    if (a.generators[g].grading) continue;
    l.gens.push_back(static_cast<int>(g));
    std::vector<int> idx(static_cast<std::size_t>(l.dn * l.dm), -1);
    std::vector<std::pair<int, int>> pos;
    for (int x = 0; x < l.dn; ++x)
      for (int b = 0; b < l.dm; ++b)
        if (n.weights[static_cast<std::size_t>(x)] == m.weights[static_cast<std::size_t>(b)] + a.generators[g].degree) {
          idx[static_cast<std::size_t>(x * l.dm + b)] = l.nvars++;
          pos.emplace_back(x, b);
        }
    l.index.push_back(std::move(idx));
    l.pos.push_back(std::move(pos));
  }
  return l;
}

template <class S>
Cocycle<S> to_cocycle(const AlgebraPresentation<S>& a, const CocycleLayout& l, const Vec<S>& v) {
  Cocycle<S> c;
  for (std::size_t k = 0; k < l.gens.size(); ++k) {
    Mat<S> x = Mat<S>::Zero(l.dn, l.dm);
    for (const auto& [p, q] : l.pos[k]) x(p, q) = v(l.index[k][static_cast<std::size_t>(p * l.dm + q)]);
    c[a.generators[static_cast<std::size_t>(l.gens[k])].name] = std::move(x);
  }
  return c;
}

// Returns false if c has entries outside the layout.
template <class S>
bool from_cocycle(const AlgebraPresentation<S>& a, const CocycleLayout& l, const Cocycle<S>& c, Vec<S>& out) {
  out = Vec<S>::Zero(l.nvars);
  for (std::size_t k = 0; k < l.gens.size(); ++k) {
    const std::string& name = a.generators[static_cast<std::size_t>(l.gens[k])].name;
    auto it = c.find(name);
    if (it == c.end()) throw std::invalid_argument("cocycle missing generator " + name);
    const Mat<S>& x = it->second;
    if (x.rows() != l.dn || x.cols() != l.dm) throw std::invalid_argument("cocycle block has wrong shape");
    for (int p = 0; p < l.dn; ++p)
      for (int q = 0; q < l.dm; ++q) {
        if (is_zero(x(p, q))) continue;
        int v = l.index[k][static_cast<std::size_t>(p * l.dm + q)];
        if (v < 0) return false;
        out(v) = x(p, q);
      }
  }
  return true;
}

// Terms of each relation that are linear in the off-diagonal block of
// [[n, phi], [0, m]]. Rows are indexed by (relation, x, y) with x in n and
// y in m; every row is returned (possibly empty) so callers can add columns.
template <class S>
std::vector<std::map<int, S>> linearized_equations(const AlgebraPresentation<S>& a, const ModuleRep<S>& m,
                                                   const ModuleRep<S>& n, const CocycleLayout& l) {
  const auto gm = all_generator_matrices(a, m);
  const auto gn = all_generator_matrices(a, n);
  const int dn = l.dn, dm = l.dm;
  std::vector<std::map<int, S>> eqs(a.relations.size() * static_cast<std::size_t>(dn * dm));
  for (std::size_t r = 0; r < a.relations.size(); ++r) {
    const std::size_t base = r * static_cast<std::size_t>(dn * dm);
    for (const auto& t : a.relations[r].terms) {
      const std::size_t k = t.word.size();
      if (k == 0) continue;
      // suffix[i] = m(w_{i+1}) ... m(w_k) D(coef)
      std::vector<Mat<S>> suffix(k);
      Mat<S> acc = Mat<S>::Identity(dm, dm);
      scale_columns_by_coef(acc, t.coef, m.weights);
      for (std::size_t i = k; i-- > 0;) {
        suffix[i] = acc;
        acc = mul<S>(gm[static_cast<std::size_t>(t.word[i])], acc);
      }
      Mat<S> prefix = Mat<S>::Identity(dn, dn);
      for (std::size_t i = 0; i < k; ++i) {
        int g = t.word[i];
        int slot = l.slot_of(g);
        if (slot >= 0) {
          const Mat<S>& suf = suffix[i];
          for (const auto& [p, q] : l.pos[static_cast<std::size_t>(slot)]) {
            int var = l.index[static_cast<std::size_t>(slot)][static_cast<std::size_t>(p * dm + q)];
            for (int x = 0; x < dn; ++x) {
              const S& px = prefix(x, p);
              if (is_zero(px)) continue;
              for (int y = 0; y < dm; ++y) {
                const S& sy = suf(q, y);
                if (!is_zero(sy)) eqs[base + static_cast<std::size_t>(x * dm + y)][var] += px * sy;
              }
            }
          }
        }
        prefix = mul<S>(prefix, gn[static_cast<std::size_t>(g)]);
      }
    }
  }
  return eqs;
}

template <class S>
Echelon<S> coboundary_echelon(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n,
                              const CocycleLayout& l) {
  Echelon<S> e(l.nvars);
  const int dn = l.dn, dm = l.dm;
  for (int p = 0; p < dn; ++p)
    for (int q = 0; q < dm; ++q) {
      if (n.weights[static_cast<std::size_t>(p)] != m.weights[static_cast<std::size_t>(q)]) continue;
      // psi = E_pq; phi(g) = n(g) psi - psi m(g)
      std::map<int, S> row;
      for (std::size_t k = 0; k < l.gens.size(); ++k) {
        const std::string& g = a.generators[static_cast<std::size_t>(l.gens[k])].name;
        const Mat<S>& ng = n.act(g);
        const Mat<S>& mg = m.act(g);
        for (int x = 0; x < dn; ++x)
          if (!is_zero(ng(x, p))) row[l.index[k][static_cast<std::size_t>(x * dm + q)]] += ng(x, p);
        for (int y = 0; y < dm; ++y)
          if (!is_zero(mg(q, y))) row[l.index[k][static_cast<std::size_t>(p * dm + y)]] -= mg(q, y);
      }
      if (row.count(-1)) throw std::logic_error("coboundary leaves the weight layout");
      e.insert(to_sparse<S>(row));
    }
  return e;
}

template <class S>
Mat<S> graded_span(const std::vector<Mat<S>>& ops, const Mat<S>& u, const std::vector<Rat>& weights) {
  const Eigen::Index n = static_cast<Eigen::Index>(weights.size());
  std::map<Rat, std::vector<Eigen::Index>> by_weight;
  for (Eigen::Index i = 0; i < n; ++i) by_weight[weights[static_cast<std::size_t>(i)]].push_back(i);
  Echelon<S> e(static_cast<int>(n));
  std::vector<Vec<S>> basis;
  for (const auto& op : ops) {
    Mat<S> img = mul<S>(op, u);
    for (Eigen::Index j = 0; j < img.cols(); ++j) {
      for (const auto& [w, idx] : by_weight) {
        Vec<S> v = Vec<S>::Zero(n);
        bool nz = false;
        for (Eigen::Index i : idx)
          if (!is_zero(img(i, j))) {
            v(i) = img(i, j);
            nz = true;
          }
        if (nz && e.insert(v)) basis.push_back(v);
      }
    }
  }
  Mat<S> out(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = basis[j];
  return out;
}

template <class S>
std::vector<Mat<S>> algebra_radical(const std::vector<Mat<S>>& basis) {
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  Mat<S> gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      gram(i, j) = trace_of_product(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      gram(j, i) = gram(i, j);
    }
  Mat<S> ns = nullspace<S>(gram);
  std::vector<Mat<S>> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    Mat<S> x = Mat<S>::Zero(basis.front().rows(), basis.front().cols());
    for (Eigen::Index i = 0; i < k; ++i)
      if (!is_zero(ns(i, c))) x += basis[static_cast<std::size_t>(i)] * ns(i, c);
    out.push_back(std::move(x));
  }
  return out;
}

template <class S>
Mat<S> graded_kernel(const Mat<S>& d, const std::vector<Rat>& src, const std::vector<Rat>& tgt) {
  std::map<Rat, std::vector<int>> cols, rows;
  for (std::size_t j = 0; j < src.size(); ++j) cols[src[j]].push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < tgt.size(); ++i) rows[tgt[i]].push_back(static_cast<int>(i));
  std::vector<Vec<S>> basis;
  for (const auto& [w, cj] : cols) {
    Mat<S> block = Mat<S>::Zero(0, static_cast<Eigen::Index>(cj.size()));
    auto it = rows.find(w);
    if (it != rows.end()) block = select_rows<S>(select_columns<S>(d, cj), it->second);
    Mat<S> ns = nullspace<S>(block);
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
      Vec<S> v = Vec<S>::Zero(static_cast<Eigen::Index>(src.size()));
      for (std::size_t k = 0; k < cj.size(); ++k) v(cj[k]) = ns(static_cast<Eigen::Index>(k), c);
      basis.push_back(std::move(v));
    }
  }
  Mat<S> out(static_cast<Eigen::Index>(src.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = basis[j];
  return out;
}

// Block lower triangular module on x (+) b (+) c (+) x.
template <class S>
ModuleRep<S> assemble_diamond(const AlgebraPresentation<S>& a, const ModuleRep<S>& x, const ModuleRep<S>& b,
                              const ModuleRep<S>& c, const Cocycle<S>& beta_top, const Cocycle<S>& beta_soc,
                              const Cocycle<S>& gamma_top, const Cocycle<S>& gamma_soc, const S& gamma_scale,
                              const Cocycle<S>* delta) {
  const int dx = x.dim(), db = b.dim(), dc = c.dim();
  const int n = 2 * dx + db + dc;
  const int ob = dx, oc = dx + db, os = dx + db + dc;
  ModuleRep<S> out;
  out.weights = x.weights;
  out.weights.insert(out.weights.end(), b.weights.begin(), b.weights.end());
  out.weights.insert(out.weights.end(), c.weights.begin(), c.weights.end());
  out.weights.insert(out.weights.end(), x.weights.begin(), x.weights.end());
  for (const auto& gen : a.generators) {
    if (gen.grading) continue;
    const std::string& g = gen.name;
    Mat<S> m = Mat<S>::Zero(n, n);
    m.block(0, 0, dx, dx) = x.act(g);
    m.block(ob, ob, db, db) = b.act(g);
    m.block(oc, oc, dc, dc) = c.act(g);
    m.block(os, os, dx, dx) = x.act(g);
    m.block(ob, 0, db, dx) = beta_top.at(g);
    m.block(os, ob, dx, db) = beta_soc.at(g);
    m.block(oc, 0, dc, dx) = gamma_top.at(g);
    Mat<S> gs = gamma_soc.at(g);
    for (Eigen::Index i = 0; i < gs.rows(); ++i)
      for (Eigen::Index j = 0; j < gs.cols(); ++j)
        if (!is_zero(gs(i, j))) gs(i, j) *= gamma_scale;
    m.block(os, oc, dx, dc) = gs;
    if (delta) m.block(os, 0, dx, dx) = delta->at(g);
    out.action[g] = std::move(m);
  }
  return out;
}

}  // namespace

template <class S>
Mat<S> generator_matrix(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, int g) {
  const Generator& gen = a.generators.at(static_cast<std::size_t>(g));
  if (!gen.grading) return m.act(gen.name);
  Mat<S> d = Mat<S>::Zero(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i) d(i, i) = S(m.weights[static_cast<std::size_t>(i)]);
  return d;
}

template <class S>
Mat<S> evaluate_relation(const AlgebraPresentation<S>& a, const Relation<S>& rel, const ModuleRep<S>& m) {
  const int n = m.dim();
  Mat<S> sum = Mat<S>::Zero(n, n);
  for (const auto& t : rel.terms) {
    Mat<S> p = Mat<S>::Identity(n, n);
    for (int g : t.word) p = mul<S>(p, generator_matrix(a, m, g));
    scale_columns_by_coef(p, t.coef, m.weights);
    sum += p;
  }
  return sum;
}

template <class S>
void validate_shape(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  for (const auto& g : a.generators) {
    if (g.grading) continue;
    auto it = m.action.find(g.name);
    if (it == m.action.end()) throw std::invalid_argument("module lacks generator " + g.name);
    if (it->second.rows() != m.dim() || it->second.cols() != m.dim())
      throw std::invalid_argument("matrix for " + g.name + " has wrong dimensions");
  }
}

template <class S>
bool respects_grading(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  for (const auto& g : a.generators) {
    if (g.grading) continue;
    const Mat<S>& x = m.act(g.name);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        if (!is_zero(x(i, j)) &&
            m.weights[static_cast<std::size_t>(i)] != m.weights[static_cast<std::size_t>(j)] + g.degree)
          return false;
  }
  return true;
}

template <class S>
bool check_relations(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  validate_shape(a, m);
  if (!respects_grading(a, m)) return false;
  for (const auto& rel : a.relations)
    if (!is_zero_matrix<S>(evaluate_relation(a, rel, m))) return false;
  return true;
}

template <class S>
std::vector<Mat<S>> hom(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n) {
  validate_shape(a, m);
  validate_shape(a, n);
  const int dm = m.dim(), dn = n.dim();
  std::vector<int> idx(static_cast<std::size_t>(dn * dm), -1);
  std::vector<std::pair<int, int>> pos;
  for (int x = 0; x < dn; ++x)
    for (int y = 0; y < dm; ++y)
      if (n.weights[static_cast<std::size_t>(x)] == m.weights[static_cast<std::size_t>(y)]) {
        idx[static_cast<std::size_t>(x * dm + y)] = static_cast<int>(pos.size());
        pos.emplace_back(x, y);
      }
  if (pos.empty()) return {};
  Echelon<S> e(static_cast<int>(pos.size()));
  for (const auto& gen : a.generators) {
    if (gen.grading) continue;
    const Mat<S>& mg = m.act(gen.name);
    const Mat<S>& ng = n.act(gen.name);
    // (T m(g) - n(g) T)(x, y) = 0
    for (int x = 0; x < dn; ++x)
      for (int y = 0; y < dm; ++y) {
        std::map<int, S> row;
        for (int c = 0; c < dm; ++c) {
          int v = idx[static_cast<std::size_t>(x * dm + c)];
          if (v >= 0 && !is_zero(mg(c, y))) row[v] += mg(c, y);
        }
        for (int c = 0; c < dn; ++c) {
          int v = idx[static_cast<std::size_t>(c * dm + y)];
          if (v >= 0 && !is_zero(ng(x, c))) row[v] -= ng(x, c);
        }
        if (!row.empty()) e.insert(to_sparse<S>(row));
      }
  }
  std::vector<Mat<S>> out;
  for (const auto& v : e.nullspace()) {
    Mat<S> t = Mat<S>::Zero(dn, dm);
    for (std::size_t k = 0; k < pos.size(); ++k) t(pos[k].first, pos[k].second) = v(static_cast<Eigen::Index>(k));
    out.push_back(std::move(t));
  }
  return out;
}

template <class S>
ExtSpace<S> ext1(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n) {
  validate_shape(a, m);
  validate_shape(a, n);
  CocycleLayout l = make_layout(a, m, n);
  ExtSpace<S> out;
  if (l.nvars == 0) return out;
  Echelon<S> z(l.nvars);
  for (const auto& row : linearized_equations(a, m, n, l))
    if (!row.empty()) z.insert(to_sparse<S>(row));
  Echelon<S> b = coboundary_echelon(a, m, n, l);
  for (const auto& v : z.nullspace())
    if (b.insert(v)) out.cocycles.push_back(to_cocycle(a, l, v));
  out.dim = static_cast<int>(out.cocycles.size());
  return out;
}

template <class S>
Cocycle<S> zero_cocycle(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n) {
  Cocycle<S> c;
  for (const auto& g : a.generators)
    if (!g.grading) c[g.name] = Mat<S>::Zero(n.dim(), m.dim());
  return c;
}

template <class S>
bool is_cocycle(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n,
                const Cocycle<S>& c) {
  CocycleLayout l = make_layout(a, m, n);
  Vec<S> v;
  if (!from_cocycle(a, l, c, v)) return false;
  for (const auto& row : linearized_equations(a, m, n, l)) {
    S acc(0);
    for (const auto& [var, coef] : row) acc += coef * v(var);
    if (!is_zero(acc)) return false;
  }
  return true;
}

template <class S>
bool is_coboundary(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n,
                   const Cocycle<S>& c) {
  CocycleLayout l = make_layout(a, m, n);
  Vec<S> v;
  if (!from_cocycle(a, l, c, v)) return false;
  if (l.nvars == 0) return true;
  return coboundary_echelon(a, m, n, l).contains(v);
}

template <class S>
ModuleRep<S> extend(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n,
                    const Cocycle<S>& c) {
  validate_shape(a, m);
  validate_shape(a, n);
  const int dm = m.dim(), dn = n.dim();
  ModuleRep<S> out;
  out.weights = n.weights;
  out.weights.insert(out.weights.end(), m.weights.begin(), m.weights.end());
  for (const auto& gen : a.generators) {
    if (gen.grading) continue;
    auto it = c.find(gen.name);
    if (it == c.end() || it->second.rows() != dn || it->second.cols() != dm)
      throw std::invalid_argument("extend: cocycle block for " + gen.name + " has wrong shape");
    Mat<S> x = Mat<S>::Zero(dn + dm, dn + dm);
    x.topLeftCorner(dn, dn) = n.act(gen.name);
    x.topRightCorner(dn, dm) = it->second;
    x.bottomRightCorner(dm, dm) = m.act(gen.name);
    out.action[gen.name] = std::move(x);
  }
  if (!check_relations(a, out)) throw std::invalid_argument("extend: invalid cocycle");
  return out;
}

template <class S>
std::vector<Mat<S>> image_algebra(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  const int n = m.dim();
  std::vector<Mat<S>> gens;
  std::set<Rat> ws(m.weights.begin(), m.weights.end());
  for (const auto& w : ws) {
    Mat<S> p = Mat<S>::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if (m.weights[static_cast<std::size_t>(i)] == w) p(i, i) = S(1);
    gens.push_back(std::move(p));
  }
  for (const auto& g : a.generators)
    if (!g.grading && !is_zero_matrix<S>(m.act(g.name))) gens.push_back(m.act(g.name));
  Echelon<S> e(n * n);
  std::vector<Mat<S>> basis;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (e.insert(flatten<S>(gens[i]))) basis.push_back(gens[i]);
  // Left-multiplying the span of the projectors by generators until closed.
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (const auto& g : gens) {
      Mat<S> y = mul<S>(g, basis[head]);
      if (is_zero_matrix<S>(y)) continue;
      if (e.insert(flatten<S>(y))) basis.push_back(std::move(y));
    }
  }
  return basis;
}

template <class S>
Mat<S> radical_submodule(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  if (m.dim() == 0) return Mat<S>::Zero(0, 0);
  auto j = algebra_radical(image_algebra(a, m));
  if (j.empty()) return Mat<S>::Zero(m.dim(), 0);
  return graded_span<S>(j, Mat<S>::Identity(m.dim(), m.dim()), m.weights);
}

template <class S>
std::vector<ModuleRep<S>> radical_layer_modules(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  std::vector<ModuleRep<S>> out;
  if (m.dim() == 0) return out;
  auto j = algebra_radical(image_algebra(a, m));
  Mat<S> u = Mat<S>::Identity(m.dim(), m.dim());
  while (u.cols() > 0) {
    Mat<S> next = j.empty() ? Mat<S>::Zero(m.dim(), 0) : graded_span<S>(j, u, m.weights);
    if (next.cols() >= u.cols()) throw std::logic_error("radical series does not descend");
    ModuleRep<S> sub = submodule(m, u);
    out.push_back(quotient(sub, coordinates<S>(u, next)));
    u = next;
  }
  return out;
}

template <class S>
std::vector<std::string> identify_semisimple(const AlgebraPresentation<S>& a, const ModuleRep<S>& m,
                                             const Inventory<S>& inv) {
  std::vector<std::string> names;
  const auto mw = weight_multiset(m);
  int covered = 0;
  for (const auto& s : inv) {
    bool fits = s.module.dim() > 0;
    for (const auto& [w, k] : weight_multiset(s.module)) {
      auto it = mw.find(w);
      if (it == mw.end() || it->second < k) fits = false;
    }
    if (!fits) continue;
    int h = static_cast<int>(hom(a, s.module, m).size());
    if (h == 0) continue;
    int e = static_cast<int>(hom(a, s.module, s.module).size());
    for (int k = 0; k < h / e; ++k) names.push_back(s.name);
    covered += (h / e) * s.module.dim();
  }
  if (covered != m.dim())
    throw std::runtime_error("unidentifiable layer component: inventory covers " + std::to_string(covered) +
                             " of " + std::to_string(m.dim()) + " dimensions");
  std::sort(names.begin(), names.end());
  return names;
}

template <class S>
Layers radical_filtration(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const Inventory<S>& inv) {
  Layers out;
  for (const auto& layer : radical_layer_modules(a, m)) out.push_back(identify_semisimple(a, layer, inv));
  return out;
}

template <class S>
bool is_indecomposable(const AlgebraPresentation<S>& a, const ModuleRep<S>& m) {
  if (m.dim() == 0) throw std::invalid_argument("is_indecomposable: zero module");
  auto e = hom(a, m, m);
  const Eigen::Index k = static_cast<Eigen::Index>(e.size());
  Mat<S> gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      gram(i, j) = trace_of_product(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
      gram(j, i) = gram(i, j);
    }
  // dim End/rad End equals the rank of the trace form.
  return rank<S>(gram) == 1;
}

template <class S>
bool is_isomorphic(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n) {
  if (m.dim() != n.dim()) return false;
  if (weight_multiset(m) != weight_multiset(n)) return false;
  if (m.dim() == 0) return true;
  auto basis = hom(a, m, n);
  if (basis.empty()) return false;
  for (const auto& t : basis)
    if (!is_zero(determinant<S>(t))) return true;
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int trial = 0; trial < 32; ++trial) {
    Mat<S> t = Mat<S>::Zero(n.dim(), m.dim());
    for (const auto& b : basis) {
      long c = small(rng);
      if (c != 0) t += b * S(c);
    }
    if (!is_zero(determinant<S>(t))) return true;
  }
  // det of a weight-preserving map factors over weight blocks; each factor is
  // a polynomial of degree n_w in the hom coordinates. Test each for being
  // identically zero by evaluating on a grid with n_w + 1 points per variable.
  std::map<Rat, std::vector<int>> rows, cols;
  for (int i = 0; i < n.dim(); ++i) rows[n.weights[static_cast<std::size_t>(i)]].push_back(i);
  for (int j = 0; j < m.dim(); ++j) cols[m.weights[static_cast<std::size_t>(j)]].push_back(j);
  for (const auto& [w, ci] : cols) {
    const auto& ri = rows.at(w);
    std::vector<Mat<S>> blocks;
    for (const auto& b : basis) {
      Mat<S> blk = select_columns<S>(select_rows<S>(b, ri), ci);
      if (!is_zero_matrix<S>(blk)) blocks.push_back(std::move(blk));
    }
    if (blocks.empty()) return false;
    const long pts = static_cast<long>(ci.size()) + 1;
    const std::size_t k = blocks.size();
    double grid = std::pow(static_cast<double>(pts), static_cast<double>(k));
    auto eval = [&](const std::vector<long>& coef) {
      Mat<S> t = Mat<S>::Zero(static_cast<Eigen::Index>(ri.size()), static_cast<Eigen::Index>(ci.size()));
      for (std::size_t i = 0; i < k; ++i)
        if (coef[i] != 0) t += blocks[i] * S(coef[i]);
      return !is_zero(determinant<S>(t));
    };
    bool found = false;
    if (grid <= 4096.0) {
      std::vector<long> coef(k, 0);
      while (!found) {
        if (eval(coef)) found = true;
        std::size_t i = 0;
        while (i < k && ++coef[i] == pts) coef[i++] = 0;
        if (i == k) break;
      }
    } else {
      std::uniform_int_distribution<long> wide(-1000000, 1000000);
      for (int trial = 0; trial < 64 && !found; ++trial) {
        std::vector<long> coef(k);
        for (auto& c : coef) c = wide(rng);
        found = eval(coef);
      }
    }
    if (!found) return false;
  }
  return true;
}

template <class S>
ModuleRep<S> build_diamond(const AlgebraPresentation<S>& a, const NamedModule<S>& xn, const NamedModule<S>& bn,
                           const NamedModule<S>& cn) {
  const ModuleRep<S>& x = xn.module;
  const ModuleRep<S>& b = bn.module;
  const ModuleRep<S>& c = cn.module;
  if (is_isomorphic(a, b, c)) throw DiamondError("build_diamond: " + bn.name + " and " + cn.name + " are isomorphic");
  for (const auto* s : {&xn, &bn, &cn})
    if (ext1(a, s->module, s->module).dim != 0)
      throw DiamondError("build_diamond: Ext^1(" + s->name + ", " + s->name + ") is nonzero");
  ExtSpace<S> e_xb = ext1(a, x, b);  // quotient x over sub b
  ExtSpace<S> e_cx = ext1(a, c, x);
  if (e_xb.dim == 0) throw DiamondError("build_diamond: Ext^1(" + xn.name + ", " + bn.name + ") = 0");
  if (e_cx.dim == 0) throw DiamondError("build_diamond: Ext^1(" + cn.name + ", " + xn.name + ") = 0");
  ExtSpace<S> e_bx = ext1(a, b, x);
  ExtSpace<S> e_xc = ext1(a, x, c);
  if (e_bx.dim == 0 || e_xc.dim == 0)
    throw DiamondError("build_diamond: no extension joining the middle layer to both copies of " + xn.name);

  CocycleLayout l = make_layout(a, x, x);
  auto lin = linearized_equations(a, x, x, l);
  Inventory<S> inv{xn, bn, cn};
  std::vector<std::string> mid{bn.name, cn.name};
  std::sort(mid.begin(), mid.end());
  const Layers expected{{xn.name}, mid, {xn.name}};
  const int dx = x.dim();
  const int os = dx + b.dim() + c.dim();
  const Cocycle<S> zb = zero_cocycle(a, x, b), zbs = zero_cocycle(a, b, x);
  const Cocycle<S> zc = zero_cocycle(a, x, c), zcs = zero_cocycle(a, c, x);

  for (const auto& bt : e_xb.cocycles)
    for (const auto& bs : e_bx.cocycles)
      for (const auto& gt : e_xc.cocycles)
        for (const auto& gs : e_cx.cocycles) {
          // Corner residuals: linear part in delta plus the two path terms.
          ModuleRep<S> only_b = assemble_diamond<S>(a, x, b, c, bt, bs, zc, zcs, S(1), nullptr);
          ModuleRep<S> only_c = assemble_diamond<S>(a, x, b, c, zb, zbs, gt, gs, S(1), nullptr);
          const int tvar = l.nvars, cvar = l.nvars + 1;
          Echelon<S> sys(l.nvars + 2);
          for (std::size_t r = 0; r < a.relations.size(); ++r) {
            Mat<S> qb = evaluate_relation(a, a.relations[r], only_b).block(os, 0, dx, dx);
            Mat<S> qc = evaluate_relation(a, a.relations[r], only_c).block(os, 0, dx, dx);
            for (int p = 0; p < dx; ++p)
              for (int q = 0; q < dx; ++q) {
                std::map<int, S> row = lin[r * static_cast<std::size_t>(dx * dx) + static_cast<std::size_t>(p * dx + q)];
                if (!is_zero(qc(p, q))) row[tvar] += qc(p, q);
                if (!is_zero(qb(p, q))) row[cvar] += qb(p, q);
                if (!row.empty()) sys.insert(to_sparse<S>(row));
              }
          }
          auto ns = sys.nullspace();
          const Vec<S>* vc = nullptr;
          const Vec<S>* vt = nullptr;
          for (const auto& v : ns) {
            if (!vc && !is_zero(v(cvar))) vc = &v;
            if (!vt && !is_zero(v(tvar))) vt = &v;
          }
          if (!vc || !vt) continue;
          Vec<S> sol = *vc;
          for (long lam = 1; is_zero(sol(tvar)) || is_zero(sol(cvar)); ++lam) sol = *vc + *vt * S(lam);
          S inv_c = S(1) / sol(cvar);
          Cocycle<S> delta = to_cocycle(a, l, Vec<S>(sol.head(l.nvars) * inv_c));
          S scale = sol(tvar) * inv_c;
          ModuleRep<S> d = assemble_diamond<S>(a, x, b, c, bt, bs, gt, gs, scale, &delta);
          if (!check_relations(a, d)) continue;
          if (radical_filtration(a, d, inv) != expected) continue;
          if (!is_indecomposable(a, d)) continue;
          return d;
        }
  throw DiamondError("build_diamond: no solution with both length-two subquotients nonsplit");
}

template <class S>
Resolution<S> minimal_resolution(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, int length,
                                 const ProjectiveCoverOracle<S>& cover, const Inventory<S>& inv) {
  Resolution<S> res;
  ModuleRep<S> cur = m;
  Mat<S> incl = Mat<S>::Identity(m.dim(), m.dim());  // cur -> previous term
  for (int j = 0; j <= length && cur.dim() > 0; ++j) {
    Mat<S> rad = radical_submodule(a, cur);
    std::vector<int> comp;
    ModuleRep<S> head = quotient(cur, rad, &comp);
    std::vector<std::string> names = identify_semisimple(a, head, inv);
    names.erase(std::unique(names.begin(), names.end()), names.end());
    Echelon<S> span(cur.dim());
    for (Eigen::Index k = 0; k < rad.cols(); ++k) span.insert(Vec<S>(rad.col(k)));
    std::vector<ModuleRep<S>> parts;
    std::vector<Mat<S>> maps;
    std::vector<std::string> used;
    for (const auto& name : names) {
      ModuleRep<S> p = cover(name);
      for (const auto& t : hom(a, p, cur)) {
        bool grows = false;
        for (Eigen::Index k = 0; k < t.cols(); ++k)
          if (span.insert(Vec<S>(t.col(k)))) grows = true;
        if (grows) {
          parts.push_back(p);
          maps.push_back(t);
          used.push_back(name);
        }
      }
    }
    if (span.rank() != cur.dim()) throw std::logic_error("minimal_resolution: covers do not surject");
    ModuleRep<S> term = direct_sum(parts);
    Mat<S> d(cur.dim(), term.dim());
    Eigen::Index off = 0;
    for (const auto& t : maps) {
      d.middleCols(off, t.cols()) = t;
      off += t.cols();
    }
    res.terms.push_back(term);
    res.covers.push_back(used);
    res.maps.push_back(mul<S>(incl, d));
    Mat<S> k = graded_kernel<S>(d, term.weights, cur.weights);
    cur = submodule(term, k);
    incl = k;
  }
  return res;
}

template <class S>
std::vector<int> ext_dims(const AlgebraPresentation<S>& a, const Resolution<S>& res, const ModuleRep<S>& n,
                          int smax) {
  // rank of delta_j : Hom(P_j, n) -> Hom(P_{j+1}, n), f -> f d_{j+1}
  std::vector<int> homdim(static_cast<std::size_t>(smax) + 1, 0), rk(static_cast<std::size_t>(smax) + 1, 0);
  for (int j = 0; j <= smax; ++j) {
    if (static_cast<std::size_t>(j) >= res.terms.size()) break;
    auto h = hom(a, res.terms[static_cast<std::size_t>(j)], n);
    homdim[static_cast<std::size_t>(j)] = static_cast<int>(h.size());
    if (static_cast<std::size_t>(j + 1) >= res.maps.size() || h.empty()) continue;
    if (static_cast<std::size_t>(j + 1) >= res.terms.size()) continue;
    const Mat<S>& d = res.maps[static_cast<std::size_t>(j + 1)];
    Echelon<S> e(static_cast<int>(n.dim() * d.cols()));
    for (const auto& f : h) e.insert(flatten<S>(mul<S>(f, d)));
    rk[static_cast<std::size_t>(j)] = e.rank();
  }
  std::vector<int> out;
  for (int s = 0; s <= smax; ++s)
    out.push_back(homdim[static_cast<std::size_t>(s)] - rk[static_cast<std::size_t>(s)] -
                  (s > 0 ? rk[static_cast<std::size_t>(s - 1)] : 0));
  return out;
}

template <class S>
int ext_s(const AlgebraPresentation<S>& a, const ModuleRep<S>& m, const ModuleRep<S>& n, int s,
          const ProjectiveCoverOracle<S>& cover, const Inventory<S>& inv) {
  if (s < 0) throw std::invalid_argument("ext_s: negative degree");
  return ext_dims(a, minimal_resolution(a, m, s + 1, cover, inv), n, s).back();
}

#define BLOCKCALC_INSTANTIATE(S)                                                                              \
  template Mat<S> generator_matrix(const AlgebraPresentation<S>&, const ModuleRep<S>&, int);                 \
  template Mat<S> evaluate_relation(const AlgebraPresentation<S>&, const Relation<S>&, const ModuleRep<S>&); \
  template void validate_shape(const AlgebraPresentation<S>&, const ModuleRep<S>&);                          \
  template bool respects_grading(const AlgebraPresentation<S>&, const ModuleRep<S>&);                        \
  template bool check_relations(const AlgebraPresentation<S>&, const ModuleRep<S>&);                         \
  template std::vector<Mat<S>> hom(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&); \
  template ExtSpace<S> ext1(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&);        \
  template bool is_cocycle(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&,          \
                           const Cocycle<S>&);                                                              \
  template bool is_coboundary(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&,       \
                              const Cocycle<S>&);                                                           \
  template Cocycle<S> zero_cocycle(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&); \
  template ModuleRep<S> extend(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&,      \
                               const Cocycle<S>&);                                                          \
  template std::vector<Mat<S>> image_algebra(const AlgebraPresentation<S>&, const ModuleRep<S>&);            \
  template Mat<S> radical_submodule(const AlgebraPresentation<S>&, const ModuleRep<S>&);                     \
  template std::vector<ModuleRep<S>> radical_layer_modules(const AlgebraPresentation<S>&, const ModuleRep<S>&); \
  template std::vector<std::string> identify_semisimple(const AlgebraPresentation<S>&, const ModuleRep<S>&,  \
                                                        const Inventory<S>&);                               \
  template Layers radical_filtration(const AlgebraPresentation<S>&, const ModuleRep<S>&, const Inventory<S>&); \
  template bool is_indecomposable(const AlgebraPresentation<S>&, const ModuleRep<S>&);                       \
  template bool is_isomorphic(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&);      \
  template ModuleRep<S> build_diamond(const AlgebraPresentation<S>&, const NamedModule<S>&,                  \
                                      const NamedModule<S>&, const NamedModule<S>&);                        \
  template Resolution<S> minimal_resolution(const AlgebraPresentation<S>&, const ModuleRep<S>&, int,         \
                                            const ProjectiveCoverOracle<S>&, const Inventory<S>&);          \
  template std::vector<int> ext_dims(const AlgebraPresentation<S>&, const Resolution<S>&, const ModuleRep<S>&, \
                                     int);                                                                  \
  template int ext_s(const AlgebraPresentation<S>&, const ModuleRep<S>&, const ModuleRep<S>&, int,           \
                     const ProjectiveCoverOracle<S>&, const Inventory<S>&);

BLOCKCALC_INSTANTIATE(Rat)
BLOCKCALC_INSTANTIATE(CycNum)

#undef BLOCKCALC_INSTANTIATE

}  // namespace blockcalc
