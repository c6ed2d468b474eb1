#include "blockcalc/quantum_group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace blockcalc::qg {

using zigzag::ZigzagName;

namespace {

long exponent_of(const QGParams& p, const Rat& h) {
  Rat k = h * Rat(p.N);
  if (!k.is_integer())
    throw std::invalid_argument("weight " + h.str() + " is not in (1/" + std::to_string(p.N) + ")Z");
  return k.to_long();
}

bool in_rZ(const QGParams& p, const Rat& beta) { return beta.is_integer() && beta.to_long() % p.r == 0; }

void require_block_index(const QGParams& p, int i) {
  if (i < 0 || i > p.r - 2)
    throw std::invalid_argument("simple index " + std::to_string(i) + " outside [0, " + std::to_string(p.r - 2) + "]");
}

std::string label_name(int i, const Rat& beta) { return "S" + std::to_string(i) + "@" + beta.str(); }

Mat<CycNum> zero_mat(int n) { return Mat<CycNum>::Zero(n, n); }

}  // namespace

void QGParams::validate() const {
  if (r < 2) throw std::invalid_argument("QGParams: r must be at least 2");
  if (N < 1) throw std::invalid_argument("QGParams: N must be positive");
}

CycNum qpow(const QGParams& p, const Rat& h) { return cyc_root(p.order(), exponent_of(p, h)); }

CycNum qbracket(const QGParams& p, const Rat& h) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, Rat>, CycNum> cache;
  auto key = std::make_tuple(p.r, p.N, h);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int m = p.order();
  const long k = exponent_of(p, h);
  CycNum num = cyc_root(m, k) - cyc_root(m, -k);
  CycNum den = cyc_root(m, p.N) - cyc_root(m, -p.N);
  CycNum v = num / den;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

std::string QGModuleLabel::str() const {
  switch (kind) {
    case Kind::Simple:
      return "S(" + std::to_string(i) + "," + beta.str() + ")";
    case Kind::Typical:
      return "V(" + beta.str() + ")";
    case Kind::Projective:
      return "P(" + std::to_string(i) + "," + beta.str() + ")";
  }
  return "";
}

AlgebraPresentation<CycNum> uqh_presentation(const QGParams& p) {
  p.validate();
  AlgebraPresentation<CycNum> a;
  a.name = "uqh(sl2) r=" + std::to_string(p.r) + " N=" + std::to_string(p.N);
  a.generators = {{"H", Rat(0), true}, {"E", Rat(2), false}, {"F", Rat(-2), false}};
  const int H = 0, E = 1, F = 2;
  const CycNum one(1L), m_one(-1L), two(2L), m_two(-2L);
  a.relations.push_back({"HE", {term(one, {H, E}), term(m_one, {E, H}), term(m_two, {E})}});
  a.relations.push_back({"HF", {term(one, {H, F}), term(m_one, {F, H}), term(two, {F})}});
  RelationTerm<CycNum> bracket{[p](const Rat& h) { return -qbracket(p, h); }, {}};
  a.relations.push_back({"EF", {term(one, {E, F}), term(m_one, {F, E}), bracket}});
  a.relations.push_back({"E^r", {term(one, std::vector<int>(static_cast<std::size_t>(p.r), E))}});
  a.relations.push_back({"F^r", {term(one, std::vector<int>(static_cast<std::size_t>(p.r), F))}});
  return a;
}

ModuleRep<CycNum> simple_module(const QGParams& p, int i, const Rat& beta) {
  p.validate();
  require_block_index(p, i);
  // C_beta with E = F = 0 is a module only when [beta] = 0.
  if (!in_rZ(p, beta)) throw std::invalid_argument("simple_module: beta = " + beta.str() + " is not in rZ");
  const int d = i + 1;
  ModuleRep<CycNum> m;
  for (int j = 0; j < d; ++j) m.weights.push_back(beta + Rat(i - 2 * j));
  Mat<CycNum> e = zero_mat(d), f = zero_mat(d);
  for (int j = 0; j + 1 < d; ++j) f(j + 1, j) = CycNum(1L);
  for (int j = 1; j < d; ++j) e(j - 1, j) = qbracket(p, Rat(j)) * qbracket(p, beta + Rat(i - j + 1));
  m.action["E"] = e;
  m.action["F"] = f;
  return m;
}

ModuleRep<CycNum> typical_module(const QGParams& p, const Rat& alpha) {
  p.validate();
  exponent_of(p, alpha);
  const int d = p.r;
  ModuleRep<CycNum> m;
  for (int j = 0; j < d; ++j) m.weights.push_back(alpha + Rat(p.r - 1 - 2 * j));
  Mat<CycNum> e = zero_mat(d), f = zero_mat(d);
  for (int j = 0; j + 1 < d; ++j) f(j + 1, j) = CycNum(1L);
  for (int j = 1; j < d; ++j) e(j - 1, j) = qbracket(p, Rat(j)) * qbracket(p, alpha + Rat(p.r - j));
  m.action["E"] = e;
  m.action["F"] = f;
  return m;
}

ModuleRep<CycNum> projective_module(const QGParams& p, int i, const Rat& beta) {
  require_block_index(p, i);
  if (!in_rZ(p, beta)) throw std::invalid_argument("projective_module: beta = " + beta.str() + " is not in rZ");
  const int j = p.r - i - 2;
  const Rat r(p.r);
  NamedModule<CycNum> x{label_name(i, beta), simple_module(p, i, beta)};
  NamedModule<CycNum> b{label_name(j, beta - r), simple_module(p, j, beta - r)};
  NamedModule<CycNum> c{label_name(j, beta + r), simple_module(p, j, beta + r)};
  return build_diamond(uqh_presentation(p), x, b, c);
}

ModuleRep<CycNum> build(const QGParams& p, const QGModuleLabel& label) {
  switch (label.kind) {
    case QGModuleLabel::Kind::Simple:
      return simple_module(p, label.i, label.beta);
    case QGModuleLabel::Kind::Typical:
      return typical_module(p, label.beta);
    case QGModuleLabel::Kind::Projective:
      return projective_module(p, label.i, label.beta);
  }
  throw std::logic_error("unknown label kind");
}

std::pair<QGModuleLabel, QGModuleLabel> typical_composition(const QGParams& p, const Rat& alpha) {
  if (!alpha.is_integer() || in_rZ(p, alpha))
    throw std::invalid_argument("typical_composition: V(" + alpha.str() + ") is simple");
  const long a = alpha.to_long();
  // alpha = r - i - 1 + lr with 0 <= i <= r - 2.
  const long l = (Rat(a) / Rat(p.r)).floor().to_long();
  const long i = p.r - 1 - (a - l * p.r);
  using K = QGModuleLabel::Kind;
  QGModuleLabel sub{K::Simple, static_cast<int>(i), Rat(l * p.r)};
  QGModuleLabel head{K::Simple, static_cast<int>(p.r - i - 2), Rat((l + 1) * p.r)};
  return {sub, head};
}

QGModuleLabel block_simple_label(const QGParams& p, int i, int n) {
  require_block_index(p, i);
  const int k = (n % 2 == 0) ? i : p.r - i - 2;
  return {QGModuleLabel::Kind::Simple, k, Rat(static_cast<long>(n) * p.r)};
}

Inventory<CycNum> qg_atypical_inventory(const QGParams& p, int i, int w) {
  Inventory<CycNum> inv;
  for (int n = -w; n <= w; ++n) inv.push_back({zigzag::L(n).str(), build(p, block_simple_label(p, i, n))});
  return inv;
}

BlockObjects::BlockObjects(const QGParams& p, int i) : p_(p), i_(i), a_(uqh_presentation(p)) {
  require_block_index(p, i);
}

const ModuleRep<CycNum>& BlockObjects::get(const ZigzagName& name) {
  const std::string key = name.str();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  using K = ZigzagName::Kind;
  ModuleRep<CycNum> m;
  auto nonsplit = [&](const ZigzagName& quot, const ZigzagName& sub) {
    const ModuleRep<CycNum>& q = get(quot);
    const ModuleRep<CycNum>& s = get(sub);
    ExtSpace<CycNum> e = ext1(a_, q, s);
    if (e.dim != 1)
      throw std::logic_error("building " + key + ": expected a one-dimensional Ext^1, found " + std::to_string(e.dim));
    return extend(a_, q, s, e.cocycles.front());
  };
  switch (name.kind) {
    case K::L:
      m = build(p_, block_simple_label(p_, i_, name.n));
      break;
    case K::Eplus:
      m = nonsplit(zigzag::L(name.n + 1), zigzag::L(name.n));
      break;
    case K::Eminus:
      m = nonsplit(zigzag::L(name.n - 1), zigzag::L(name.n));
      break;
    case K::P: {
      QGModuleLabel l = block_simple_label(p_, i_, name.n);
      m = projective_module(p_, l.i, l.beta);
      break;
    }
    default:
      throw std::invalid_argument("quantum group block objects: no construction for " + key);
  }
  return cache_.emplace(key, std::move(m)).first->second;
}

int BlockObjects::ext1_dim(const ZigzagName& m, const ZigzagName& n) { return ext1(a_, get(m), get(n)).dim; }

Inventory<CycNum> BlockObjects::inventory(int w) {
  Inventory<CycNum> inv;
  for (int n = -w; n <= w; ++n) inv.push_back({zigzag::L(n).str(), get(zigzag::L(n))});
  return inv;
}

Eigen::MatrixXi qg_ext_table(const QGParams& p, int i, int w) {
  BlockObjects b(p, i);
  Eigen::MatrixXi t(2 * w + 1, 2 * w + 1);
  for (int n = -w; n <= w; ++n)
    for (int m = -w; m <= w; ++m) t(n + w, m + w) = b.ext1_dim(zigzag::L(n), zigzag::L(m));
  return t;
}

std::map<std::string, Layers> qg_loewy_table(const QGParams& p, int i, int w) {
  BlockObjects b(p, i);
  Inventory<CycNum> inv = b.inventory(w);
  std::map<std::string, Layers> out;
  for (int n = -(w - 2); n <= w - 2; ++n)
    for (const auto& name : {zigzag::L(n), zigzag::Eplus(n), zigzag::Eminus(n), zigzag::P(n)})
      out[name.str()] = radical_filtration(b.presentation(), b.get(name), inv);
  return out;
}

Report verify_qg(int r, int w) {
  using zigzag::Eminus;
  using zigzag::Eplus;
  using zigzag::L;
  using zigzag::P;
  Report rep;
  rep.suite = "qg-r" + std::to_string(r);
  rep.window = "W=" + std::to_string(w);
  const QGParams p{r, 1};
  const int inner = w - 2;

  for (int i = 0; i <= r - 2; ++i) {
    BlockObjects b(p, i);
    const auto& A = b.presentation();
    const Inventory<CycNum> inv = b.inventory(w);
    const std::string pre = "b" + std::to_string(i) + "/";
    auto ext = [&](const std::string& item, const ZigzagName& x, const ZigzagName& y, long expected) {
      rep.expect(item, pre + x.str(), pre + y.str(), expected, b.ext1_dim(x, y));
    };
    for (int n = -inner; n <= inner; ++n) {
      for (const auto& x : {L(n), Eplus(n), Eminus(n), P(n)})
        rep.expect("relations", pre + x.str(), "", 1, check_relations(A, b.get(x)));
      for (int m = -inner; m <= inner; ++m) ext("ext-simples", L(n), L(m), std::abs(n - m) == 1);
      ext("ext-vanish-far", Eplus(n + 1), L(n), 0);
      ext("ext-vanish-far", L(n), Eplus(n - 2), 0);
      ext("ext-vanish-far", Eminus(n - 1), L(n), 0);
      ext("ext-vanish-far", L(n), Eminus(n + 2), 0);
      ext("ext-vanish-near", Eplus(n - 1), L(n), 0);
      ext("ext-vanish-near", L(n), Eplus(n), 0);
      ext("ext-vanish-near", Eminus(n + 1), L(n), 0);
      ext("ext-vanish-near", L(n), Eminus(n), 0);
      rep.expect("ext-e-chain", pre + Eplus(n).str(), pre + Eplus(n + 1).str(), 1,
                 b.ext1_dim(Eplus(n), Eplus(n + 1)) != 0);
      rep.expect("ext-e-chain", pre + Eminus(n).str(), pre + Eminus(n - 1).str(), 1,
                 b.ext1_dim(Eminus(n), Eminus(n - 1)) != 0);

      const ModuleRep<CycNum>& pn = b.get(P(n));
      rep.expect("proj-dim", pre + P(n).str(), "", 2L * r, pn.dim());
      rep.expect("proj-indec", pre + P(n).str(), "", 1, is_indecomposable(A, pn));
      rep.expect("proj-hom", pre + P(n).str(), pre + P(n).str(), 2, static_cast<long>(hom(A, pn, pn).size()));
      Layers diamond{{L(n).str()}, {L(n - 1).str(), L(n + 1).str()}, {L(n).str()}};
      std::sort(diamond[1].begin(), diamond[1].end());
      rep.expect("proj-loewy", pre + P(n).str(), "", 1, radical_filtration(A, pn, inv) == diamond);
      rep.expect("eplus-loewy", pre + Eplus(n).str(), "", 1,
                 radical_filtration(A, b.get(Eplus(n)), inv) == Layers{{L(n + 1).str()}, {L(n).str()}});
      rep.expect("eminus-loewy", pre + Eminus(n).str(), "", 1,
                 radical_filtration(A, b.get(Eminus(n)), inv) == Layers{{L(n - 1).str()}, {L(n).str()}});
      for (int m = n - 3; m <= n + 3; ++m) {
        ext("proj-ext", P(n), L(m), 0);
        ext("proj-ext", L(m), P(n), 0);
      }
    }
  }

  // Typical modules, with half-integer weights allowed.
  const QGParams p2{r, 2};
  const auto A2 = uqh_presentation(p2);
  std::vector<ModuleRep<CycNum>> atypical;
  std::vector<std::string> atypical_names;
  for (int i = 0; i <= r - 2; ++i)
    for (int n = -2; n <= 2; ++n) {
      QGModuleLabel l = block_simple_label(p2, i, n);
      atypical.push_back(build(p2, l));
      atypical_names.push_back(l.str());
    }
  auto orthogonal = [&](const std::string& item, const ModuleRep<CycNum>& v, const std::string& name) {
    for (std::size_t k = 0; k < atypical.size(); ++k) {
      rep.expect(item, name, atypical_names[k], 0, ext1(A2, v, atypical[k]).dim);
      rep.expect(item, atypical_names[k], name, 0, ext1(A2, atypical[k], v).dim);
    }
  };
  for (const Rat& alpha : {Rat(1, 2), Rat(-3, 2), Rat(r) + Rat(1, 2), Rat(0), Rat(r)}) {
    ModuleRep<CycNum> v = typical_module(p2, alpha);
    const std::string name = "V(" + alpha.str() + ")";
    rep.expect("relations", name, "", 1, check_relations(A2, v));
    rep.expect("typical-dim", name, "", r, v.dim());
    rep.expect("typical-simple", name, "", 0, radical_submodule(A2, v).cols());
    rep.expect("typical-hom", name, name, 1, static_cast<long>(hom(A2, v, v).size()));
    orthogonal("typical-ext", v, name);
  }
  for (int l = -1; l <= 1; ++l)
    for (int i = 0; i <= r - 2; ++i) {
      const Rat alpha(static_cast<long>(r - i - 1 + l * r));
      ModuleRep<CycNum> v = typical_module(p2, alpha);
      const std::string name = "V(" + alpha.str() + ")";
      auto [sub, head] = typical_composition(p2, alpha);
      Inventory<CycNum> inv{{sub.str(), build(p2, sub)}, {head.str(), build(p2, head)}};
      rep.expect("relations", name, "", 1, check_relations(A2, v));
      rep.expect("typical-indec", name, "", 1, is_indecomposable(A2, v));
      rep.expect("typical-loewy", name, "", 1,
                 radical_filtration(A2, v, inv) == Layers{{head.str()}, {sub.str()}});
    }
  return rep;
}

}  // namespace blockcalc::qg
