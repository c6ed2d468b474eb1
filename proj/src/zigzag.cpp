#include "blockcalc/zigzag.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

namespace blockcalc::zigzag {

namespace {

Mat<Rat> one() { return Mat<Rat>::Constant(1, 1, Rat(1)); }

ModuleRep<Rat> zero_rep_module() { return zero_module(presentation()); }

void require_fits(const ZigzagName& name, Window w) {
  auto [a, b] = name.support();
  if (a > b) return;
  if (!w.fits(a, b))
    throw WindowError(name.str() + " does not fit in usable range " + std::to_string(w.first()) + ".." +
                      std::to_string(w.last()) + " of window " + w.str());
}

ModuleRep<Rat> string_extension(const ModuleRep<Rat>& quot, const ModuleRep<Rat>& sub, const std::string& what) {
  ExtSpace<Rat> e = ext1(presentation(), quot, sub);
  if (e.dim != 1)
    throw std::logic_error("building " + what + ": expected a one-dimensional Ext^1, found " + std::to_string(e.dim));
  return extend(presentation(), quot, sub, e.cocycles.front());
}

// Recursive construction of the string modules from their defining extensions.
ModuleRep<Rat> lam_module(int n, int m, Window w) {
  if (m <= 1) return to_module(build(Lam(n, m), w));
  ModuleRep<Rat> top = to_module(build(L(n + m), w));
  if (m % 2 == 1) return string_extension(top, lam_module(n, m - 1, w), Lam(n, m).str());
  return string_extension(lam_module(n, m - 1, w), top, Lam(n, m).str());
}

ModuleRep<Rat> v_module(int n, int m, Window w) {
  if (m <= 1) return to_module(build(V(n, m), w));
  ModuleRep<Rat> end = to_module(build(L(n + m), w));
  if (m % 2 == 1) return string_extension(v_module(n, m - 1, w), end, V(n, m).str());
  return string_extension(end, v_module(n, m - 1, w), V(n, m).str());
}

class ModuleCache {
 public:
  explicit ModuleCache(Window w) : w_(w) {}
  const ModuleRep<Rat>& get(const ZigzagName& name) {
    auto key = name.str();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build_module(name, w_)).first;
    return it->second;
  }
  // Direct sum of the nonzero named modules.
  ModuleRep<Rat> sum(const std::vector<ZigzagName>& names) {
    std::vector<ModuleRep<Rat>> parts;
    for (const auto& nm : names)
      if (get(nm).dim() > 0) parts.push_back(get(nm));
    if (parts.empty()) return zero_rep_module();
    return direct_sum(parts);
  }

 private:
  Window w_;
  std::map<std::string, ModuleRep<Rat>> cache_;
};

// Up to two base vertices from the middle of [lo, hi], so a symmetrically
// grown window samples the same modules.
std::vector<int> central_bases(int lo, int hi) {
  std::vector<int> out;
  if (lo > hi) return out;
  const int mid = lo + (hi - lo) / 2;
  for (int n = mid; n <= hi && out.size() < 2; ++n) out.push_back(n);
  return out;
}

int ext1_dim(ModuleCache& c, const ZigzagName& m, const ZigzagName& n) {
  return ext1(presentation(), c.get(m), c.get(n)).dim;
}

}  // namespace

Window Window::parse(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw std::invalid_argument("window must look like LO..HI, got " + text);
  Window w{std::stoi(mt[1]), std::stoi(mt[2])};
  if (w.first() > w.last()) throw std::invalid_argument("window " + text + " leaves no usable vertices");
  return w;
}

ZigzagName L(int n) { return {ZigzagName::Kind::L, n, 0}; }
ZigzagName Eplus(int n) { return {ZigzagName::Kind::Eplus, n, 0}; }
ZigzagName Eminus(int n) { return {ZigzagName::Kind::Eminus, n, 0}; }
ZigzagName P(int n) { return {ZigzagName::Kind::P, n, 0}; }
ZigzagName Lam(int n, int m) {
  if (m < -1) throw std::invalid_argument("Lam: length parameter below -1");
  return {ZigzagName::Kind::Lam, n, m};
}
ZigzagName V(int n, int m) {
  if (m < -1) throw std::invalid_argument("V: length parameter below -1");
  return {ZigzagName::Kind::V, n, m};
}

ZigzagName ZigzagName::parse(const std::string& text) {
  static const std::regex one_arg(R"(\s*(L|E\+|E-|Eplus|Eminus|P)\s*\(\s*(-?\d+)\s*\)\s*)");
  static const std::regex two_arg(R"(\s*(Lam|V)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch mt;
  if (std::regex_match(text, mt, one_arg)) {
    int n = std::stoi(mt[2]);
    std::string k = mt[1];
    if (k == "L") return L(n);
    if (k == "E+" || k == "Eplus") return Eplus(n);
    if (k == "E-" || k == "Eminus") return Eminus(n);
    return P(n);
  }
  if (std::regex_match(text, mt, two_arg)) {
    int n = std::stoi(mt[2]), m = std::stoi(mt[3]);
    return mt[1] == "Lam" ? Lam(n, m) : V(n, m);
  }
  throw std::invalid_argument("cannot parse module name '" + text + "'");
}

std::string ZigzagName::str() const {
  const std::string ns = std::to_string(n);
  switch (kind) {
    case Kind::L: return "L(" + ns + ")";
    case Kind::Eplus: return "E+(" + ns + ")";
    case Kind::Eminus: return "E-(" + ns + ")";
    case Kind::P: return "P(" + ns + ")";
    case Kind::Lam: return "Lam(" + ns + "," + std::to_string(m) + ")";
    case Kind::V: return "V(" + ns + "," + std::to_string(m) + ")";
  }
  return "?";
}

std::pair<int, int> ZigzagName::support() const {
  switch (kind) {
    case Kind::L: return {n, n};
    case Kind::Eplus: return {n, n + 1};
    case Kind::Eminus: return {n - 1, n};
    case Kind::P: return {n - 1, n + 1};
    case Kind::Lam:
    case Kind::V: return {n, n + m};
  }
  return {0, -1};
}

ZigzagName ZigzagName::shifted(int k) const {
  ZigzagName out = *this;
  out.n += k;
  return out;
}

ZigzagName ZigzagName::reflected() const {
  switch (kind) {
    case Kind::L: return L(-n);
    case Kind::Eplus: return Eminus(-n);
    case Kind::Eminus: return Eplus(-n);
    case Kind::P: return P(-n);
    // Offsets from the left end reverse, so parity of the tops flips with m.
    case Kind::Lam: return m % 2 == 0 ? Lam(-n - m, m) : V(-n - m, m);
    case Kind::V: return m % 2 == 0 ? V(-n - m, m) : Lam(-n - m, m);
  }
  return *this;
}

ZigzagRep::ZigzagRep(Window w) : window(w) {
  const std::size_t k = static_cast<std::size_t>(w.hi - w.lo + 1);
  dims.assign(k, 0);
  up.assign(k, Mat<Rat>(0, 0));
  down.assign(k, Mat<Rat>(0, 0));
}

int ZigzagRep::dim(int v) const {
  if (v < window.lo || v > window.hi) return 0;
  return dims[static_cast<std::size_t>(v - window.lo)];
}

int ZigzagRep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

const Mat<Rat>& ZigzagRep::a(int v) const {
  if (v < window.lo || v > window.hi) throw WindowError("vertex outside window");
  return up[static_cast<std::size_t>(v - window.lo)];
}

const Mat<Rat>& ZigzagRep::b(int v) const {
  if (v < window.lo || v > window.hi) throw WindowError("vertex outside window");
  return down[static_cast<std::size_t>(v - window.lo)];
}

void ZigzagRep::set_dim(int v, int d) {
  if (v < window.lo || v > window.hi) throw WindowError("vertex outside window");
  dims[static_cast<std::size_t>(v - window.lo)] = d;
  for (int u = std::max(window.lo, v - 1); u <= std::min(window.hi, v + 1); ++u) {
    up[static_cast<std::size_t>(u - window.lo)] = Mat<Rat>::Zero(dim(u + 1), dim(u));
    down[static_cast<std::size_t>(u - window.lo)] = Mat<Rat>::Zero(dim(u - 1), dim(u));
  }
}

void ZigzagRep::set_a(int v, Mat<Rat> m) {
  if (m.rows() != dim(v + 1) || m.cols() != dim(v)) throw std::invalid_argument("up arrow has wrong shape");
  up[static_cast<std::size_t>(v - window.lo)] = std::move(m);
}

void ZigzagRep::set_b(int v, Mat<Rat> m) {
  if (m.rows() != dim(v - 1) || m.cols() != dim(v)) throw std::invalid_argument("down arrow has wrong shape");
  down[static_cast<std::size_t>(v - window.lo)] = std::move(m);
}

bool ZigzagRep::check_relations() const {
  for (int v = window.lo; v <= window.hi; ++v) {
    if (v + 1 <= window.hi && !is_zero_matrix<Rat>(mul<Rat>(a(v + 1), a(v)))) return false;
    if (v - 1 >= window.lo && !is_zero_matrix<Rat>(mul<Rat>(b(v - 1), b(v)))) return false;
    Mat<Rat> ba = v + 1 <= window.hi ? mul<Rat>(b(v + 1), a(v)) : Mat<Rat>::Zero(dim(v), dim(v));
    Mat<Rat> ab = v - 1 >= window.lo ? mul<Rat>(a(v - 1), b(v)) : Mat<Rat>::Zero(dim(v), dim(v));
    if (ba != ab) return false;
  }
  return true;
}

std::pair<int, int> ZigzagRep::support() const {
  int a0 = window.hi + 1, b0 = window.lo - 1;
  for (int v = window.lo; v <= window.hi; ++v)
    if (dim(v) > 0) {
      a0 = std::min(a0, v);
      b0 = std::max(b0, v);
    }
  return {a0, b0};
}

const AlgebraPresentation<Rat>& presentation() {
  static const AlgebraPresentation<Rat> pres = [] {
    AlgebraPresentation<Rat> p;
    p.name = "zigzag";
    p.generators = {{"h", Rat(0), true}, {"a", Rat(1), false}, {"b", Rat(-1), false}};
    p.relations = {
        {"aa", {term<Rat>(Rat(1), {1, 1})}},
        {"bb", {term<Rat>(Rat(1), {2, 2})}},
        {"loop", {term<Rat>(Rat(1), {1, 2}), term<Rat>(Rat(-1), {2, 1})}},
    };
    return p;
  }();
  return pres;
}

ModuleRep<Rat> to_module(const ZigzagRep& z) {
  const Window& w = z.window;
  std::vector<int> off(static_cast<std::size_t>(w.hi - w.lo + 2), 0);
  for (int v = w.lo; v <= w.hi; ++v)
    off[static_cast<std::size_t>(v - w.lo + 1)] = off[static_cast<std::size_t>(v - w.lo)] + z.dim(v);
  const int n = z.total_dim();
  ModuleRep<Rat> m;
  for (int v = w.lo; v <= w.hi; ++v)
    for (int i = 0; i < z.dim(v); ++i) m.weights.push_back(Rat(v));
  Mat<Rat> a = Mat<Rat>::Zero(n, n), b = Mat<Rat>::Zero(n, n);
  auto at = [&](int v) { return off[static_cast<std::size_t>(v - w.lo)]; };
  for (int v = w.lo; v <= w.hi; ++v) {
    if (v + 1 <= w.hi && z.dim(v) && z.dim(v + 1)) a.block(at(v + 1), at(v), z.dim(v + 1), z.dim(v)) = z.a(v);
    if (v - 1 >= w.lo && z.dim(v) && z.dim(v - 1)) b.block(at(v - 1), at(v), z.dim(v - 1), z.dim(v)) = z.b(v);
  }
  m.action["a"] = std::move(a);
  m.action["b"] = std::move(b);
  return m;
}

ZigzagRep to_rep(const ModuleRep<Rat>& m, Window w) {
  std::map<int, std::vector<int>> at;
  for (int i = 0; i < m.dim(); ++i) {
    const Rat& wt = m.weights[static_cast<std::size_t>(i)];
    if (!wt.is_integer()) throw std::invalid_argument("zigzag weights must be integers");
    long v = wt.to_long();
    if (v < w.first() || v > w.last()) throw WindowError("module weight " + wt.str() + " outside window " + w.str());
    at[static_cast<int>(v)].push_back(i);
  }
  ZigzagRep z(w);
  for (const auto& [v, idx] : at) z.set_dim(v, static_cast<int>(idx.size()));
  if (!respects_grading(presentation(), m)) throw std::invalid_argument("module does not respect the grading");
  const Mat<Rat>& a = m.act("a");
  const Mat<Rat>& b = m.act("b");
  for (const auto& [v, idx] : at) {
    if (at.count(v + 1)) z.set_a(v, select_columns<Rat>(select_rows<Rat>(a, at[v + 1]), idx));
    if (at.count(v - 1)) z.set_b(v, select_columns<Rat>(select_rows<Rat>(b, at[v - 1]), idx));
  }
  return z;
}

ZigzagRep build(const ZigzagName& name, Window w) {
  require_fits(name, w);
  ZigzagRep z(w);
  const int n = name.n;
  switch (name.kind) {
    case ZigzagName::Kind::L:
      z.set_dim(n, 1);
      return z;
    case ZigzagName::Kind::Eplus:  // top n+1, socle n
      z.set_dim(n, 1);
      z.set_dim(n + 1, 1);
      z.set_b(n + 1, one());
      return z;
    case ZigzagName::Kind::Eminus:  // top n-1, socle n
      z.set_dim(n - 1, 1);
      z.set_dim(n, 1);
      z.set_a(n - 1, one());
      return z;
    case ZigzagName::Kind::P: {
      // Basis at n: (e, abe); at n+1: ae; at n-1: be.
      z.set_dim(n - 1, 1);
      z.set_dim(n, 2);
      z.set_dim(n + 1, 1);
      Mat<Rat> row(1, 2), col(2, 1);
      row << Rat(1), Rat(0);
      col << Rat(0), Rat(1);
      z.set_a(n, row);
      z.set_b(n, row);
      z.set_a(n - 1, col);
      z.set_b(n + 1, col);
      return z;
    }
    case ZigzagName::Kind::Lam:
      if (name.m == -1) return z;
      if (name.m == 0) return build(L(n), w);
      if (name.m == 1) return build(Eplus(n), w);
      return to_rep(lam_module(n, name.m, w), w);
    case ZigzagName::Kind::V:
      if (name.m == -1) return z;
      if (name.m == 0) return build(L(n), w);
      if (name.m == 1) return build(Eminus(n + 1), w);
      return to_rep(v_module(n, name.m, w), w);
  }
  throw std::logic_error("unhandled module kind");
}

ModuleRep<Rat> build_module(const ZigzagName& name, Window w) { return to_module(build(name, w)); }

ZigzagRep flip(const ZigzagRep& z) {
  ZigzagRep out(z.window);
  const Window& w = z.window;
  for (int v = w.lo; v <= w.hi; ++v) out.set_dim(v, z.dim(v));
  for (int v = w.lo; v <= w.hi; ++v) {
    if (v + 1 <= w.hi) out.set_a(v, z.b(v + 1).transpose());
    if (v - 1 >= w.lo) out.set_b(v, z.a(v - 1).transpose());
  }
  return out;
}

Inventory<Rat> simple_inventory(Window w) {
  Inventory<Rat> inv;
  for (int k = w.first(); k <= w.last(); ++k) inv.push_back({L(k).str(), build_module(L(k), w)});
  return inv;
}

ProjectiveCoverOracle<Rat> projective_covers(Window w) {
  return [w](const std::string& simple) {
    ZigzagName s = ZigzagName::parse(simple);
    if (s.kind != ZigzagName::Kind::L) throw std::invalid_argument(simple + " is not a simple module");
    return build_module(P(s.n), w);
  };
}

int zz_hom(const ZigzagRep& m, const ZigzagRep& n) {
  return static_cast<int>(hom(presentation(), to_module(m), to_module(n)).size());
}

ExtSpace<Rat> zz_ext1(const ZigzagRep& m, const ZigzagRep& n) {
  return ext1(presentation(), to_module(m), to_module(n));
}

int zz_ext_s(const ZigzagRep& m, const ZigzagRep& n, int s) {
  const Window w = m.window;
  return ext_s(presentation(), to_module(m), to_module(n), s, projective_covers(w), simple_inventory(w));
}

Layers zz_loewy(const ZigzagRep& m) {
  return radical_filtration(presentation(), to_module(m), simple_inventory(m.window));
}

Classification classify_indecomposable(const ZigzagRep& z) {
  ModuleRep<Rat> m = to_module(z);
  if (m.dim() == 0 || !is_indecomposable(presentation(), m))
    throw std::invalid_argument("classify_indecomposable: module is not indecomposable");
  auto [s, e] = z.support();
  std::vector<ZigzagName> candidates;
  bool thin = true;
  for (int v = s; v <= e; ++v)
    if (z.dim(v) != 1) thin = false;
  if (thin) {
    const int len = e - s;
    if (len == 0) {
      candidates.push_back(L(s));
    } else if (len == 1) {
      candidates = {Eplus(s), Eminus(e)};
    } else {
      candidates = {Lam(s, len), V(s, len)};
    }
  } else if (e - s == 2 && z.dim(s) == 1 && z.dim(s + 1) == 2 && z.dim(e) == 1) {
    candidates.push_back(P(s + 1));
  }
  Classification out;
  for (const auto& c : candidates) {
    if (!z.window.fits(c.support().first, c.support().second)) continue;
    if (is_isomorphic(presentation(), m, build_module(c, z.window))) {
      out.kind = Classification::Kind::Named;
      out.name = c;
      return out;
    }
  }
  return out;
}

ZigzagResolution projective_resolution(int n, int length, Window w) {
  ZigzagResolution out;
  out.resolution = minimal_resolution(presentation(), build_module(L(n), w), length, projective_covers(w),
                                      simple_inventory(w));
  for (std::size_t j = 0; j < out.resolution.terms.size(); ++j) {
    std::vector<ModuleRep<Rat>> parts;
    const int jj = static_cast<int>(j);
    for (int i = 0; i <= jj; ++i) parts.push_back(build_module(P(n - jj + 2 * i), w));
    out.terms_match.push_back(is_isomorphic(presentation(), out.resolution.terms[j], direct_sum(parts)));
  }
  return out;
}

Report verify_main(Window w) {
  Report rep;
  rep.suite = "zigzag-main";
  rep.window = w.str();
  ModuleCache c(w);
  const auto& A = presentation();
  const Inventory<Rat> inv = simple_inventory(w);
  auto fits = [&](const ZigzagName& x) { return w.fits(x.support().first, x.support().second); };
  auto ext = [&](const std::string& item, const ZigzagName& x, const ZigzagName& y, long expected) {
    if (!fits(x) || !fits(y)) return;
    rep.expect(item, x.str(), y.str(), expected, ext1_dim(c, x, y));
  };
  const int margin = 4;
  for (int n = w.first() + margin - 2; n <= w.last() - margin + 2; ++n) {
    // Simples and the vanishing pattern around E+ and E-.
    for (int m = n - 3; m <= n + 3; ++m) ext("ext-simples", L(n), L(m), std::abs(n - m) == 1);
    ext("ext-vanish-far", Eplus(n + 1), L(n), 0);
    ext("ext-vanish-far", L(n), Eplus(n - 2), 0);
    ext("ext-vanish-far", Eminus(n - 1), L(n), 0);
    ext("ext-vanish-far", L(n), Eminus(n + 2), 0);
    ext("ext-vanish-near", Eplus(n - 1), L(n), 0);
    ext("ext-vanish-near", L(n), Eplus(n), 0);
    ext("ext-vanish-near", Eminus(n + 1), L(n), 0);
    ext("ext-vanish-near", L(n), Eminus(n), 0);
    if (fits(Eplus(n)) && fits(Eplus(n + 1)))
      rep.expect("ext-e-chain", Eplus(n).str(), Eplus(n + 1).str(), 1, ext1_dim(c, Eplus(n), Eplus(n + 1)) != 0);
    if (fits(Eminus(n)) && fits(Eminus(n - 1)))
      rep.expect("ext-e-chain", Eminus(n).str(), Eminus(n - 1).str(), 1, ext1_dim(c, Eminus(n), Eminus(n - 1)) != 0);

    for (int m = n - 4; m <= n + 4; ++m) {
      ext("ext-L-Eplus", L(m), Eplus(n), m == n - 1);
      ext("ext-Eplus-L", Eplus(n), L(m), m == n + 2);
      ext("ext-L-Eminus", L(m), Eminus(n), m == n + 1);
      ext("ext-Eminus-L", Eminus(n), L(m), m == n - 2);
      ext("ext-Eplus-Eminus", Eminus(n), Eplus(m), 0);
      ext("ext-Eplus-Eminus", Eplus(n), Eminus(m), 0);
      ext("ext-Eplus-Eplus", Eplus(n), Eplus(m), (m == n + 1) + (m == n + 2));
      ext("ext-Eminus-Eminus", Eminus(n), Eminus(m), (m == n - 1) + (m == n - 2));
    }

    if (!fits(P(n)) || !fits(Eplus(n - 1)) || !fits(Eminus(n + 1))) continue;
    const ModuleRep<Rat>& pn = c.get(P(n));
    // P(n) as an extension of E+(n-1) by E+(n) and of E-(n+1) by E-(n).
    ExtSpace<Rat> e1 = ext1(A, c.get(Eplus(n - 1)), c.get(Eplus(n)));
    ExtSpace<Rat> e2 = ext1(A, c.get(Eminus(n + 1)), c.get(Eminus(n)));
    rep.expect("proj-from-E", Eplus(n - 1).str(), Eplus(n).str(), 1, e1.dim);
    rep.expect("proj-from-E", Eminus(n + 1).str(), Eminus(n).str(), 1, e2.dim);
    if (e1.dim > 0) {
      ModuleRep<Rat> x = extend(A, c.get(Eplus(n - 1)), c.get(Eplus(n)), e1.cocycles.front());
      rep.expect("proj-from-E-iso", "ext(E+(" + std::to_string(n - 1) + "),E+(" + std::to_string(n) + "))", P(n).str(), 1,
                 is_isomorphic(A, x, pn));
      rep.expect("proj-indec", "ext(E+(" + std::to_string(n - 1) + "),E+(" + std::to_string(n) + "))", "", 1,
                 is_indecomposable(A, x));
    }
    if (e2.dim > 0) {
      ModuleRep<Rat> y = extend(A, c.get(Eminus(n + 1)), c.get(Eminus(n)), e2.cocycles.front());
      rep.expect("proj-from-E-iso", "ext(E-(" + std::to_string(n + 1) + "),E-(" + std::to_string(n) + "))", P(n).str(), 1,
                 is_isomorphic(A, y, pn));
    }
    rep.expect("proj-indec", P(n).str(), "", 1, is_indecomposable(A, pn));
    rep.expect("hom", P(n).str(), P(n).str(), 2, static_cast<long>(hom(A, pn, pn).size()));
    // P(n) is projective and injective with diamond layers.
    for (int m = n - 4; m <= n + 4; ++m) {
      ext("proj-ext", P(n), L(m), 0);
      ext("proj-ext", L(m), P(n), 0);
    }
    Layers expected{{L(n).str()}, {L(n - 1).str(), L(n + 1).str()}, {L(n).str()}};
    std::sort(expected[1].begin(), expected[1].end());
    rep.expect("proj-loewy", P(n).str(), "", 1, radical_filtration(A, pn, inv) == expected);
  }
  return rep;
}

Report verify_ext_s(Window w, int smax, int max_distance) {
  Report rep;
  rep.suite = "zigzag-ext-s";
  rep.window = w.str();
  const auto& A = presentation();
  std::vector<int> bases = central_bases(w.first() + smax + 2, w.last() - smax - 2);
  if (bases.empty()) throw WindowError("window " + w.str() + " too small for Ext^" + std::to_string(smax));
  for (int n : bases) {
    ZigzagResolution zr = projective_resolution(n, smax + 1, w);
    const auto& res = zr.resolution;
    for (std::size_t j = 0; j < zr.terms_match.size() && static_cast<int>(j) <= smax; ++j)
      rep.expect("resolution-term", L(n).str(), "R" + std::to_string(j), 1, zr.terms_match[j]);
    for (int m = n - max_distance; m <= n + max_distance; ++m) {
      if (!w.fits(m, m)) continue;
      ModuleRep<Rat> lm = build_module(L(m), w);
      std::vector<int> dims = ext_dims(A, res, lm, smax);
      for (int s = 0; s <= smax; ++s) {
        long expected = std::abs(n - m) <= s && ((n - s - m) % 2 + 2) % 2 == 0;
        rep.expect("ext-s" + std::to_string(s), L(n).str(), L(m).str(), expected, dims[static_cast<std::size_t>(s)]);
      }
      // The Hom cochain complex has zero differentials.
      for (int s = 0; s <= smax; ++s) {
        long hs = static_cast<long>(hom(A, res.terms[static_cast<std::size_t>(s)], lm).size());
        rep.expect("cochain-zero-differential-s" + std::to_string(s), L(n).str(), L(m).str(),
                   dims[static_cast<std::size_t>(s)], hs);
      }
    }
  }
  return rep;
}

Report verify_extension_list(Window w, int m_max) {
  Report rep;
  rep.suite = "zigzag-extension-list";
  rep.window = w.str();
  const auto& A = presentation();
  ModuleCache c(w);
  std::vector<int> bases = central_bases(w.first() + 2, w.last() - 2 * m_max - 3);
  if (bases.empty()) throw WindowError("window " + w.str() + " too small for m_max = " + std::to_string(m_max));

  auto delta_sum = [](int r, int first, int last, int base, int step) {
    long k = 0;
    for (int s = first; s <= last; ++s) k += r == base + step * s;
    return k;
  };
  auto dim_check = [&](const std::string& item, const ZigzagName& x, const ZigzagName& y, long expected) {
    rep.expect(item, x.str(), y.str(), expected, ext1_dim(c, x, y));
  };
  // Every basis class of Ext^1(quot, sub) must give the expected middle term.
  auto middle = [&](const std::string& item, const ZigzagName& quot, const ZigzagName& sub,
                    const std::vector<ZigzagName>& expected) {
    ExtSpace<Rat> e = ext1(A, c.get(quot), c.get(sub));
    rep.expect(item + "-dim", quot.str(), sub.str(), 1, e.dim);
    std::string label;
    for (const auto& nm : expected) label += (label.empty() ? "" : "+") + nm.str();
    ModuleRep<Rat> target = c.sum(expected);
    for (const auto& cc : e.cocycles) {
      ModuleRep<Rat> mid = extend(A, c.get(quot), c.get(sub), cc);
      rep.expect(item + "-iso", "ext(" + quot.str() + "," + sub.str() + ")", label, 1, is_isomorphic(A, mid, target));
    }
  };

  for (int n : bases) {
    for (int m = 1; m <= m_max; ++m) {
      for (int r = n - 2; r <= n + 2 * m + 3; ++r) {
        if (!w.fits(r, r)) continue;
        long l1 = delta_sum(r, 0, m + 1, n - 1, 2);
        dim_check("dim-L-Lam-even", L(r), Lam(n, 2 * m), l1);
        dim_check("dim-L-Lam-even", V(n, 2 * m), L(r), l1);
        long l2 = delta_sum(r, 0, m, n - 1, 2);
        dim_check("dim-L-Lam-odd", L(r), Lam(n, 2 * m + 1), l2);
        dim_check("dim-L-Lam-odd", V(n, 2 * m + 1), L(r), l2);
        long l3 = (m == 1 && r == n + 1) + delta_sum(r, 1, m - 1, n, 2);
        dim_check("dim-Lam-L-even", Lam(n, 2 * m), L(r), l3);
        dim_check("dim-Lam-L-even", L(r), V(n, 2 * m), l3);
        long l4 = delta_sum(r, 1, m + 1, n, 2);
        dim_check("dim-Lam-L-odd", Lam(n, 2 * m + 1), L(r), l4);
        dim_check("dim-Lam-L-odd", L(r), V(n, 2 * m + 1), l4);
      }
      for (int s = 0; s <= m + 1; ++s)
        middle("middle-L-Lam-even", L(n + 2 * s - 1), Lam(n, 2 * m), {Lam(n, 2 * s - 1), V(n + 2 * s - 1, 2 * m - 2 * s + 1)});
      for (int s = 1; s <= m - 1; ++s)
        middle("middle-Lam-L-even", Lam(n, 2 * m), L(n + 2 * s), {Lam(n, 2 * s), Lam(n + 2 * s, 2 * m - 2 * s)});
      for (int s = 0; s <= m; ++s)
        middle("middle-L-Lam-odd", L(n + 2 * s - 1), Lam(n, 2 * m + 1), {Lam(n, 2 * s - 1), V(n + 2 * s - 1, 2 * m - 2 * s + 2)});
      for (int s = 1; s <= m + 1; ++s)
        middle("middle-Lam-L-odd", Lam(n, 2 * m + 1), L(n + 2 * s), {Lam(n, 2 * s), Lam(n + 2 * s, 2 * m - 2 * s + 1)});
      for (int s = 0; s <= m + 1; ++s)
        middle("middle-V-L-even", V(n, 2 * m), L(n + 2 * s - 1), {V(n, 2 * s - 1), Lam(n + 2 * s - 1, 2 * m - 2 * s + 1)});
      for (int s = 1; s <= m - 1; ++s)
        middle("middle-L-V-even", L(n + 2 * s), V(n, 2 * m), {V(n, 2 * s), V(n + 2 * s, 2 * m - 2 * s)});
      for (int s = 0; s <= m; ++s)
        middle("middle-V-L-odd", V(n, 2 * m + 1), L(n + 2 * s - 1), {V(n, 2 * s - 1), Lam(n + 2 * s - 1, 2 * m - 2 * s + 2)});
      for (int s = 1; s <= m + 1; ++s)
        middle("middle-L-V-odd", L(n + 2 * s), V(n, 2 * m + 1), {V(n, 2 * s), V(n + 2 * s, 2 * m - 2 * s + 1)});
    }
    middle("projective", Lam(n, 2), L(n + 1), {P(n + 1)});
    middle("projective", L(n + 1), V(n, 2), {P(n + 1)});
  }
  return rep;
}

}  // namespace blockcalc::zigzag
