#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcalc/ext_engine.hpp"
#include "blockcalc/report.hpp"

namespace blockcalc::zigzag {

// Integer vertex window [lo, hi]. The outer two vertices on each side are
// padding: modules live on [lo + 2, hi - 2].
struct Window {
  int lo = -8;
  int hi = 8;

  int first() const { return lo + 2; }
  int last() const { return hi - 2; }
  bool fits(int a, int b) const { return a >= first() && b <= last(); }
  Window grown(int k) const { return {lo - k, hi + k}; }
  std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }
  static Window parse(const std::string& text);
};

struct ZigzagName {
  enum class Kind { L, Eplus, Eminus, P, Lam, V };
  Kind kind = Kind::L;
  int n = 0;
  int m = 0;  // length parameter for Lam and V

  static ZigzagName parse(const std::string& text);
  std::string str() const;
  // Vertex support [first, last]; empty (first > last) for the zero module.
  std::pair<int, int> support() const;
  ZigzagName shifted(int k) const;
  // Image under the vertex reflection n -> -n.
  ZigzagName reflected() const;
  friend bool operator==(const ZigzagName& a, const ZigzagName& b) {
    return a.kind == b.kind && a.n == b.n && a.m == b.m;
  }
  friend bool operator<(const ZigzagName& a, const ZigzagName& b) { return a.str() < b.str(); }
};

ZigzagName L(int n);
ZigzagName Eplus(int n);
ZigzagName Eminus(int n);
ZigzagName P(int n);
ZigzagName Lam(int n, int m);
ZigzagName V(int n, int m);

// Quiver representation: dims per vertex, up[n] : d_n -> d_{n+1} and
// down[n] : d_n -> d_{n-1}, all indexed by n - lo.
struct ZigzagRep {
  Window window;
  std::vector<int> dims;
  std::vector<Mat<Rat>> up;
  std::vector<Mat<Rat>> down;

  explicit ZigzagRep(Window w = {});
  int dim(int v) const;
  int total_dim() const;
  const Mat<Rat>& a(int v) const;
  const Mat<Rat>& b(int v) const;
  void set_dim(int v, int d);
  void set_a(int v, Mat<Rat> m);
  void set_b(int v, Mat<Rat> m);
  // a a = 0, b b = 0 and b_{n+1} a_n = a_{n-1} b_n at every vertex.
  bool check_relations() const;
  std::pair<int, int> support() const;
};

// Generators h (grading, weight = vertex), a (+1), b (-1); relations
// aa = 0, bb = 0, ab - ba = 0.
const AlgebraPresentation<Rat>& presentation();

ModuleRep<Rat> to_module(const ZigzagRep& z);
ZigzagRep to_rep(const ModuleRep<Rat>& m, Window w);

ZigzagRep build(const ZigzagName& name, Window w);
ModuleRep<Rat> build_module(const ZigzagName& name, Window w);

// Contragredient: transpose every arrow and swap a with b.
ZigzagRep flip(const ZigzagRep& z);

Inventory<Rat> simple_inventory(Window w);
ProjectiveCoverOracle<Rat> projective_covers(Window w);

int zz_hom(const ZigzagRep& m, const ZigzagRep& n);
ExtSpace<Rat> zz_ext1(const ZigzagRep& m, const ZigzagRep& n);
// Requires the resolution of m to stay s + 1 steps inside the window.
int zz_ext_s(const ZigzagRep& m, const ZigzagRep& n, int s);
Layers zz_loewy(const ZigzagRep& m);

struct Classification {
  enum class Kind { Named, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ZigzagName> name;
};

// Throws std::invalid_argument on decomposable input.
Classification classify_indecomposable(const ZigzagRep& m);

struct ZigzagResolution {
  Resolution<Rat> resolution;
  // terms_match[j]: P_j is isomorphic to the sum of P(n - j + 2i), i = 0..j.
  std::vector<bool> terms_match;
};

ZigzagResolution projective_resolution(int n, int length, Window w);

// Ext^1 between simples, E+ and E- objects; P(n) as an extension of E+ and
// of E- objects, its Ext vanishing and its diamond layers. Checked for every
// n at distance at least 4 from the padding.
Report verify_main(Window w);
// dim Ext^s(L(n), L(m)) = 1 iff |n - m| <= s and n - s = m mod 2.
Report verify_ext_s(Window w, int smax, int max_distance);
// Dimension list for Ext^1 between simples and string modules, and the
// middle terms of the corresponding extensions, for 1 <= m <= m_max.
Report verify_extension_list(Window w, int m_max);

}  // namespace blockcalc::zigzag
