#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blockcalc/cyclotomic.hpp"
#include "blockcalc/ext_engine.hpp"
#include "blockcalc/report.hpp"
#include "blockcalc/zigzag.hpp"

namespace blockcalc::qg {

// q = zeta_{2r}; weights lie in (1/N)Z and q^h lives in Q(zeta_{2rN}).
struct QGParams {
  int r = 2;
  int N = 1;

  int order() const { return 2 * r * N; }
  // Throws std::invalid_argument unless r >= 2 and N >= 1.
  void validate() const;
};

// q^h for h in (1/N)Z.
CycNum qpow(const QGParams& p, const Rat& h);
// (q^h - q^-h)/(q - q^-1).
CycNum qbracket(const QGParams& p, const Rat& h);

struct QGModuleLabel {
  enum class Kind { Simple, Typical, Projective };
  Kind kind = Kind::Simple;
  int i = 0;
  Rat beta;  // alpha for Typical

  std::string str() const;
};

// H grading, E of degree 2, F of degree -2; relations [H,E] = 2E,
// [H,F] = -2F, [E,F] = [h] on weight h, E^r = F^r = 0.
AlgebraPresentation<CycNum> uqh_presentation(const QGParams& p);

// S_i (x) C_beta, beta in rZ.
ModuleRep<CycNum> simple_module(const QGParams& p, int i, const Rat& beta);
// V_alpha: weights alpha + r - 1 - 2j, j = 0..r-1.
ModuleRep<CycNum> typical_module(const QGParams& p, const Rat& alpha);
// Projective cover of S_i (x) C_beta.
ModuleRep<CycNum> projective_module(const QGParams& p, int i, const Rat& beta);
ModuleRep<CycNum> build(const QGParams& p, const QGModuleLabel& label);

// For alpha = r - i - 1 + lr with 0 <= i <= r-2: {sub, head} of V_alpha.
// Throws std::invalid_argument when V_alpha is simple.
std::pair<QGModuleLabel, QGModuleLabel> typical_composition(const QGParams& p, const Rat& alpha);

// Block index of the simple L_n of block i.
QGModuleLabel block_simple_label(const QGParams& p, int i, int n);

// Simples L_n, |n| <= w, of block i, named "L(n)".
Inventory<CycNum> qg_atypical_inventory(const QGParams& p, int i, int w);

// Objects of block i under the zigzag names L(n), E+(n), E-(n), P(n):
// E+(n) is the nonsplit extension of L(n+1) by L(n), E-(n) that of L(n-1)
// by L(n), P(n) the diamond on L(n) with middle L(n-1) + L(n+1).
class BlockObjects {
 public:
  BlockObjects(const QGParams& p, int i);

  const QGParams& params() const { return p_; }
  int block() const { return i_; }
  const AlgebraPresentation<CycNum>& presentation() const { return a_; }
  // Throws std::invalid_argument for string modules other than L, E+, E-, P.
  const ModuleRep<CycNum>& get(const zigzag::ZigzagName& name);
  int ext1_dim(const zigzag::ZigzagName& m, const zigzag::ZigzagName& n);
  // Inventory of L(n) with |n| <= w.
  Inventory<CycNum> inventory(int w);

 private:
  QGParams p_;
  int i_;
  AlgebraPresentation<CycNum> a_;
  std::map<std::string, ModuleRep<CycNum>> cache_;
};

// Entry (n + w, m + w) is dim Ext^1(L_n, L_m).
Eigen::MatrixXi qg_ext_table(const QGParams& p, int i, int w);
// Radical layers of L(n), E+(n), E-(n), P(n) for |n| <= w - 2.
std::map<std::string, Layers> qg_loewy_table(const QGParams& p, int i, int w);

// Relations, projective diamonds, Ext^1 between simples for |n|, |m| <= w - 2,
// the vanishing and nonvanishing properties of E+/E-, typical modules.
Report verify_qg(int r, int w);

}  // namespace blockcalc::qg
