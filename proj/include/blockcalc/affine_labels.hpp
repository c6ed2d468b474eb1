#pragma once

#include <string>
#include <vector>

#include "blockcalc/rational.hpp"
#include "blockcalc/report.hpp"

namespace blockcalc::affine {

// Admissible level k = -2 + u/v.
struct Level {
  int u = 3;
  int v = 2;

  Level() = default;
  // Throws std::invalid_argument unless u, v >= 2 and gcd(u, v) = 1.
  Level(int u_, int v_);
  Rat t() const { return Rat(u, v); }
  std::string str() const { return "u=" + std::to_string(u) + ",v=" + std::to_string(v); }
};

struct SimpleLabel {
  enum class Variant { Irr, Dplus, Dminus, Etyp };
  Variant variant = Variant::Dplus;
  int r = 1;
  int s = 1;
  long ell = 0;
  Rat lambda;  // Etyp only

  // "L(r)", "D+(r,s,l)", "D-(r,s,l)", "E(lambda,r,s,l)"; l is the spectral flow.
  std::string str() const;
  static SimpleLabel parse(const std::string& text);

  friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) {
    return a.variant == b.variant && a.r == b.r && a.s == b.s && a.ell == b.ell && a.lambda == b.lambda;
  }
  friend bool operator!=(const SimpleLabel& a, const SimpleLabel& b) { return !(a == b); }
  friend bool operator<(const SimpleLabel& a, const SimpleLabel& b);
};

SimpleLabel Irr(int r);
SimpleLabel Dplus(int r, int s, long ell = 0);
SimpleLabel Dminus(int r, int s, long ell = 0);
SimpleLabel Etyp(const Rat& lambda, int r, int s, long ell = 0);

Rat lambda_rs(const Level& lv, int r, int s);
Rat delta_rs(const Level& lv, int r, int s);
// Exhaustive scan: Delta_{r,s} = Delta_{r',s'} exactly when (r',s') is (r,s)
// or (u-r, v-s), over 1 <= r,r' <= u-1 and 0 <= s,s' <= v-1.
bool delta_collision_check(const Level& lv);

// Canonical form: atypicals as Dplus(r, s, l); Etyp with lambda in [0, 2)
// and the lexicographically smaller of (r,s), (u-r,v-s). Throws
// std::invalid_argument on out-of-range or excluded parameters.
SimpleLabel normalize(const Level& lv, const SimpleLabel& x);
bool is_atypical(const SimpleLabel& x);

SimpleLabel sigma(const Level& lv, const SimpleLabel& x, long m);
// Conjugation: sends sigma^l(D+_{r,s}) to sigma^{-l}(D-_{r,s}).
SimpleLabel conjugate(const Level& lv, const SimpleLabel& x);

// The two atypical simples with nonzero Ext^1 against x: chain_next moves
// L_k to L_{k+1} inside a block, chain_prev is its inverse.
SimpleLabel chain_next(const Level& lv, const SimpleLabel& x);
SimpleLabel chain_prev(const Level& lv, const SimpleLabel& x);

// dim Ext^1(n, m) in {0, 1}.
int ext1_simples(const Level& lv, const SimpleLabel& n, const SimpleLabel& m);

struct BlockId {
  enum class Kind { Atypical, Typical };
  Kind kind = Kind::Atypical;
  int r = 1;    // Atypical: C_r; Typical: class representative
  int n = 0;    // Atypical: spectral flow in [-1, v-2]
  int s = 0;    // Typical only
  long ell = 0; // Typical only
  Rat lambda;   // Typical only

  std::string str() const;
  friend bool operator==(const BlockId& a, const BlockId& b) {
    return a.kind == b.kind && a.r == b.r && a.n == b.n && a.s == b.s && a.ell == b.ell && a.lambda == b.lambda;
  }
  friend bool operator<(const BlockId& a, const BlockId& b) { return a.str() < b.str(); }
};

BlockId atypical_block(int r, int n);
BlockId block_of(const Level& lv, const SimpleLabel& x);
// L_n for n in [n_lo, n_hi]; L_0 = sigma^n(D+_{r,v-1}).
std::vector<SimpleLabel> block_chain(const Level& lv, const BlockId& b, long n_lo, long n_hi);
std::vector<BlockId> atypical_blocks(const Level& lv);

struct BlockCensus {
  std::vector<BlockId> atypical;
  // Representatives (r,s) of the typical parameter classes.
  std::vector<std::pair<int, int>> typical_classes;
  std::string typical_description;
  long labels_checked = 0;
  long overlaps = 0;
  long missing = 0;
  bool partition_ok() const { return overlaps == 0 && missing == 0; }
};

// Walks every atypical chain over |l| <= ell_bound and checks that the
// canonical atypical labels with |l| <= ell_bound are partitioned.
BlockCensus enumerate_blocks(const Level& lv, long ell_bound = 8);

// Rule-level consistency: delta collisions, census, sigma action, chain
// adjacency, block orthogonality, conjugation symmetry.
Report verify_affine(const Level& lv, long ell_bound = 8);

}  // namespace blockcalc::affine
