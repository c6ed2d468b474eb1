#include "blockcalc/affine_labels.hpp"

#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <tuple>

namespace blockcalc::affine {

namespace {

using V = SimpleLabel::Variant;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_r(const Level& lv, int r) { require(r >= 1 && r <= lv.u - 1, "r = " + std::to_string(r) + " out of range"); }

void check_rs(const Level& lv, int r, int s) {
  check_r(lv, r);
  require(s >= 1 && s <= lv.v - 1, "s = " + std::to_string(s) + " out of range");
}

Rat mod2(const Rat& x) { return mod(x, Rat(2)); }

bool is_highest_weight(const Level& lv, const SimpleLabel& x) {
  return x.ell == 0 || (x.s == lv.v - 1 && x.ell == -1);
}

BlockId hw_block(const Level& lv, const SimpleLabel& x) {
  if (x.ell == 0) return atypical_block(x.r, lv.v - 1 - x.s);
  return atypical_block(x.r, -1);
}

}  // namespace

Level::Level(int u_, int v_) : u(u_), v(v_) {
  require(u >= 2 && v >= 2, "level needs u, v >= 2");
  require(std::gcd(u, v) == 1, "level needs gcd(u, v) = 1");
}

SimpleLabel Irr(int r) { return {V::Irr, r, 0, 0, Rat()}; }
SimpleLabel Dplus(int r, int s, long ell) { return {V::Dplus, r, s, ell, Rat()}; }
SimpleLabel Dminus(int r, int s, long ell) { return {V::Dminus, r, s, ell, Rat()}; }
SimpleLabel Etyp(const Rat& lambda, int r, int s, long ell) { return {V::Etyp, r, s, ell, lambda}; }

std::string SimpleLabel::str() const {
  const std::string l = std::to_string(ell);
  switch (variant) {
    case V::Irr:
      return ell == 0 ? "L(" + std::to_string(r) + ")" : "L(" + std::to_string(r) + "," + l + ")";
    case V::Dplus:
      return "D+(" + std::to_string(r) + "," + std::to_string(s) + "," + l + ")";
    case V::Dminus:
      return "D-(" + std::to_string(r) + "," + std::to_string(s) + "," + l + ")";
    case V::Etyp:
      return "E(" + lambda.str() + "," + std::to_string(r) + "," + std::to_string(s) + "," + l + ")";
  }
  return "";
}

SimpleLabel SimpleLabel::parse(const std::string& text) {
  static const std::regex irr(R"(L\((\d+)(?:,(-?\d+))?\))");
  static const std::regex d(R"(D([+-])\((\d+),(\d+)(?:,(-?\d+))?\))");
  static const std::regex e(R"(E\((-?\d+(?:/\d+)?),(\d+),(\d+)(?:,(-?\d+))?\))");
  std::smatch mt;
  auto ell_of = [&](std::size_t k) { return mt[k].matched ? std::stol(mt[k].str()) : 0L; };
  if (std::regex_match(text, mt, irr)) {
    SimpleLabel x = Irr(std::stoi(mt[1].str()));
    x.ell = ell_of(2);
    return x;
  }
  if (std::regex_match(text, mt, d)) {
    const int r = std::stoi(mt[2].str()), s = std::stoi(mt[3].str());
    return mt[1].str() == "+" ? Dplus(r, s, ell_of(4)) : Dminus(r, s, ell_of(4));
  }
  if (std::regex_match(text, mt, e))
    return Etyp(Rat(mt[1].str()), std::stoi(mt[2].str()), std::stoi(mt[3].str()), ell_of(4));
  throw std::invalid_argument("cannot parse simple label '" + text + "'");
}

bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
  return std::tie(a.variant, a.r, a.s, a.ell, a.lambda) < std::tie(b.variant, b.r, b.s, b.ell, b.lambda);
}

Rat lambda_rs(const Level& lv, int r, int s) {
  check_r(lv, r);
  require(s >= 0 && s <= lv.v - 1, "s = " + std::to_string(s) + " out of range");
  return Rat(r - 1) - lv.t() * Rat(s);
}

Rat delta_rs(const Level& lv, int r, int s) {
  check_r(lv, r);
  require(s >= 0 && s <= lv.v - 1, "s = " + std::to_string(s) + " out of range");
  const Rat x(static_cast<long>(lv.v) * r - static_cast<long>(lv.u) * s);
  return (x * x - Rat(static_cast<long>(lv.v) * lv.v)) / Rat(4L * lv.u * lv.v);
}

bool delta_collision_check(const Level& lv) {
  for (int r = 1; r < lv.u; ++r)
    for (int s = 0; s < lv.v; ++s)
      for (int r2 = 1; r2 < lv.u; ++r2)
        for (int s2 = 0; s2 < lv.v; ++s2) {
          const bool equal = delta_rs(lv, r, s) == delta_rs(lv, r2, s2);
          const bool paired = (r2 == r && s2 == s) || (r2 == lv.u - r && s2 == lv.v - s);
          if (equal != paired) return false;
        }
  return true;
}

SimpleLabel normalize(const Level& lv, const SimpleLabel& x) {
  switch (x.variant) {
    case V::Irr:
      check_r(lv, x.r);
      // sigma(L_r) = D+_{u-r,v-1}.
      return Dplus(lv.u - x.r, lv.v - 1, x.ell - 1);
    case V::Dplus:
      check_rs(lv, x.r, x.s);
      return x;
    case V::Dminus:
      check_rs(lv, x.r, x.s);
      // sigma^{-1}(D+_{r,s}) = D-_{u-r,v-1-s}, sigma^{-1}(L_r) = D-_{u-r,v-1}.
      if (x.s <= lv.v - 2) return Dplus(lv.u - x.r, lv.v - 1 - x.s, x.ell - 1);
      return Dplus(x.r, lv.v - 1, x.ell - 2);
    case V::Etyp: {
      check_rs(lv, x.r, x.s);
      const Rat lam = mod2(x.lambda);
      require(lam != mod2(lambda_rs(lv, x.r, x.s)) && lam != mod2(lambda_rs(lv, lv.u - x.r, lv.v - x.s)),
              "E-type label with excluded lambda " + x.lambda.str());
      std::pair<int, int> rs{x.r, x.s}, dual{lv.u - x.r, lv.v - x.s};
      if (dual < rs) rs = dual;
      return Etyp(lam, rs.first, rs.second, x.ell);
    }
  }
  throw std::logic_error("unknown label variant");
}

bool is_atypical(const SimpleLabel& x) { return x.variant != V::Etyp; }

SimpleLabel sigma(const Level& lv, const SimpleLabel& x, long m) {
  SimpleLabel y = normalize(lv, x);
  y.ell += m;
  return y;
}

SimpleLabel conjugate(const Level& lv, const SimpleLabel& x) {
  SimpleLabel y = normalize(lv, x);
  switch (y.variant) {
    case V::Dplus:
      return normalize(lv, Dminus(y.r, y.s, -y.ell));
    case V::Etyp:
      return normalize(lv, Etyp(-y.lambda, y.r, y.s, -y.ell));
    default:
      throw std::logic_error("normalize returned a non-canonical label");
  }
}

SimpleLabel chain_next(const Level& lv, const SimpleLabel& x) {
  SimpleLabel y = normalize(lv, x);
  require(is_atypical(y), "chain_next: " + x.str() + " is typical");
  if (y.s >= 2) return Dplus(y.r, y.s - 1, y.ell - 1);
  return Dplus(lv.u - y.r, lv.v - 1, y.ell - 2);
}

SimpleLabel chain_prev(const Level& lv, const SimpleLabel& x) {
  SimpleLabel y = normalize(lv, x);
  require(is_atypical(y), "chain_prev: " + x.str() + " is typical");
  if (y.s <= lv.v - 2) return Dplus(y.r, y.s + 1, y.ell + 1);
  return Dplus(lv.u - y.r, 1, y.ell + 2);
}

int ext1_simples(const Level& lv, const SimpleLabel& n, const SimpleLabel& m) {
  SimpleLabel a = normalize(lv, n), b = normalize(lv, m);
  if (!is_atypical(a) || !is_atypical(b)) return 0;
  // Nonzero exactly when b = sigma^l(D^e_{r,s}) and a = sigma^l(D^{-e}_{u-r,v-s}).
  return (a == chain_next(lv, b) || a == chain_prev(lv, b)) ? 1 : 0;
}

std::string BlockId::str() const {
  if (kind == Kind::Atypical) return "C(" + std::to_string(r) + "," + std::to_string(n) + ")";
  return "T(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(ell) + "," + lambda.str() + ")";
}

BlockId atypical_block(int r, int n) {
  BlockId b;
  b.r = r;
  b.n = n;
  return b;
}

BlockId block_of(const Level& lv, const SimpleLabel& x) {
  SimpleLabel y = normalize(lv, x);
  if (!is_atypical(y)) {
    BlockId b;
    b.kind = BlockId::Kind::Typical;
    b.r = y.r;
    b.s = y.s;
    b.ell = y.ell;
    b.lambda = y.lambda;
    return b;
  }
  // Each step moves l by one or two, so the highest weight member is near.
  const long steps = std::abs(y.ell) + 3;
  SimpleLabel up = y, down = y;
  for (long k = 0; k <= steps; ++k) {
    if (is_highest_weight(lv, up)) return hw_block(lv, up);
    if (is_highest_weight(lv, down)) return hw_block(lv, down);
    up = chain_next(lv, up);
    down = chain_prev(lv, down);
  }
  throw std::logic_error("block_of: no highest weight module in the chain of " + x.str());
}

std::vector<SimpleLabel> block_chain(const Level& lv, const BlockId& b, long n_lo, long n_hi) {
  require(b.kind == BlockId::Kind::Atypical, "block_chain needs an atypical block");
  check_r(lv, b.r);
  require(b.n >= -1 && b.n <= lv.v - 2, "block flow index out of range");
  std::vector<SimpleLabel> out;
  if (n_lo > n_hi) return out;
  SimpleLabel x = Dplus(b.r, lv.v - 1, b.n);
  for (long k = 0; k < n_lo; ++k) x = chain_next(lv, x);
  for (long k = 0; k > n_lo; --k) x = chain_prev(lv, x);
  for (long k = n_lo; k <= n_hi; ++k) {
    out.push_back(x);
    x = chain_next(lv, x);
  }
  return out;
}

std::vector<BlockId> atypical_blocks(const Level& lv) {
  std::vector<BlockId> out;
  for (int r = 1; r < lv.u; ++r)
    for (int n = -1; n <= lv.v - 2; ++n) out.push_back(atypical_block(r, n));
  return out;
}

BlockCensus enumerate_blocks(const Level& lv, long ell_bound) {
  BlockCensus c;
  c.atypical = atypical_blocks(lv);
  for (int r = 1; r < lv.u; ++r)
    for (int s = 1; s < lv.v; ++s)
      if (std::make_pair(r, s) < std::make_pair(lv.u - r, lv.v - s)) c.typical_classes.emplace_back(r, s);
  c.typical_description = "sigma^l(E_{lambda;Delta_{r,s}}): " + std::to_string(c.typical_classes.size()) +
                          " classes (r,s), l in Z, lambda in C/2Z minus {lambda_{r,s}, lambda_{u-r,v-s}}";

  std::map<SimpleLabel, int> seen;
  for (const auto& b : c.atypical) {
    int hw = 0;
    // l strictly decreases along chain_next.
    SimpleLabel x = Dplus(b.r, lv.v - 1, b.n);
    for (; x.ell >= -ell_bound; x = chain_next(lv, x))
      if (x.ell <= ell_bound) {
        ++seen[x];
        hw += is_highest_weight(lv, x);
      }
    for (x = chain_prev(lv, Dplus(b.r, lv.v - 1, b.n)); x.ell <= ell_bound; x = chain_prev(lv, x))
      if (x.ell >= -ell_bound) {
        ++seen[x];
        hw += is_highest_weight(lv, x);
      }
    if (hw != 1) ++c.overlaps;
  }
  for (int r = 1; r < lv.u; ++r)
    for (int s = 1; s < lv.v; ++s)
      for (long l = -ell_bound; l <= ell_bound; ++l) {
        ++c.labels_checked;
        auto it = seen.find(Dplus(r, s, l));
        if (it == seen.end())
          ++c.missing;
        else if (it->second > 1)
          ++c.overlaps;
      }
  return c;
}

Report verify_affine(const Level& lv, long ell_bound) {
  Report rep;
  rep.suite = "affine";
  rep.window = lv.str() + ",L=" + std::to_string(ell_bound);
  const int u = lv.u, v = lv.v;

  rep.expect("delta-collision", lv.str(), "", 1, delta_collision_check(lv));
  for (int r = 1; r < u; ++r)
    for (int s = 1; s < v; ++s)
      rep.expect("delta-symmetry", std::to_string(r) + "," + std::to_string(s), "", 1,
                 delta_rs(lv, r, s) == delta_rs(lv, u - r, v - s));

  BlockCensus census = enumerate_blocks(lv, ell_bound);
  rep.expect("census-count", lv.str(), "", static_cast<long>(u - 1) * v, static_cast<long>(census.atypical.size()));
  rep.expect("census-overlaps", lv.str(), "", 0, census.overlaps);
  rep.expect("census-missing", lv.str(), "", 0, census.missing);

  // Inventory: canonical atypicals with small flow plus a few raw forms.
  std::vector<SimpleLabel> inv;
  for (int r = 1; r < u; ++r) {
    inv.push_back(Irr(r));
    for (int s = 1; s < v; ++s) {
      inv.push_back(Dminus(r, s, 1));
      for (long l = -3; l <= 3; ++l) inv.push_back(Dplus(r, s, l));
    }
  }

  long sigma_bad = 0, norm_bad = 0, block_bad = 0, conj_bad = 0;
  for (const auto& x : inv) {
    const SimpleLabel y = normalize(lv, x);
    norm_bad += normalize(lv, y) != y;
    norm_bad += sigma(lv, x, 0) != y;
    for (long a = -4; a <= 4; ++a) {
      sigma_bad += sigma(lv, sigma(lv, x, a), -a) != y;
      for (long b = -4; b <= 4; ++b) sigma_bad += sigma(lv, x, a + b) != sigma(lv, sigma(lv, x, b), a);
    }
    for (const auto& z : inv) {
      const int e = ext1_simples(lv, x, z);
      if (e && !(block_of(lv, x) == block_of(lv, z))) ++block_bad;
      conj_bad += ext1_simples(lv, conjugate(lv, x), conjugate(lv, z)) != e;
      conj_bad += ext1_simples(lv, z, x) != e;
    }
  }
  rep.expect("normalize-idempotent", lv.str(), "", 0, norm_bad);
  rep.expect("sigma-action", lv.str(), "", 0, sigma_bad);
  rep.expect("ext-within-block", lv.str(), "", 0, block_bad);
  rep.expect("conjugation-symmetry", lv.str(), "", 0, conj_bad);

  for (int r = 1; r < u; ++r) {
    const std::string rs = std::to_string(r);
    rep.expect("sigma-irr", "L(" + rs + ")", "", 1, sigma(lv, Irr(r), 1) == Dplus(u - r, v - 1, 0));
    rep.expect("block-of-irr", "L(" + rs + ")", "", 1,
               block_of(lv, Irr(u - r)) == atypical_block(r, -1));
    rep.expect("block-of-hw", "D+(" + rs + "," + std::to_string(v - 1) + ",0)", "", 1,
               block_of(lv, Dplus(r, v - 1, 0)) == atypical_block(r, 0));
    rep.expect("ext-irr", "L(" + rs + ")", "", 0, [&] {
      long bad = 0;
      for (int r2 = 1; r2 < u; ++r2) bad += ext1_simples(lv, Irr(r), Irr(r2));
      return bad;
    }());
    for (int s = 1; s < v; ++s) {
      const std::string d = rs + "," + std::to_string(s);
      rep.expect("ext-dual-pair", "D+(" + d + ")", "D-(dual)", 1,
                 ext1_simples(lv, Dplus(r, s), Dminus(u - r, v - s)));
      rep.expect("ext-dual-pair", "D-(" + d + ")", "D+(dual)", 1,
                 ext1_simples(lv, Dminus(r, s), Dplus(u - r, v - s)));
      long same = 0;
      for (int r2 = 1; r2 < u; ++r2)
        for (int s2 = 1; s2 < v; ++s2) {
          same += ext1_simples(lv, Dplus(r, s), Dplus(r2, s2));
          same += ext1_simples(lv, Dminus(r, s), Dminus(r2, s2));
          if (r2 != u - r || s2 != v - s) same += ext1_simples(lv, Dplus(r, s), Dminus(r2, s2));
        }
      rep.expect("ext-same-sign", "D(" + d + ")", "", 0, same);
    }

    // The first v members of C_r.
    std::vector<SimpleLabel> chain = block_chain(lv, atypical_block(r, 0), 0, v - 1);
    bool display = chain.size() == static_cast<std::size_t>(v);
    for (int k = 0; display && k <= v - 2; ++k) display = chain[static_cast<std::size_t>(k)] == Dplus(r, v - 1 - k, -k);
    display = display && chain.back() == Dplus(u - r, v - 1, -v);
    rep.expect("chain-display", "C(" + rs + ",0)", "", 1, display);
  }

  for (const auto& b : census.atypical) {
    std::vector<SimpleLabel> ch = block_chain(lv, b, -6, 6);
    for (int i = 0; i < static_cast<int>(ch.size()); ++i)
      for (int j = std::max(0, i - 3); j < std::min(static_cast<int>(ch.size()), i + 4); ++j)
        rep.expect("ext-chain", b.str() + ":L(" + std::to_string(i - 6) + ")", "L(" + std::to_string(j - 6) + ")",
                   std::abs(i - j) == 1, ext1_simples(lv, ch[static_cast<std::size_t>(i)], ch[static_cast<std::size_t>(j)]));
    for (const auto& x : ch) {
      if (!(block_of(lv, x) == b)) ++block_bad;
    }
  }
  rep.expect("chain-block-of", lv.str(), "", 0, block_bad);

  for (const auto& [r, s] : census.typical_classes) {
    SimpleLabel e = Etyp(lambda_rs(lv, r, s) + Rat(1, 4L * v + 1), r, s, 0);
    long nz = 0;
    for (const auto& x : inv) nz += ext1_simples(lv, e, x) + ext1_simples(lv, x, e);
    rep.expect("ext-typical", normalize(lv, e).str(), "", 0, nz);
  }
  return rep;
}

}  // namespace blockcalc::affine
