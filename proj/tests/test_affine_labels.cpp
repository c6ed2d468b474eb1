#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "blockcalc/affine_labels.hpp"

using namespace blockcalc;
using namespace blockcalc::affine;

namespace {

const std::vector<Level> kLevels{{3, 2}, {5, 2}, {4, 3}, {5, 3}, {7, 5}, {2, 3}, {2, 5}};

// Canonical atypical labels with |l| <= bound.
std::vector<SimpleLabel> atypicals(const Level& lv, long bound) {
  std::vector<SimpleLabel> out;
  for (int r = 1; r < lv.u; ++r)
    for (int s = 1; s < lv.v; ++s)
      for (long l = -bound; l <= bound; ++l) out.push_back(Dplus(r, s, l));
  return out;
}

// Pairs (N, M) with nonzero Ext^1(N, M), listed straight from the
// characterization: M = sigma^l(D^e_{r,s}), N = sigma^l(D^{-e}_{u-r,v-s}).
std::set<std::pair<SimpleLabel, SimpleLabel>> ext_pairs(const Level& lv, long bound) {
  std::set<std::pair<SimpleLabel, SimpleLabel>> out;
  for (long l = -bound; l <= bound; ++l)
    for (int r = 1; r < lv.u; ++r)
      for (int s = 1; s < lv.v; ++s) {
        SimpleLabel m_plus = normalize(lv, Dplus(r, s, l));
        SimpleLabel n_minus = normalize(lv, Dminus(lv.u - r, lv.v - s, l));
        SimpleLabel m_minus = normalize(lv, Dminus(r, s, l));
        SimpleLabel n_plus = normalize(lv, Dplus(lv.u - r, lv.v - s, l));
        out.insert({n_minus, m_plus});
        out.insert({n_plus, m_minus});
      }
  return out;
}

}  // namespace

TEST_CASE("lambda and conformal weight values") {
  CHECK(lambda_rs({3, 2}, 1, 1) == Rat(-3, 2));
  CHECK(delta_rs({3, 2}, 1, 1) == Rat(-1, 8));
  CHECK(lambda_rs({5, 3}, 2, 1) == Rat(-2, 3));
  CHECK(delta_rs({3, 2}, 1, 0) == Rat(0));
  for (const auto& lv : kLevels)
    for (int r = 1; r < lv.u; ++r)
      for (int s = 0; s < lv.v; ++s) {
        // (r - ts)^2 - 1 over 4t, computed from lambda.
        const Rat x = lambda_rs(lv, r, s) + Rat(1);
        CHECK(delta_rs(lv, r, s) == (x * x - Rat(1)) / (Rat(4) * lv.t()));
        if (s >= 1) CHECK(delta_rs(lv, r, s) == delta_rs(lv, lv.u - r, lv.v - s));
      }
  CHECK_THROWS_AS(lambda_rs({3, 2}, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(delta_rs({3, 2}, 1, 2), std::invalid_argument);
}

TEST_CASE("levels") {
  CHECK_THROWS_AS(Level(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(Level(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Level(3, 1), std::invalid_argument);
  for (const auto& lv : kLevels) CHECK(delta_collision_check(lv));
}

TEST_CASE("labels: parse, print, normalize") {
  for (const auto& x : {Irr(2), Dplus(1, 1, -3), Dminus(2, 1, 4), Etyp(Rat(1, 3), 1, 1, 2)})
    CHECK(SimpleLabel::parse(x.str()) == x);
  CHECK_THROWS_AS(SimpleLabel::parse("D*(1,1)"), std::invalid_argument);
  const Level lv{3, 2};
  CHECK(normalize(lv, Irr(1)) == Dplus(2, 1, -1));
  CHECK(normalize(lv, Dminus(1, 1, 0)) == Dplus(1, 1, -2));
  CHECK(normalize(lv, Dplus(2, 1, 5)) == Dplus(2, 1, 5));
  CHECK_THROWS_AS(normalize(lv, Dplus(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(normalize(lv, Dplus(1, 2)), std::invalid_argument);
  CHECK(normalize(lv, Etyp(Rat(7, 3), 2, 1, 0)).lambda == Rat(1, 3));
  CHECK(normalize(lv, Etyp(Rat(1, 3), 2, 1, 0)) == normalize(lv, Etyp(Rat(1, 3), 1, 1, 0)));
  // lambda_{1,1} = -3/2 is excluded modulo 2.
  CHECK_THROWS_AS(normalize(lv, Etyp(Rat(1, 2), 1, 1)), std::invalid_argument);
  CHECK(is_atypical(Dplus(1, 1)));
  CHECK_FALSE(is_atypical(Etyp(Rat(1, 3), 1, 1)));
  for (const auto& lv2 : kLevels)
    for (const auto& x : atypicals(lv2, 3)) CHECK(normalize(lv2, normalize(lv2, x)) == normalize(lv2, x));
}

TEST_CASE("spectral flow and conjugation") {
  for (const auto& lv : kLevels)
    for (const auto& x : atypicals(lv, 3)) {
      CHECK(sigma(lv, sigma(lv, x, 3), -3) == x);
      CHECK(sigma(lv, sigma(lv, x, 2), 1) == sigma(lv, x, 3));
      CHECK(conjugate(lv, conjugate(lv, x)) == x);
      CHECK(conjugate(lv, sigma(lv, x, 1)) == sigma(lv, conjugate(lv, x), -1));
      for (const auto& y : atypicals(lv, 1))
        CHECK(ext1_simples(lv, x, y) == ext1_simples(lv, conjugate(lv, y), conjugate(lv, x)));
    }
}

TEST_CASE("Ext^1 between simples matches the direct characterization") {
  for (const auto& lv : kLevels) {
    const long bound = 5;
    auto pairs = ext_pairs(lv, bound + 4);
    auto labels = atypicals(lv, bound);
    labels.push_back(Irr(1));
    for (const auto& n : labels)
      for (const auto& m : labels) {
        const int want = pairs.count({normalize(lv, n), normalize(lv, m)}) ? 1 : 0;
        CHECK(ext1_simples(lv, n, m) == want);
        CHECK(ext1_simples(lv, n, m) == ext1_simples(lv, m, n));
      }
    for (const auto& x : labels) {
      CHECK(ext1_simples(lv, x, chain_next(lv, x)) == 1);
      CHECK(ext1_simples(lv, x, chain_prev(lv, x)) == 1);
      CHECK(chain_prev(lv, chain_next(lv, x)) == normalize(lv, x));
      CHECK(chain_next(lv, chain_prev(lv, x)) == normalize(lv, x));
      CHECK(ext1_simples(lv, x, x) == 0);
    }
  }
  const Level lv{3, 2};
  const Rat off(1, 9);
  CHECK(ext1_simples(lv, Etyp(off, 1, 1), Dplus(1, 1)) == 0);
  CHECK(ext1_simples(lv, Dplus(2, 1), Etyp(off, 1, 1)) == 0);
  CHECK(ext1_simples(lv, Etyp(off, 1, 1), Etyp(off, 1, 1)) == 0);
  CHECK_THROWS_AS(chain_next(lv, Etyp(off, 1, 1)), std::invalid_argument);
}

TEST_CASE("block chains") {
  for (const auto& lv : kLevels) {
    for (const auto& b : atypical_blocks(lv)) {
      auto chain = block_chain(lv, b, -6, 6);
      REQUIRE(chain.size() == 13);
      CHECK(chain[6].variant == SimpleLabel::Variant::Dplus);
      CHECK(chain[6].s == lv.v - 1);
      std::set<SimpleLabel> seen(chain.begin(), chain.end());
      CHECK(seen.size() == chain.size());
      for (std::size_t k = 0; k < chain.size(); ++k) {
        CHECK(block_of(lv, chain[k]) == b);
        if (k + 1 < chain.size()) CHECK(chain_next(lv, chain[k]) == chain[k + 1]);
        for (std::size_t j = 0; j < chain.size(); ++j)
          CHECK(ext1_simples(lv, chain[k], chain[j]) == (k + 1 == j || j + 1 == k));
      }
    }
    CHECK(atypical_blocks(lv).size() == static_cast<std::size_t>((lv.u - 1) * lv.v));
  }
  // First members of the chain through D+(r, v-1) at u = 5, v = 3.
  const Level lv{5, 3};
  BlockId b = block_of(lv, Dplus(2, 2, 0));
  auto c = block_chain(lv, b, -1, 3);
  CHECK(c[0] == Dplus(3, 1, 2));
  CHECK(c[1] == Dplus(2, 2, 0));
  CHECK(c[2] == Dplus(2, 1, -1));
  CHECK(c[3] == Dplus(3, 2, -3));
  CHECK(c[4] == Dplus(3, 1, -4));
  const Level lv2{3, 2};
  auto c2 = block_chain(lv2, block_of(lv2, Dplus(1, 1, 0)), 0, 1);
  CHECK(c2[1] == Dplus(2, 1, -2));
  CHECK(block_of(lv2, Etyp(Rat(1, 9), 1, 1)).kind == BlockId::Kind::Typical);
  CHECK(block_of(lv2, Dplus(1, 1, 1)) != block_of(lv2, Dplus(1, 1, 0)));
}

TEST_CASE("census") {
  BlockCensus c32 = enumerate_blocks({3, 2});
  CHECK(c32.atypical.size() == 4);
  CHECK(c32.partition_ok());
  CHECK(c32.labels_checked > 0);
  BlockCensus c53 = enumerate_blocks({5, 3});
  CHECK(c53.atypical.size() == 12);
  CHECK(c53.partition_ok());
  CHECK(c53.typical_classes.size() == 4);
  for (const auto& lv : kLevels) CHECK(enumerate_blocks(lv, 6).partition_ok());
}

TEST_CASE("verification suite") {
  for (const auto& lv : kLevels) {
    Report rep = verify_affine(lv);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
  }
}
