#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "blockcalc/zigzag.hpp"

using namespace blockcalc;
using namespace blockcalc::zigzag;

namespace {

const Window W{-9, 9};

// Thin string on [s, s + len] written down directly: vertex s + k is a top
// when k has the parity top_parity, and every top maps onto its neighbours.
ZigzagRep string_oracle(int s, int len, int top_parity, Window w) {
  ZigzagRep z(w);
  const Mat<Rat> one = Mat<Rat>::Constant(1, 1, Rat(1));
  for (int v = s; v <= s + len; ++v) z.set_dim(v, 1);
  for (int v = s; v <= s + len; ++v) {
    if (((v - s) % 2 + 2) % 2 != top_parity) continue;
    if (v + 1 <= s + len) z.set_a(v, one);
    if (v - 1 >= s) z.set_b(v, one);
  }
  return z;
}

// Mirror image under v -> -v; arrows a and b trade places.
ZigzagRep mirror(const ZigzagRep& z) {
  Window w{-z.window.hi, -z.window.lo};
  ZigzagRep out(w);
  for (int v = z.window.lo; v <= z.window.hi; ++v) out.set_dim(-v, z.dim(v));
  for (int v = z.window.lo; v <= z.window.hi; ++v) {
    if (v + 1 <= z.window.hi) out.set_b(-v, z.a(v));
    if (v - 1 >= z.window.lo) out.set_a(-v, z.b(v));
  }
  return out;
}

bool iso(const ZigzagRep& x, const ZigzagRep& y) {
  return is_isomorphic(presentation(), to_module(x), to_module(y));
}

std::vector<std::string> names_at(int s, int len, int parity) {
  std::vector<std::string> out;
  for (int v = s; v <= s + len; ++v)
    if ((v - s) % 2 == parity) out.push_back(L(v).str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("names: parse, print, support, reflection") {
  for (const auto& x : {L(-3), Eplus(2), Eminus(0), P(5), Lam(-1, 3), V(4, 0), Lam(0, -1)}) {
    CHECK(ZigzagName::parse(x.str()) == x);
    CHECK(x.reflected().reflected() == x);
    auto [a, b] = x.support();
    auto [ra, rb] = x.reflected().support();
    CHECK(ra == -b);
    CHECK(rb == -a);
  }
  CHECK(ZigzagName::parse(" Eplus( -2 ) ") == Eplus(-2));
  CHECK(ZigzagName::parse("E-(1)") == Eminus(1));
  CHECK(Eplus(0).reflected() == Eminus(0));
  CHECK(Lam(1, 2).reflected() == Lam(-3, 2));
  CHECK(Lam(1, 3).reflected() == V(-4, 3));
  CHECK(P(2).shifted(-3) == P(-1));
  CHECK_THROWS_AS(ZigzagName::parse("Q(1)"), std::invalid_argument);
  CHECK_THROWS_AS(ZigzagName::parse("Lam(1)"), std::invalid_argument);
  CHECK_THROWS_AS(Lam(0, -2), std::invalid_argument);
  CHECK(Window::parse("-4..6").lo == -4);
  CHECK(Window::parse("-4..6").last() == 4);
  CHECK_THROWS_AS(Window::parse("0..3"), std::invalid_argument);
  CHECK_THROWS_AS(Window::parse("abc"), std::invalid_argument);
}

TEST_CASE("basic modules satisfy the relations and have the expected shape") {
  for (int n = -4; n <= 4; ++n)
    for (const auto& x : {L(n), Eplus(n), Eminus(n), P(n), Lam(n, 2), V(n, 3)}) {
      ZigzagRep z = build(x, W);
      CHECK(z.check_relations());
      CHECK(check_relations(presentation(), to_module(z)));
      CHECK(z.support() == x.support());
      CHECK(iso(to_rep(to_module(z), W), z));
    }
  CHECK(build(P(0), W).total_dim() == 4);
  CHECK(build(Lam(0, -1), W).total_dim() == 0);
  CHECK_THROWS_AS(build(P(7), W), WindowError);
  CHECK_THROWS_AS(build(Lam(5, 3), W), WindowError);
}

TEST_CASE("string modules match a direct construction") {
  for (int s = -5; s <= 0; ++s)
    for (int len = 0; len <= 6; ++len) {
      if (!W.fits(s, s + len)) continue;
      ZigzagRep lam = build(Lam(s, len), W), v = build(V(s, len), W);
      CHECK(iso(lam, string_oracle(s, len, len == 0 ? 0 : 1, W)));
      CHECK(iso(v, string_oracle(s, len, 0, W)));
      CHECK(is_indecomposable(presentation(), to_module(lam)));
      if (len == 0) continue;
      CHECK(zz_loewy(lam) == Layers{names_at(s, len, 1), names_at(s, len, 0)});
      CHECK(zz_loewy(v) == Layers{names_at(s, len, 0), names_at(s, len, 1)});
      CHECK_FALSE(iso(lam, v));
    }
  CHECK(iso(build(Lam(0, 1), W), build(Eplus(0), W)));
  CHECK(iso(build(V(0, 1), W), build(Eminus(1), W)));
}

TEST_CASE("Loewy layers of the small modules") {
  CHECK(zz_loewy(build(Eplus(0), W)) == Layers{{"L(1)"}, {"L(0)"}});
  CHECK(zz_loewy(build(Eminus(0), W)) == Layers{{"L(-1)"}, {"L(0)"}});
  CHECK(zz_loewy(build(P(2), W)) == Layers{{"L(2)"}, {"L(1)", "L(3)"}, {"L(2)"}});
}

TEST_CASE("reflection of names agrees with mirrored representations") {
  for (const auto& x : {L(1), Eplus(1), Eminus(-2), P(0), Lam(-2, 3), Lam(0, 4), V(-1, 3), V(-3, 2)}) {
    ZigzagRep m = mirror(build(x, W));
    CHECK(iso(m, build(x.reflected(), W)));
  }
}

TEST_CASE("flip") {
  CHECK(iso(flip(build(Eplus(0), W)), build(Eminus(1), W)));
  CHECK(iso(flip(build(P(1), W)), build(P(1), W)));
  CHECK(iso(flip(build(L(3), W)), build(L(3), W)));
  std::vector<ZigzagName> names{L(0), L(1), Eplus(0), Eminus(1), P(0), Lam(-1, 3), V(0, 2)};
  for (const auto& x : names) {
    ZigzagRep z = build(x, W);
    CHECK(flip(z).check_relations());
    CHECK(iso(flip(flip(z)), z));
    for (const auto& y : names) {
      ZigzagRep u = build(y, W);
      CHECK(zz_ext1(flip(z), flip(u)).dim == zz_ext1(u, z).dim);
      CHECK(zz_hom(flip(z), flip(u)) == zz_hom(u, z));
    }
  }
}

TEST_CASE("classification") {
  for (const auto& x : {L(2), Eplus(-1), Eminus(3), P(0), Lam(-3, 4), V(-2, 5), Lam(0, 2)}) {
    Classification c = classify_indecomposable(build(x, W));
    REQUIRE(c.kind == Classification::Kind::Named);
    CHECK(*c.name == x);
  }
  ZigzagRep sum = to_rep(direct_sum(build_module(L(0), W), build_module(L(1), W)), W);
  CHECK_THROWS_AS(classify_indecomposable(sum), std::invalid_argument);
  CHECK_THROWS_AS(classify_indecomposable(ZigzagRep(W)), std::invalid_argument);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(1, 7), sign(0, 1);
  for (int n = -3; n <= 3; ++n) {
    Rat k(d(rng) * (sign(rng) ? 1 : -1));
    auto ext_of = [&](const ZigzagName& q, const ZigzagName& s) {
      auto mq = build_module(q, W), ms = build_module(s, W);
      ExtSpace<Rat> e = ext1(presentation(), mq, ms);
      REQUIRE(e.dim == 1);
      Cocycle<Rat> c = e.cocycles.front();
      for (auto& [g, x] : c) x *= k;
      return to_rep(extend(presentation(), mq, ms, c), W);
    };
    CHECK(*classify_indecomposable(ext_of(L(n + 1), L(n))).name == Eplus(n));
    CHECK(*classify_indecomposable(ext_of(L(n - 1), L(n))).name == Eminus(n));
    CHECK(*classify_indecomposable(ext_of(Eplus(n - 1), Eplus(n))).name == P(n));
    CHECK(*classify_indecomposable(ext_of(Eminus(n + 1), Eminus(n))).name == P(n));
  }
}

TEST_CASE("hom and ext between simples and small modules") {
  for (int n = -3; n <= 3; ++n)
    for (int m = -5; m <= 5; ++m) {
      CHECK(zz_hom(build(L(n), W), build(L(m), W)) == (n == m));
      CHECK(zz_ext1(build(L(n), W), build(L(m), W)).dim == (std::abs(n - m) == 1));
      CHECK(zz_hom(build(P(n), W), build(L(m), W)) == (n == m));
      if (std::abs(m) <= 4) CHECK(zz_ext1(build(P(n), W), build(L(m), W)).dim == 0);
    }
}

TEST_CASE("projective resolutions and higher Ext") {
  const Window w{-12, 12};
  ZigzagResolution r = projective_resolution(0, 4, w);
  REQUIRE(r.terms_match.size() == 5);
  for (bool ok : r.terms_match) CHECK(ok);
  for (std::size_t j = 0; j < r.resolution.terms.size(); ++j)
    CHECK(r.resolution.terms[j].dim() == 4 * static_cast<int>(j + 1));
  ZigzagRep l0 = build(L(0), w);
  for (int s = 0; s <= 3; ++s)
    for (int m = -5; m <= 5; ++m) {
      const bool expect = std::abs(m) <= s && ((s - m) % 2 == 0);
      CHECK(zz_ext_s(l0, build(L(m), w), s) == static_cast<int>(expect));
    }
  CHECK_THROWS_AS(zz_ext_s(build(L(0), {-5, 5}), build(L(0), {-5, 5}), 4), WindowError);
}

TEST_CASE("window growth leaves results unchanged") {
  Report a = verify_main({-8, 8});
  Report b = verify_main({-10, 10});
  CHECK(a.ok());
  CHECK(b.ok());
  CHECK(compare_values(a, b).empty());
  CHECK(a.checks > 100);
}
