#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blockcalc/serialize.hpp"
#include "blockcalc/zigzag.hpp"

using namespace blockcalc;

TEST_CASE("exact numbers round trip through JSON text") {
  for (const Rat& x : {Rat(0), Rat(-7, 3), Rat("123456789012345678901234567890/7")}) {
    json j = json::parse(to_json(x).dump());
    CHECK(rat_from_json(j) == x);
    CHECK(j.at("num").is_string());
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int m : {1, 3, 8, 12, 15}) {
    std::vector<Rat> poly;
    for (int k = 0; k < 2 * m; ++k) poly.emplace_back(d(rng), 1 + std::abs(d(rng)));
    CycNum x(m, poly);
    json j = json::parse(to_json(x).dump());
    CHECK(cyc_from_json(j) == x);
    CHECK(j.at("order") == m);
    CHECK(j.at("numerators").size() == static_cast<std::size_t>(euler_phi(m)));
  }
  json broken{{"order", 3}, {"numerators", {"1", "2"}}, {"denominators", {"1"}}};
  CHECK_THROWS_AS(cyc_from_json(broken), std::invalid_argument);
}

TEST_CASE("structured outputs") {
  Mat<Rat> m(2, 3);
  m << Rat(1), Rat(0), Rat(1, 2), Rat(-1), Rat(2), Rat(3);
  json jm = to_json(m);
  REQUIRE(jm.size() == 2);
  CHECK(jm[0].size() == 3);
  CHECK(rat_from_json(jm[0][2]) == Rat(1, 2));

  Report r;
  r.suite = "s";
  r.window = "w";
  r.expect("item", "a", "b", 1, 0);
  json jr = to_json(r);
  CHECK(jr.at("checks") == 1);
  CHECK(jr.at("mismatches")[0].at("expected") == 1);
  CHECK(jr.at("mismatches")[0].at("got") == 0);

  json jl = to_json(affine::Dplus(1, 2, -3));
  CHECK(jl.at("variant") == "Dplus");
  CHECK(jl.at("ell") == -3);
  CHECK(jl.at("lambda").is_null());
  CHECK(to_json(affine::Irr(2)).at("s").is_null());
  CHECK(to_json(affine::Etyp(Rat(1, 3), 1, 1)).at("lambda") == "1/3");
  json jb = to_json(affine::block_of({3, 2}, affine::Dplus(1, 1)));
  CHECK(jb.at("kind") == "atypical");

  cross::ExtTable t;
  t.provenance = "p";
  t.entries[{"L(0)", "L(1)"}] = 1;
  json jt = to_json(t);
  CHECK(jt.at("entries").size() == 1);
  CHECK(jt.at("entries")[0].at("dim") == 1);
  CHECK_FALSE(jt.contains("aliases"));

  const zigzag::Window w{-6, 6};
  auto e = ext1(zigzag::presentation(), zigzag::build_module(zigzag::L(1), w), zigzag::build_module(zigzag::L(0), w));
  json je = to_json(e);
  CHECK(je.at("dim") == 1);
  CHECK(je.at("cocycles")[0].contains("a"));
  CHECK(je.at("cocycles")[0].contains("b"));
}

TEST_CASE("Loewy diagrams as DOT") {
  Layers l{{"L(0)"}, {"L(-1)", "L(1)"}, {"L(0)"}};
  CHECK(to_json(l).dump() == R"j([["L(0)"],["L(-1)","L(1)"],["L(0)"]])j");
  std::string dot = loewy_dot("P(0)", l);
  CHECK(dot.rfind("digraph \"P(0)\" {", 0) == 0);
  CHECK(dot.find("label=\"L(-1)\"") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  CHECK(edges == 4);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(loewy_dot("x\"y", {{"L(0)"}}).find("x\\\"y") != std::string::npos);
}
