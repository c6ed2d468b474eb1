#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "blockcalc/rational.hpp"

using blockcalc::Rat;

TEST_CASE("canonical form and parsing") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat("-10/4").str() == "-5/2");
  CHECK(Rat(-5, 2).num_str() == "-5");
  CHECK(Rat(-5, 2).den_str() == "2");
  CHECK_THROWS(Rat("abc"));
  CHECK_THROWS(Rat("1/0"));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("floor, integer conversion and mod") {
  CHECK(Rat(-3, 2).floor() == Rat(-2));
  CHECK(Rat(7, 2).floor() == Rat(3));
  CHECK(Rat(4).to_long() == 4);
  CHECK_THROWS(Rat(1, 2).to_long());
  CHECK(mod(Rat(-1, 2), Rat(2)) == Rat(3, 2));
  CHECK(mod(Rat(5), Rat(2)) == Rat(1));
}

TEST_CASE("big values stay exact") {
  Rat x(1);
  for (int i = 0; i < 80; ++i) x *= Rat(3);
  Rat y = x + Rat(1, 7);
  CHECK((y - x) == Rat(1, 7));
  CHECK(x.num_str().size() == 39);
}

TEST_CASE("ordering and hashing") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(0));
  std::unordered_set<Rat, blockcalc::RatHash> s{Rat(1, 2), Rat(2, 4), Rat(1)};
  CHECK(s.size() == 2);
}
