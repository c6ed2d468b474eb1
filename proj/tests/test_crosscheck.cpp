#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockcalc/crosscheck.hpp"

using namespace blockcalc;
using namespace blockcalc::cross;
namespace zz = blockcalc::zigzag;

namespace {

ExtTable renamed(const ExtTable& t, bool reflect, int shift) {
  ExtTable out = t;
  out.entries.clear();
  auto f = [&](const std::string& s) {
    zz::ZigzagName z = zz::ZigzagName::parse(s);
    if (reflect) z = z.reflected();
    return z.shifted(shift).str();
  };
  for (const auto& [k, v] : t.entries) out.entries[{f(k.first), f(k.second)}] = v;
  return out;
}

}  // namespace

TEST_CASE("affine table") {
  const affine::Level lv{3, 2};
  for (const auto& b : affine::atypical_blocks(lv)) {
    ExtTable t = table_affine(lv, b, 3);
    CHECK(t.entries.size() == 49);
    CHECK(t.aliases.size() == 7);
    for (const auto& [k, v] : t.entries) {
      const int n = zz::ZigzagName::parse(k.first).n, m = zz::ZigzagName::parse(k.second).n;
      CHECK(v == (std::abs(n - m) == 1));
    }
  }
  affine::BlockId typ = affine::block_of(lv, affine::Etyp(Rat(1, 9), 1, 1));
  CHECK_THROWS_AS(table_affine(lv, typ, 2), std::invalid_argument);
}

TEST_CASE("zigzag and quantum group tables agree") {
  ExtTable z = table_zigzag(3, Objects::All);
  CHECK(z.entries.size() == 28u * 28u);
  CHECK(z.entries.at({"E+(0)", "E+(1)"}) == 1);
  CHECK(z.entries.at({"P(0)", "L(1)"}) == 0);
  CHECK(z.entries.at({"L(1)", "E+(0)"}) == 0);
  CHECK(z.entries.at({"L(-1)", "E+(0)"}) == 1);
  for (int r = 2; r <= 3; ++r)
    for (int i = 0; i <= r - 2; ++i) {
      ExtTable q = table_qg({r, 1}, i, 3, Objects::All);
      Diff d = diff_tables(z, q);
      CHECK(d.empty());
      CHECK(d.shift == 0);
      CHECK_FALSE(d.reflected);
      CHECK(d.compared == static_cast<long>(z.entries.size()));
    }
  ExtTable s = table_zigzag(3, Objects::Simples);
  const affine::Level lv{5, 3};
  for (const auto& b : affine::atypical_blocks(lv)) CHECK(diff_tables(table_affine(lv, b, 3), s).empty());
}

TEST_CASE("the diff notices corruption and recovers renamings") {
  ExtTable z = table_zigzag(2, Objects::All);
  ExtTable bad = z;
  bad.entries.at({"E+(0)", "E+(1)"}) = 0;
  Diff d = diff_tables(z, bad);
  CHECK_FALSE(d.empty());
  REQUIRE(d.mismatches.size() == 1);
  CHECK(d.mismatches[0].lhs == "E+(0)");

  // A marker entry breaks translation and reflection symmetry.
  ExtTable marked = z;
  marked.entries.at({"E+(0)", "L(0)"}) = 7;
  Diff shifted = diff_tables(marked, renamed(marked, false, 1));
  CHECK(shifted.empty());
  CHECK(shifted.shift == -1);
  CHECK_FALSE(shifted.reflected);
  Diff refl = diff_tables(marked, renamed(marked, true, 0));
  CHECK(refl.empty());
  CHECK(refl.reflected);
  CHECK(refl.shift == 0);

  ExtTable empty;
  CHECK_FALSE(diff_tables(z, empty).empty());
  CHECK(diff_tables(z, empty).compared == 0);
}

TEST_CASE("verification suite, small radius") {
  Report rep = verify_cross({3, 2}, 2, 2);
  CHECK(rep.ok());
  CHECK(rep.checks > 10);
  CHECK(rep.values.count("table:zigzag:L(0),L(1)") == 1);
}
