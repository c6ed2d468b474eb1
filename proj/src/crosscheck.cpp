#include "blockcalc/crosscheck.hpp"

#include <stdexcept>

namespace blockcalc::cross {

using zigzag::ZigzagName;

namespace {

std::vector<ZigzagName> objects_of(int radius, Objects objects) {
  std::vector<ZigzagName> out;
  for (int n = -radius; n <= radius; ++n) {
    out.push_back(zigzag::L(n));
    if (objects == Objects::All) {
      out.push_back(zigzag::Eplus(n));
      out.push_back(zigzag::Eminus(n));
      out.push_back(zigzag::P(n));
    }
  }
  return out;
}

std::string rename(const std::string& name, bool reflect, int shift) {
  ZigzagName z = ZigzagName::parse(name);
  if (reflect) z = z.reflected();
  return z.shifted(shift).str();
}

ExtTable simples_only(const ExtTable& t) {
  ExtTable out = t;
  out.entries.clear();
  for (const auto& [k, v] : t.entries)
    if (ZigzagName::parse(k.first).kind == ZigzagName::Kind::L && ZigzagName::parse(k.second).kind == ZigzagName::Kind::L)
      out.entries.emplace(k, v);
  return out;
}

void record(Report& rep, const ExtTable& t, const std::string& tag) {
  for (const auto& [k, v] : t.entries) rep.values["table:" + tag + ":" + k.first + "," + k.second] = v;
}

}  // namespace

ExtTable table_affine(const affine::Level& lv, const affine::BlockId& block, int radius) {
  if (block.kind != affine::BlockId::Kind::Atypical)
    throw std::invalid_argument("table_affine: " + block.str() + " is a typical block");
  ExtTable t;
  t.provenance = "affine-rules";
  t.radius = radius;
  std::vector<affine::SimpleLabel> chain = affine::block_chain(lv, block, -radius, radius);
  for (int a = -radius; a <= radius; ++a) {
    const auto& x = chain[static_cast<std::size_t>(a + radius)];
    t.aliases[zigzag::L(a).str()] = x.str();
    for (int b = -radius; b <= radius; ++b)
      t.entries[{zigzag::L(a).str(), zigzag::L(b).str()}] =
          affine::ext1_simples(lv, x, chain[static_cast<std::size_t>(b + radius)]);
  }
  return t;
}

ExtTable table_zigzag(int radius, Objects objects) {
  const zigzag::Window w{-radius - 3, radius + 3};
  ExtTable t;
  t.provenance = "zigzag";
  t.radius = radius;
  const auto names = objects_of(radius, objects);
  std::map<std::string, ModuleRep<Rat>> mods;
  for (const auto& x : names) mods.emplace(x.str(), zigzag::build_module(x, w));
  for (const auto& x : names)
    for (const auto& y : names)
      t.entries[{x.str(), y.str()}] = ext1(zigzag::presentation(), mods.at(x.str()), mods.at(y.str())).dim;
  return t;
}

ExtTable table_qg(const qg::QGParams& p, int i, int radius, Objects objects) {
  qg::BlockObjects b(p, i);
  ExtTable t;
  t.provenance = "quantum-group";
  t.radius = radius;
  const auto names = objects_of(radius, objects);
  for (const auto& x : names) {
    if (x.kind == ZigzagName::Kind::L) t.aliases[x.str()] = qg::block_simple_label(p, i, x.n).str();
    for (const auto& y : names) t.entries[{x.str(), y.str()}] = b.ext1_dim(x, y);
  }
  return t;
}

Diff diff_tables(const ExtTable& a, const ExtTable& b, int max_shift) {
  Diff best;
  bool have = false;
  for (bool reflect : {false, true})
    for (int k = 0; k <= 2 * max_shift; ++k) {
      // 0, 1, -1, 2, -2, ...
      const int shift = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
      Diff d;
      d.shift = shift;
      d.reflected = reflect;
      for (const auto& [key, vb] : b.entries) {
        std::pair<std::string, std::string> mapped{rename(key.first, reflect, shift), rename(key.second, reflect, shift)};
        auto it = a.entries.find(mapped);
        if (it == a.entries.end()) {
          ++d.missing;
          continue;
        }
        ++d.compared;
        if (it->second != vb) d.mismatches.push_back({"ext1", mapped.first, mapped.second, it->second, vb});
      }
      if (d.compared == 0) continue;
      if (!have || d.score() < best.score()) {
        best = d;
        have = true;
      }
    }
  return best;
}

Report verify_cross(const affine::Level& lv, int r, int radius) {
  Report rep;
  rep.suite = "cross";
  rep.window = lv.str() + ",r=" + std::to_string(r) + ",W=" + std::to_string(radius);

  const ExtTable zz = table_zigzag(radius, Objects::All);
  const ExtTable zz_l = simples_only(zz);
  record(rep, zz, "zigzag");

  std::vector<ExtTable> qgs;
  for (int i = 0; i <= r - 2; ++i) {
    qgs.push_back(table_qg({r, 1}, i, radius, Objects::All));
    const std::string tag = "qg-r" + std::to_string(r) + "-b" + std::to_string(i);
    record(rep, qgs.back(), tag);
    Diff d = diff_tables(zz, qgs.back());
    rep.expect("diff", "zigzag", tag, 0, static_cast<long>(d.mismatches.size()));
    rep.expect("diff-compared", "zigzag", tag, 1, d.compared > 0);
  }

  for (const auto& b : affine::atypical_blocks(lv)) {
    const ExtTable ta = table_affine(lv, b, radius);
    const std::string tag = "affine-" + lv.str() + "-" + b.str();
    record(rep, ta, tag);
    Diff d = diff_tables(ta, zz_l);
    rep.expect("diff", tag, "zigzag", 0, static_cast<long>(d.mismatches.size()));
    rep.expect("diff-compared", tag, "zigzag", 1, d.compared > 0);
    for (std::size_t i = 0; i < qgs.size(); ++i) {
      Diff dq = diff_tables(ta, simples_only(qgs[i]));
      const std::string qtag = "qg-r" + std::to_string(r) + "-b" + std::to_string(i);
      rep.expect("diff", tag, qtag, 0, static_cast<long>(dq.mismatches.size()));
      rep.expect("diff-compared", tag, qtag, 1, dq.compared > 0);
    }
  }

  // Loewy layers of corresponding objects.
  const zigzag::Window w{-radius - 3, radius + 3};
  const Inventory<Rat> zinv = zigzag::simple_inventory(w);
  for (int i = 0; i <= r - 2; ++i) {
    qg::BlockObjects b({r, 1}, i);
    const Inventory<CycNum> qinv = b.inventory(radius + 1);
    for (int n = -radius; n <= radius; ++n)
      for (const auto& x : {zigzag::P(n), zigzag::Eplus(n), zigzag::Eminus(n)}) {
        Layers lz = radical_filtration(zigzag::presentation(), zigzag::build_module(x, w), zinv);
        Layers lq = radical_filtration(b.presentation(), b.get(x), qinv);
        rep.expect("loewy", "zigzag:" + x.str(), "qg-r" + std::to_string(r) + "-b" + std::to_string(i) + ":" + x.str(),
                   1, lz == lq);
      }
  }

  // The harness must notice a single flipped entry.
  ExtTable bad = zz;
  auto& e = bad.entries.at({zigzag::L(0).str(), zigzag::L(1).str()});
  e = 1 - e;
  rep.expect("selftest-corrupted", "zigzag", "zigzag*", 1, !diff_tables(zz, bad).empty());
  return rep;
}

}  // namespace blockcalc::cross
