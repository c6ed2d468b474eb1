#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockcalc/affine_labels.hpp"
#include "blockcalc/crosscheck.hpp"
#include "blockcalc/quantum_group.hpp"
#include "blockcalc/serialize.hpp"
#include "blockcalc/zigzag.hpp"

using namespace blockcalc;

namespace {

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("range", "expected N0..N1, got " + text);
  return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

// "W" means -W..W.
zigzag::Window zigzag_window(const std::string& text) {
  if (text.find("..") == std::string::npos) {
    const int w = std::stoi(text);
    return {-w, w};
  }
  return zigzag::Window::parse(text);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const Report& r) {
  std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << " [" << r.window << "] " << r.checks << " checks, "
            << r.mismatches.size() << " mismatches\n";
  for (const auto& m : r.mismatches)
    std::cout << "  " << m.item << " " << m.lhs << " " << m.rhs << ": expected " << m.expected << ", got " << m.got
              << "\n";
}

Report zigzag_suite(zigzag::Window w) {
  Report r = zigzag::verify_main(w);
  r.merge(zigzag::verify_ext_s({w.lo - 2, w.hi + 3}, 5, 5));
  r.merge(zigzag::verify_extension_list({w.lo + 4, w.hi + 6}, 3));
  r.suite = "zigzag";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext groups, Loewy diagrams and block structure of weight module categories"};
  app.require_subcommand(1);

  // qg
  auto* qgc = app.add_subcommand("qg", "unrolled small quantum group of sl2");
  int qg_r = 2, qg_block = 0, qg_window = 4;
  std::string qg_table = "ext1";
  bool qg_dot = false;
  qgc->add_option("--r", qg_r, "q is a primitive 2r-th root of unity")->check(CLI::Range(2, 64));
  qgc->add_option("--block", qg_block, "atypical block index i in [0, r-2]");
  qgc->add_option("--window", qg_window, "report L_n for |n| <= W");
  qgc->add_option("--table", qg_table)->check(CLI::IsMember({"ext1", "loewy"}));
  qgc->add_flag("--dot", qg_dot, "emit Loewy diagrams as DOT");

  // affine
  auto* afc = app.add_subcommand("affine", "label calculus at admissible level -2 + u/v");
  int af_u = 3, af_v = 2;
  afc->add_option("--u", af_u);
  afc->add_option("--v", af_v);
  afc->require_subcommand(1);
  long af_bound = 8;
  auto* af_blocks = afc->add_subcommand("blocks", "block census");
  af_blocks->add_option("--ell", af_bound, "spectral flow bound for the partition check");
  auto* af_simples = afc->add_subcommand("simples", "canonical highest weight simples and typical classes");
  auto* af_chain = afc->add_subcommand("chain", "simples L_n of an atypical block");
  int ch_r = 1, ch_flow = 0;
  std::string ch_range = "-3..3";
  af_chain->add_option("--r", ch_r)->required();
  af_chain->add_option("--flow", ch_flow, "block sigma^flow(C_r), flow in [-1, v-2]");
  af_chain->add_option("--n", ch_range, "index range N0..N1");
  auto* af_pair = afc->add_subcommand("extpair", "dim Ext^1(A, B) of two simples");
  std::string pa, pb;
  af_pair->add_option("A", pa)->required();
  af_pair->add_option("B", pb)->required();
  auto* af_delta = afc->add_subcommand("delta-check", "exhaustive conformal weight collision scan");

  // zigzag
  auto* zzc = app.add_subcommand("zigzag", "zigzag algebra of type A_infinity");
  std::string zz_window = "-8..8";
  zzc->add_option("--window", zz_window, "vertex window LO..HI (outer two vertices are padding)");
  zzc->require_subcommand(1);
  auto* zz_ext1c = zzc->add_subcommand("ext1", "Ext^1(A, B)");
  std::string za, zb;
  int zs = 1, zz_mmax = 3;
  zz_ext1c->add_option("A", za)->required();
  zz_ext1c->add_option("B", zb)->required();
  auto* zz_extsc = zzc->add_subcommand("exts", "dim Ext^s(A, B) from a minimal resolution");
  zz_extsc->add_option("A", za)->required();
  zz_extsc->add_option("B", zb)->required();
  zz_extsc->add_option("S", zs)->required();
  auto* zz_loewyc = zzc->add_subcommand("loewy", "radical layers");
  bool zz_dot = false;
  zz_loewyc->add_option("NAME", za)->required();
  zz_loewyc->add_flag("--dot", zz_dot);
  auto* zz_main = zzc->add_subcommand("verify-main", "Ext^1 and projective structure of the block objects");
  auto* zz_list = zzc->add_subcommand("verify-list", "extension dimension list and middle terms");
  zz_list->add_option("--mmax", zz_mmax);

  // verify
  auto* vc = app.add_subcommand("verify", "run verification suites; nonzero exit on mismatch");
  std::string suite = "all", v_window;
  int v_u = 3, v_v = 2, v_r = 2;
  bool v_json = false;
  vc->add_option("--suite", suite)->check(CLI::IsMember({"all", "affine", "zigzag", "qg", "cross"}));
  vc->add_option("--u", v_u);
  vc->add_option("--v", v_v);
  vc->add_option("--r", v_r);
  vc->add_option("--window", v_window, "zigzag: LO..HI or W; qg, cross: W");
  vc->add_flag("--json", v_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*qgc) {
      const qg::QGParams p{qg_r, 1};
      if (qg_table == "ext1") {
        Eigen::MatrixXi t = qg::qg_ext_table(p, qg_block, qg_window);
        json rows = json::array(), names = json::array();
        for (int n = -qg_window; n <= qg_window; ++n)
          names.push_back({{"name", zigzag::L(n).str()}, {"module", qg::block_simple_label(p, qg_block, n).str()}});
        for (Eigen::Index i = 0; i < t.rows(); ++i) {
          json row = json::array();
          for (Eigen::Index j = 0; j < t.cols(); ++j) row.push_back(t(i, j));
          rows.push_back(row);
        }
        print({{"r", qg_r}, {"block", qg_block}, {"window", qg_window}, {"simples", names}, {"ext1", rows}});
      } else {
        auto table = qg::qg_loewy_table(p, qg_block, qg_window);
        if (qg_dot) {
          for (const auto& [name, layers] : table) std::cout << loewy_dot(name, layers);
        } else {
          json j = json::object();
          for (const auto& [name, layers] : table) j[name] = to_json(layers);
          print({{"r", qg_r}, {"block", qg_block}, {"window", qg_window}, {"loewy", j}});
        }
      }
      return 0;
    }

    if (*afc) {
      const affine::Level lv(af_u, af_v);
      if (*af_blocks) {
        affine::BlockCensus c = affine::enumerate_blocks(lv, af_bound);
        json blocks = json::array();
        for (const auto& b : c.atypical) {
          json jb = to_json(b);
          jb["L0"] = to_json(affine::block_chain(lv, b, 0, 0).front());
          blocks.push_back(jb);
        }
        print({{"level", {{"u", af_u}, {"v", af_v}}},
               {"atypical_blocks", blocks},
               {"atypical_count", c.atypical.size()},
               {"typical", c.typical_description},
               {"labels_checked", c.labels_checked},
               {"overlaps", c.overlaps},
               {"missing", c.missing},
               {"partition_ok", c.partition_ok()}});
        return c.partition_ok() ? 0 : 1;
      }
      if (*af_simples) {
        json hw = json::array(), typ = json::array();
        for (int r = 1; r < af_u; ++r) {
          json x = to_json(affine::normalize(lv, affine::Irr(r)));
          x["name"] = affine::Irr(r).str();
          x["block"] = to_json(affine::block_of(lv, affine::Irr(r)));
          hw.push_back(x);
          for (int s = 1; s < af_v; ++s) {
            json d = to_json(affine::Dplus(r, s));
            d["name"] = affine::Dplus(r, s).str();
            d["block"] = to_json(affine::block_of(lv, affine::Dplus(r, s)));
            d["lambda_rs"] = affine::lambda_rs(lv, r, s).str();
            d["delta_rs"] = affine::delta_rs(lv, r, s).str();
            hw.push_back(d);
          }
        }
        for (const auto& [r, s] : affine::enumerate_blocks(lv, 0).typical_classes)
          typ.push_back({{"r", r}, {"s", s}, {"delta", affine::delta_rs(lv, r, s).str()}});
        print({{"highest_weight", hw}, {"typical_classes", typ}});
        return 0;
      }
      if (*af_chain) {
        auto [n0, n1] = parse_range(ch_range);
        affine::BlockId b{affine::BlockId::Kind::Atypical, ch_r, ch_flow};
        json out = json::array();
        long n = n0;
        for (const auto& x : affine::block_chain(lv, b, n0, n1)) {
          json jx = to_json(x);
          jx["n"] = n++;
          jx["name"] = x.str();
          out.push_back(jx);
        }
        print({{"block", to_json(b)}, {"chain", out}});
        return 0;
      }
      if (*af_pair) {
        auto a = affine::SimpleLabel::parse(pa), b = affine::SimpleLabel::parse(pb);
        print({{"A", to_json(affine::normalize(lv, a))},
               {"B", to_json(affine::normalize(lv, b))},
               {"ext1", affine::ext1_simples(lv, a, b)}});
        return 0;
      }
      if (*af_delta) {
        const bool ok = affine::delta_collision_check(lv);
        print({{"level", {{"u", af_u}, {"v", af_v}}}, {"delta_collision_check", ok}});
        return ok ? 0 : 1;
      }
    }

    if (*zzc) {
      const zigzag::Window w = zigzag_window(zz_window);
      if (*zz_ext1c) {
        auto e = zigzag::zz_ext1(zigzag::build(zigzag::ZigzagName::parse(za), w),
                                 zigzag::build(zigzag::ZigzagName::parse(zb), w));
        print({{"A", za}, {"B", zb}, {"ext1", to_json(e)}});
        return 0;
      }
      if (*zz_extsc) {
        const int d = zigzag::zz_ext_s(zigzag::build(zigzag::ZigzagName::parse(za), w),
                                       zigzag::build(zigzag::ZigzagName::parse(zb), w), zs);
        print({{"A", za}, {"B", zb}, {"s", zs}, {"dim", d}});
        return 0;
      }
      if (*zz_loewyc) {
        Layers l = zigzag::zz_loewy(zigzag::build(zigzag::ZigzagName::parse(za), w));
        if (zz_dot)
          std::cout << loewy_dot(za, l);
        else
          print({{"name", za}, {"layers", to_json(l)}});
        return 0;
      }
      Report r = *zz_main ? zigzag::verify_main(w) : zigzag::verify_extension_list(w, zz_mmax);
      print(to_json(r));
      return r.ok() ? 0 : 1;
    }

    if (*vc) {
      std::vector<Report> reports;
      const bool all = suite == "all";
      if (all || suite == "affine") reports.push_back(affine::verify_affine(affine::Level(v_u, v_v)));
      if (all || suite == "zigzag") reports.push_back(zigzag_suite(zigzag_window(v_window.empty() ? "8" : v_window)));
      if (all || suite == "qg") reports.push_back(qg::verify_qg(v_r, v_window.empty() ? 6 : std::stoi(v_window)));
      if (all || suite == "cross")
        reports.push_back(
            cross::verify_cross(affine::Level(v_u, v_v), v_r, v_window.empty() ? 4 : std::stoi(v_window)));
      bool ok = true;
      json out = json::array();
      for (const auto& r : reports) {
        ok = ok && r.ok();
        if (v_json)
          out.push_back(to_json(r));
        else
          print_report(r);
      }
      if (v_json) print(reports.size() == 1 ? out.front() : out);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "blockcalc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
