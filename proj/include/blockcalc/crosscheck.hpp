#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blockcalc/affine_labels.hpp"
#include "blockcalc/quantum_group.hpp"
#include "blockcalc/report.hpp"
#include "blockcalc/zigzag.hpp"

namespace blockcalc::cross {

// Ext^1 dimensions between block objects named L(n), E+(n), E-(n), P(n) with
// |n| <= radius.
struct ExtTable {
  std::string provenance;
  int radius = 0;
  std::map<std::pair<std::string, std::string>, int> entries;
  // Optional display names, e.g. the affine label behind L(n).
  std::map<std::string, std::string> aliases;
};

enum class Objects { Simples, All };

ExtTable table_affine(const affine::Level& lv, const affine::BlockId& block, int radius);
ExtTable table_zigzag(int radius, Objects objects);
ExtTable table_qg(const qg::QGParams& p, int i, int radius, Objects objects);

struct Diff {
  int shift = 0;
  bool reflected = false;
  long compared = 0;
  // Entries of b with no counterpart in a after renaming.
  long missing = 0;
  std::vector<Mismatch> mismatches;
  bool empty() const { return mismatches.empty() && compared > 0; }
  long score() const { return static_cast<long>(mismatches.size()) + missing; }
};

// Compares a with b after renaming b by n -> +-n + shift, choosing the
// normalization with the fewest disagreements plus entries of b left
// without a counterpart (identity on ties). Only pairs present in both
// tables are compared.
Diff diff_tables(const ExtTable& a, const ExtTable& b, int max_shift = 2);

// Affine rules against the zigzag table for every atypical block of lv,
// zigzag against quantum group for every block of r (all four object kinds),
// affine against quantum group on simples, and the P/E Loewy layers of the
// two linear realizations.
Report verify_cross(const affine::Level& lv, int r, int radius);

}  // namespace blockcalc::cross
