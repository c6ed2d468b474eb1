#pragma once

#include <map>
#include <string>
#include <vector>

namespace blockcalc {

struct Mismatch {
  std::string item;
  std::string lhs;
  std::string rhs;
  long expected = 0;
  long got = 0;
};

// Outcome of a verification run. Every computed value is kept under a
// stable key so runs in different windows can be compared.
struct Report {
  std::string suite;
  std::string window;
  std::vector<Mismatch> mismatches;
  std::map<std::string, long> values;
  long checks = 0;

  bool ok() const { return mismatches.empty(); }

  void expect(const std::string& item, const std::string& lhs, const std::string& rhs, long expected, long got) {
    ++checks;
    values[item + ":" + lhs + "," + rhs] = got;
    if (expected != got) mismatches.push_back({item, lhs, rhs, expected, got});
  }

  void merge(const Report& o) {
    mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
    values.insert(o.values.begin(), o.values.end());
    checks += o.checks;
  }
};

// Entries present in both reports whose values differ.
std::vector<Mismatch> compare_values(const Report& a, const Report& b);

}  // namespace blockcalc
