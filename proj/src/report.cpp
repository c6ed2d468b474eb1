#include "blockcalc/report.hpp"

namespace blockcalc {

std::vector<Mismatch> compare_values(const Report& a, const Report& b) {
  std::vector<Mismatch> out;
  for (const auto& [key, va] : a.values) {
    auto it = b.values.find(key);
    if (it != b.values.end() && it->second != va) out.push_back({"window-stability", key, "", va, it->second});
  }
  return out;
}

}  // namespace blockcalc
