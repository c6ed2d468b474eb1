#include "blockcalc/serialize.hpp"

#include <sstream>

namespace blockcalc {

namespace {

template <class S>
json matrix_json(const Mat<S>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const Rat& x) { return {{"num", x.num_str()}, {"den", x.den_str()}}; }

json to_json(const CycNum& x) {
  json nums = json::array(), dens = json::array();
  for (const auto& c : x.coeffs()) {
    nums.push_back(c.num_str());
    dens.push_back(c.den_str());
  }
  return {{"order", x.order()}, {"numerators", nums}, {"denominators", dens}};
}

json to_json(const Mat<Rat>& m) { return matrix_json(m); }
json to_json(const Mat<CycNum>& m) { return matrix_json(m); }

json to_json(const Mismatch& m) {
  return {{"item", m.item}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"expected", m.expected}, {"got", m.got}};
}

json to_json(const Report& r) {
  json mm = json::array();
  for (const auto& m : r.mismatches) mm.push_back(to_json(m));
  return {{"suite", r.suite}, {"window", r.window}, {"checks", r.checks}, {"mismatches", mm}};
}

json to_json(const affine::SimpleLabel& x) {
  using V = affine::SimpleLabel::Variant;
  static const char* names[] = {"Irr", "Dplus", "Dminus", "Etyp"};
  json j{{"variant", names[static_cast<int>(x.variant)]}, {"r", x.r}, {"ell", x.ell}};
  j["s"] = x.variant == V::Irr ? json(nullptr) : json(x.s);
  j["lambda"] = x.variant == V::Etyp ? json(x.lambda.str()) : json(nullptr);
  return j;
}

json to_json(const affine::BlockId& b) {
  if (b.kind == affine::BlockId::Kind::Atypical) return {{"kind", "atypical"}, {"r", b.r}, {"n", b.n}};
  return {{"kind", "typical"}, {"r", b.r}, {"s", b.s}, {"ell", b.ell}, {"lambda", b.lambda.str()}};
}

json to_json(const cross::ExtTable& t) {
  json entries = json::array();
  for (const auto& [k, v] : t.entries) entries.push_back({{"lhs", k.first}, {"rhs", k.second}, {"dim", v}});
  json j{{"provenance", t.provenance}, {"radius", t.radius}, {"entries", entries}};
  if (!t.aliases.empty()) j["aliases"] = t.aliases;
  return j;
}

json to_json(const Layers& l) { return json(l); }

Rat rat_from_json(const json& j) {
  return Rat(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

CycNum cyc_from_json(const json& j) {
  const auto& nums = j.at("numerators");
  const auto& dens = j.at("denominators");
  if (nums.size() != dens.size()) throw std::invalid_argument("cyclotomic JSON: length mismatch");
  std::vector<Rat> c;
  for (std::size_t i = 0; i < nums.size(); ++i)
    c.push_back(Rat(nums[i].get<std::string>() + "/" + dens[i].get<std::string>()));
  return CycNum(j.at("order").get<int>(), std::move(c));
}

std::string loewy_dot(const std::string& title, const Layers& layers) {
  std::ostringstream os;
  os << "digraph " << quoted(title) << " {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  auto id = [](std::size_t k, std::size_t i) { return "n" + std::to_string(k) + "_" + std::to_string(i); };
  for (std::size_t k = 0; k < layers.size(); ++k) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < layers[k].size(); ++i) os << " " << id(k, i) << " [label=" << quoted(layers[k][i]) << "];";
    os << " }\n";
  }
  for (std::size_t k = 0; k + 1 < layers.size(); ++k)
    for (std::size_t i = 0; i < layers[k].size(); ++i)
      for (std::size_t j = 0; j < layers[k + 1].size(); ++j) os << "  " << id(k, i) << " -> " << id(k + 1, j) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace blockcalc
