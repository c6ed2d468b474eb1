#pragma once

#include <string>

#include <json.hpp>

#include "blockcalc/affine_labels.hpp"
#include "blockcalc/crosscheck.hpp"
#include "blockcalc/cyclotomic.hpp"
#include "blockcalc/module.hpp"
#include "blockcalc/report.hpp"

namespace blockcalc {

using json = nlohmann::json;

// Numbers are exact: numerators and denominators travel as decimal strings.
json to_json(const Rat& x);
json to_json(const CycNum& x);
json to_json(const Mat<Rat>& m);
json to_json(const Mat<CycNum>& m);
json to_json(const Mismatch& m);
json to_json(const Report& r);
json to_json(const affine::SimpleLabel& x);
json to_json(const affine::BlockId& b);
json to_json(const cross::ExtTable& t);
json to_json(const Layers& l);

template <class S>
json to_json(const ExtSpace<S>& e) {
  json j;
  j["dim"] = e.dim;
  j["cocycles"] = json::array();
  for (const auto& c : e.cocycles) {
    json jc = json::object();
    for (const auto& [g, m] : c) jc[g] = to_json(m);
    j["cocycles"].push_back(jc);
  }
  return j;
}

Rat rat_from_json(const json& j);
CycNum cyc_from_json(const json& j);

// Loewy diagram as a DOT digraph: one node per composition factor, ranked by
// layer, with edges from every factor of a layer to every factor of the next.
std::string loewy_dot(const std::string& title, const Layers& layers);

}  // namespace blockcalc
