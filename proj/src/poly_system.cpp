#include "trialg/poly_system.hpp"

#include <algorithm>

#include "trialg/error.hpp"

namespace trialg {

PolySystem::PolySystem(Ring ring, std::vector<Poly> polys) : ring_(std::move(ring)) {
  if (ring_.kind() != RingKind::polynomial) throw Error("polynomial system needs a polynomial ring");
  for (auto& p : polys) {
    if (p.nvars() != ring_.nvars()) throw Error("polynomial does not match the declared variables");
    if (!p.is_zero()) polys_.push_back(std::move(p));
  }
}

PolySystem::PolySystem(std::vector<std::string> vars, std::vector<Poly> polys)
    : PolySystem(Ring::polynomial(std::move(vars)), std::move(polys)) {}

bool PolySystem::vanishes_at(std::span<const mpq_class> point) const {
  return std::all_of(polys_.begin(), polys_.end(), [&](const Poly& p) { return p.evaluate(point) == 0; });
}

Json PolySystem::to_json() const {
  Json doc;
  doc["vars"] = vars();
  Json polys = Json::array();
  for (const auto& p : polys_) polys.push_back(p.to_string(vars()));
  doc["polys"] = polys;
  return doc;
}

PolySystem PolySystem::from_json(const Json& doc) {
  if (!doc.is_object()) throw Error("system: expected an object");
  if (!doc.contains("vars") || !doc["vars"].is_array()) throw Error("vars: expected an array of strings");
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) throw Error("vars: expected an array of strings");
    vars.push_back(v.get<std::string>());
  }
  Ring ring = Ring::polynomial(std::move(vars));
  if (!doc.contains("polys") || !doc["polys"].is_array()) throw Error("polys: expected an array of strings");
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < doc["polys"].size(); ++i) {
    const auto& p = doc["polys"][i];
    if (!p.is_string()) throw Error("polys[" + std::to_string(i) + "]: expected a string");
    polys.push_back(parse_scalar(p.get<std::string>(), ring).poly());
  }
  return PolySystem(ring, std::move(polys));
}

}  // namespace trialg
