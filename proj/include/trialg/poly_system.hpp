#pragma once

#include <span>
#include <string>
#include <vector>

#include "trialg/msc.hpp"
#include "trialg/poly.hpp"
#include "trialg/ring.hpp"

namespace trialg {

/// Finite list of polynomials over Q[vars] whose common zeros are sought.
/// Zero polynomials are dropped on construction.
class PolySystem {
 public:
  PolySystem(Ring ring, std::vector<Poly> polys);
  PolySystem(std::vector<std::string> vars, std::vector<Poly> polys);

  const Ring& ring() const { return ring_; }
  const std::vector<std::string>& vars() const { return ring_.vars(); }
  const std::vector<Poly>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  /// Exact check that every polynomial vanishes at `point`.
  bool vanishes_at(std::span<const mpq_class> point) const;

  Json to_json() const;
  static PolySystem from_json(const Json& doc);

 private:
  Ring ring_;
  std::vector<Poly> polys_;
};

}  // namespace trialg
