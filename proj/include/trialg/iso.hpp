#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trialg/msc.hpp"

namespace trialg {

/// transform(source, g) == target, exactly.
struct IsoWitness {
  BasisChange g;
  Msc source;
  Msc target;
};

/// True iff transform(a, g) equals b entrywise.
bool iso_verify(const Msc& a, const Msc& b, const BasisChange& g);

struct IsoSearchOptions {
  /// Collect every witness; otherwise stop at the first in enumeration order.
  bool all = true;
  unsigned jobs = 0;
};

struct IsoSearchResult {
  std::uint64_t prime = 0;
  std::vector<IsoWitness> witnesses;
  /// The whole of GL(m, p) was swept. False only when stopping early.
  bool exhaustive = true;
  std::uint64_t candidates = 0;
  std::vector<std::string> warnings;
};

/// Reduces both algebras mod p and enumerates GL(m, GF(p)) with g's
/// entries in row-major lexicographic order over residues 0..p-1. An empty
/// result means no isomorphism over GF(p); it says nothing definite about
/// other fields.
IsoSearchResult iso_search(const Msc& a, const Msc& b, std::uint64_t p, IsoSearchOptions options = {});

Json iso_result_to_json(const IsoSearchResult& result);

}  // namespace trialg
