#include "trialg/iso.hpp"

#include <optional>

#include "trialg/error.hpp"
#include "trialg/parallel.hpp"

namespace trialg {

namespace {

void check_compatible(const Msc& a, const Msc& b) {
  if (a.dim() != b.dim() || a.arity() != b.arity())
    throw Error("algebras differ in shape: dim " + std::to_string(a.dim()) + "/" + std::to_string(b.dim()) +
                ", arity " + std::to_string(a.arity()) + "/" + std::to_string(b.arity()));
}

Msc to_field(const Msc& a, const Ring& field, const char* which) {
  if (a.ring() == field) return a;
  try {
    return reduce_mod(a, field);
  } catch (const Error& e) {
    throw Error(std::string("cannot reduce ") + which + " modulo " + std::to_string(field.prime()) + ": " + e.what());
  }
}

constexpr std::uint64_t kMaxCandidates = 200'000'000;

}  // namespace

bool iso_verify(const Msc& a, const Msc& b, const BasisChange& g) {
  check_compatible(a, b);
  if (!(a.ring() == b.ring())) throw Error("ring mismatch: " + a.ring().describe() + " vs " + b.ring().describe());
  return transform(a, g) == b;
}

IsoSearchResult iso_search(const Msc& a, const Msc& b, std::uint64_t p, IsoSearchOptions options) {
  check_compatible(a, b);
  Ring field = Ring::prime_field(p);
  IsoSearchResult result;
  result.prime = p;
  if (p == 2 || p == 3)
    result.warnings.push_back("characteristic " + std::to_string(p) +
                              " is outside the classification's scope; results are still exhaustive");
  Msc source = to_field(a, field, "first algebra");
  Msc target = to_field(b, field, "second algebra");

  std::size_t m = a.dim();
  std::size_t cells = m * m;
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    space *= p;
    if (space > kMaxCandidates) throw Error("search space p^(m^2) is too large");
  }
  if (m > 2)
    result.warnings.push_back("dimension " + std::to_string(m) + " search enumerates " + std::to_string(space) +
                              " candidates");
  result.candidates = space;

  unsigned jobs = resolve_jobs(options.jobs);
  std::size_t blocks = std::max<std::size_t>(1, std::min<std::uint64_t>(space, jobs * 16ull));
  std::uint64_t per_block = (space + blocks - 1) / blocks;
  std::vector<std::vector<std::uint64_t>> found(blocks);

  parallel_for(blocks, jobs, [&](std::size_t blk) {
    std::uint64_t begin = blk * per_block;
    std::uint64_t end = std::min<std::uint64_t>(space, begin + per_block);
    for (std::uint64_t code = begin; code < end; ++code) {
      Matrix g(field, m, m);
      std::uint64_t rest = code;
      for (std::size_t cell = cells; cell-- > 0;) {
        g.at(cell / m, cell % m) = RingElem::from_int(field, static_cast<long>(rest % p));
        rest /= p;
      }
      std::optional<BasisChange> change;
      try {
        change.emplace(std::move(g));
      } catch (const Error&) {
        continue;  // singular
      }
      if (transform(source, *change) == target) {
        found[blk].push_back(code);
        if (!options.all) return;
      }
    }
  });

  for (const auto& block : found) {
    for (std::uint64_t code : block) {
      Matrix g(field, m, m);
      std::uint64_t rest = code;
      for (std::size_t cell = cells; cell-- > 0;) {
        g.at(cell / m, cell % m) = RingElem::from_int(field, static_cast<long>(rest % p));
        rest /= p;
      }
      result.witnesses.push_back({BasisChange(std::move(g)), source, target});
      if (!options.all) break;
    }
    if (!options.all && !result.witnesses.empty()) {
      result.exhaustive = false;
      break;
    }
  }
  return result;
}

Json iso_result_to_json(const IsoSearchResult& result) {
  Json doc;
  doc["prime"] = result.prime;
  doc["witness_count"] = result.witnesses.size();
  Json ws = Json::array();
  for (const auto& w : result.witnesses) ws.push_back(matrix_to_json(w.g.matrix()));
  doc["witnesses"] = ws;
  doc["exhaustive"] = result.exhaustive;
  return doc;
}

}  // namespace trialg
