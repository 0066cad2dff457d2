#include "trialg/error.hpp"
#include "trialg/generate.hpp"
#include "trialg/polysolve.hpp"

namespace trialg {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::witness:
      return "witness";
    case SolveStatus::no_solution_mod_p:
      return "no_solution_mod_p";
    case SolveStatus::certified_empty_over_closure:
      return "certified_empty_over_closure";
    case SolveStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

SolveOutcome certify_expressibility(const Msc& ternary, const ExpressOptions& options) {
  if (ternary.dim() != 2) throw Error("expressibility certification supports dimension 2 only");
  PolySystem sys = symbolic_system(ternary);

  SolveOutcome out;
  out.method = "certify_expressibility";
  out.vars = sys.vars();

  std::optional<std::vector<mpq_class>> rational_witness;
  bool all_empty = !options.primes.empty();
  for (std::uint64_t p : options.primes) {
    FfOptions ff;
    ff.all = true;
    ff.jobs = options.jobs;
    SolveOutcome sweep = solve_ff_exhaustive(sys, p, ff);
    if (sweep.status != SolveStatus::no_solution_mod_p) all_empty = false;
    if (!rational_witness) {
      std::size_t attempts = 0;
      for (const auto& w : sweep.all_witnesses) {
        if (attempts++ >= options.max_lift_attempts) break;
        std::vector<std::uint64_t> residues;
        for (const auto& e : w) residues.push_back(e.residue());
        rational_witness = lift_witness(sys, residues, p, options.lift);
        if (rational_witness) {
          sweep.notes.push_back("witness #" + std::to_string(attempts) + " lifted to an exact rational zero");
          break;
        }
      }
      if (!sweep.all_witnesses.empty() && !rational_witness)
        sweep.notes.push_back("no rational lift found within " + std::to_string(options.max_lift_attempts) +
                              " attempts (denominator bound " + std::to_string(options.lift.max_denominator) + ")");
    }
    // Keep reports compact: the full witness list is only needed for lifting.
    sweep.all_witnesses.clear();
    out.evidence.push_back(std::move(sweep));
  }

  std::optional<SolveOutcome> gb;
  if (options.groebner && !rational_witness) {
    GroebnerOptions go;
    go.caps = options.caps;
    gb = buchberger(sys, go);
    out.evidence.push_back(*gb);
  }

  out.notes.push_back("rational lift denominator bound " + std::to_string(options.lift.max_denominator));
  if (rational_witness) {
    out.status = SolveStatus::witness;
    std::vector<RingElem> w;
    for (const auto& v : *rational_witness) w.push_back(RingElem::from_rational(Ring::rationals(), v));
    out.witness = std::move(w);
    out.exhaustive = true;
  } else if (gb && gb->status == SolveStatus::certified_empty_over_closure) {
    out.status = SolveStatus::certified_empty_over_closure;
    out.basis = gb->basis;
    out.exhaustive = true;
  } else if (gb && gb->status == SolveStatus::witness) {
    out.status = SolveStatus::witness;
    out.witness = gb->witness;
    out.exhaustive = true;
  } else if (all_empty) {
    out.status = SolveStatus::no_solution_mod_p;
    out.exhaustive = true;
    std::string primes;
    for (auto p : options.primes) primes += (primes.empty() ? "" : ", ") + std::to_string(p);
    out.notes.push_back("no solution over GF(p) for p in {" + primes + "}");
  } else {
    out.status = SolveStatus::inconclusive;
  }
  return out;
}

Json solve_outcome_to_json(const SolveOutcome& outcome) {
  auto witness_json = [&](const std::vector<RingElem>& w) {
    Json doc;
    for (std::size_t i = 0; i < w.size(); ++i) doc[outcome.vars.at(i)] = w[i].to_string();
    return doc;
  };
  Json doc;
  doc["method"] = outcome.method;
  doc["status"] = to_string(outcome.status);
  doc["vars"] = outcome.vars;
  doc["prime"] = outcome.prime ? Json(*outcome.prime) : Json(nullptr);
  doc["exhaustive"] = outcome.exhaustive;
  doc["witness"] = outcome.witness ? witness_json(*outcome.witness) : Json(nullptr);
  if (!outcome.all_witnesses.empty()) {
    Json all = Json::array();
    for (const auto& w : outcome.all_witnesses) all.push_back(witness_json(w));
    doc["all_witnesses"] = all;
  }
  if (outcome.basis) {
    Json basis = Json::array();
    for (const auto& p : *outcome.basis) basis.push_back(p.to_string(outcome.vars));
    doc["basis"] = basis;
  } else {
    doc["basis"] = nullptr;
  }
  Json effort;
  effort["assignments"] = outcome.effort.assignments;
  effort["nodes"] = outcome.effort.nodes;
  effort["pairs"] = outcome.effort.pairs;
  effort["max_degree"] = outcome.effort.max_degree;
  effort["basis_size"] = outcome.effort.basis_size;
  effort["caps_hit"] = outcome.effort.caps_hit;
  doc["effort"] = effort;
  doc["notes"] = outcome.notes;
  Json evidence = Json::array();
  for (const auto& e : outcome.evidence) evidence.push_back(solve_outcome_to_json(e));
  doc["evidence"] = evidence;
  return doc;
}

}  // namespace trialg
