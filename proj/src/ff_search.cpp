#include <atomic>
#include <limits>

#include "trialg/error.hpp"
#include "trialg/parallel.hpp"
#include "trialg/polysolve.hpp"

namespace trialg {

namespace {

struct CompiledTerm {
  std::uint64_t coeff;
  std::vector<std::pair<std::size_t, std::uint32_t>> factors;
};

struct CompiledPoly {
  std::vector<CompiledTerm> terms;
};

class ModularSystem {
 public:
  ModularSystem(const PolySystem& sys, std::uint64_t p) : p_(p), nvars_(sys.vars().size()), buckets_(nvars_ + 1) {
    Ring field = Ring::prime_field(p);
    for (const auto& poly : sys.polys()) {
      CompiledPoly cp;
      std::size_t depth = 0;
      for (const auto& t : poly.terms()) {
        CompiledTerm ct{RingElem::from_rational(field, t.coeff).residue(), {}};
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (t.monomial[i] == 0) continue;
          ct.factors.emplace_back(i, t.monomial[i]);
          depth = std::max(depth, i + 1);
        }
        if (ct.coeff != 0) cp.terms.push_back(std::move(ct));
      }
      // Polynomials that vanish identically mod p impose nothing.
      if (!cp.terms.empty()) buckets_[depth].push_back(std::move(cp));
    }
  }

  std::size_t nvars() const { return nvars_; }

  bool bucket_vanishes(std::size_t depth, const std::vector<std::uint64_t>& values) const {
    for (const auto& poly : buckets_[depth]) {
      std::uint64_t sum = 0;
      for (const auto& t : poly.terms) {
        std::uint64_t v = t.coeff;
        for (const auto& [var, e] : t.factors)
          for (std::uint32_t k = 0; k < e; ++k) v = v * values[var] % p_;
        sum = (sum + v) % p_;
      }
      if (sum != 0) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
  std::size_t nvars_;
  std::vector<std::vector<CompiledPoly>> buckets_;
};

struct TaskResult {
  std::vector<std::vector<std::uint64_t>> witnesses;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

class Sweep {
 public:
  Sweep(const ModularSystem& sys, std::uint64_t p, const FfOptions& options, std::atomic<std::size_t>& first_hit,
        std::size_t task)
      : sys_(sys), p_(p), options_(options), first_hit_(first_hit), task_(task), values_(sys.nvars(), 0) {}

  TaskResult run() {
    values_[0] = task_;
    descend(1);
    return std::move(result_);
  }

 private:
  bool should_stop() const { return !options_.all && first_hit_.load(std::memory_order_relaxed) <= task_; }

  void descend(std::size_t depth) {
    ++result_.nodes;
    if (!sys_.bucket_vanishes(depth, values_)) return;
    if (depth == sys_.nvars()) {
      if (result_.witnesses.size() < options_.max_stored) {
        result_.witnesses.push_back(values_);
      } else {
        result_.truncated = true;
      }
      if (!options_.all) {
        std::size_t prev = first_hit_.load();
        while (task_ < prev && !first_hit_.compare_exchange_weak(prev, task_)) {
        }
      }
      return;
    }
    for (std::uint64_t v = 0; v < p_; ++v) {
      values_[depth] = v;
      descend(depth + 1);
      if (should_stop()) return;
    }
  }

  const ModularSystem& sys_;
  std::uint64_t p_;
  const FfOptions& options_;
  std::atomic<std::size_t>& first_hit_;
  std::size_t task_;
  std::vector<std::uint64_t> values_;
  TaskResult result_;
};

std::uint64_t space_size(std::uint64_t p, std::size_t n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    s *= p;
  }
  return s;
}

bool verify_residues(const PolySystem& sys, const std::vector<std::uint64_t>& residues, std::uint64_t p) {
  std::vector<mpz_class> point;
  for (auto r : residues) point.emplace_back(static_cast<unsigned long>(r));
  mpz_class modulus(static_cast<unsigned long>(p));
  for (const auto& poly : sys.polys())
    if (poly.evaluate_mod(point, modulus) != 0) return false;
  return true;
}

}  // namespace

SolveOutcome solve_ff_exhaustive(const PolySystem& sys, std::uint64_t p, const FfOptions& options) {
  std::size_t n = sys.vars().size();
  if (n > kMaxExhaustiveVars)
    throw Error("exhaustive search supports at most " + std::to_string(kMaxExhaustiveVars) + " variables, got " +
                std::to_string(n));
  Ring field = Ring::prime_field(p);
  ModularSystem modular(sys, p);

  SolveOutcome out;
  out.method = "ff_exhaustive";
  out.vars = sys.vars();
  out.prime = p;
  out.effort.assignments = space_size(p, n);

  std::vector<TaskResult> tasks(p);
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
  std::vector<std::uint64_t> empty_point(n, 0);
  if (modular.bucket_vanishes(0, empty_point)) {
    parallel_for(p, resolve_jobs(options.jobs), [&](std::size_t t) {
      if (!options.all && first_hit.load() < t) return;
      tasks[t] = Sweep(modular, p, options, first_hit, t).run();
    });
  }

  bool stopped_early = false;
  bool truncated = false;
  std::vector<std::vector<std::uint64_t>> found;
  out.effort.nodes = 1;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    out.effort.nodes += tasks[t].nodes;
    truncated = truncated || tasks[t].truncated;
    for (auto& w : tasks[t].witnesses) {
      if (found.size() < options.max_stored) found.push_back(std::move(w));
    }
    if (!options.all && !found.empty()) {
      found.resize(1);
      stopped_early = true;
      break;
    }
  }

  for (const auto& w : found) {
    if (!verify_residues(sys, w, p)) throw Error("internal error: finite-field witness fails verification");
  }

  auto to_elems = [&](const std::vector<std::uint64_t>& w) {
    std::vector<RingElem> v;
    for (auto r : w) v.push_back(RingElem::from_int(field, static_cast<long>(r)));
    return v;
  };
  out.exhaustive = !stopped_early;
  if (found.empty()) {
    out.status = SolveStatus::no_solution_mod_p;
    out.notes.push_back("no common zero in GF(" + std::to_string(p) + ")^" + std::to_string(n));
  } else {
    out.status = SolveStatus::witness;
    out.witness = to_elems(found.front());
    if (options.all)
      for (const auto& w : found) out.all_witnesses.push_back(to_elems(w));
    if (truncated) out.notes.push_back("witness list truncated at " + std::to_string(options.max_stored));
  }
  return out;
}

}  // namespace trialg
