#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trialg/msc.hpp"
#include "trialg/poly_system.hpp"

namespace trialg {

enum class SolveStatus { witness, no_solution_mod_p, certified_empty_over_closure, inconclusive };

std::string to_string(SolveStatus status);

struct SolveEffort {
  /// Size of the assignment space covered by a finite-field sweep.
  std::uint64_t assignments = 0;
  /// Partial assignments visited by the pruned depth-first sweep.
  std::uint64_t nodes = 0;
  std::uint64_t pairs = 0;
  std::uint32_t max_degree = 0;
  std::size_t basis_size = 0;
  bool caps_hit = false;
};

struct SolveOutcome {
  std::string method;
  SolveStatus status = SolveStatus::inconclusive;
  std::vector<std::string> vars;
  /// One value per variable: GF(p) residues for finite-field witnesses,
  /// rationals for exact witnesses. Always zeroes every input polynomial.
  std::optional<std::vector<RingElem>> witness;
  /// Every witness of a finite-field sweep in enumeration order, when
  /// requested.
  std::vector<std::vector<RingElem>> all_witnesses;
  std::optional<std::uint64_t> prime;
  bool exhaustive = false;
  /// Reduced Groebner basis, monic, ascending by leading monomial.
  std::optional<std::vector<Poly>> basis;
  /// cofactors[i][j]: basis[i] = sum_j cofactors[i][j] * input[j]. Only
  /// when tracking was requested.
  std::optional<std::vector<std::vector<Poly>>> cofactors;
  SolveEffort effort;
  std::vector<std::string> notes;
  std::vector<SolveOutcome> evidence;
};

struct FfOptions {
  /// Keep sweeping after the first witness and return all of them.
  bool all = false;
  /// Cap on stored witnesses in `all` mode; the sweep stays exhaustive.
  std::size_t max_stored = 4096;
  unsigned jobs = 0;
};

constexpr std::size_t kMaxExhaustiveVars = 9;

/// Enumerates GF(p)^n in lexicographic order (first variable most
/// significant). The sweep is depth-first and abandons a prefix as soon as
/// a polynomial in the already assigned variables is nonzero, which covers
/// the whole space without visiting every leaf.
SolveOutcome solve_ff_exhaustive(const PolySystem& sys, std::uint64_t p, const FfOptions& options = {});

struct GroebnerCaps {
  std::uint64_t max_pairs = 20000;
  std::uint32_t max_degree = 12;
};

struct GroebnerOptions {
  GroebnerCaps caps;
  bool track_cofactors = false;
};

/// Buchberger's algorithm in grevlex with the sugar strategy, the product
/// and chain criteria, fraction-free reductions and content removal.
SolveOutcome buchberger(const PolySystem& sys, const GroebnerOptions& options = {});

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool s_pairs_reduce_to_zero(std::span<const Poly> basis);

struct LiftOptions {
  std::uint64_t max_denominator = 64;
};

/// Tries to turn a GF(p) zero of `sys` into an exact rational zero: first
/// the balanced residues themselves, then p-adic Newton lifting on a
/// nonsingular square subsystem (non-pivot coordinates frozen at their
/// balanced residues) followed by rational reconstruction. Candidates are
/// always verified exactly.
std::optional<std::vector<mpq_class>> lift_witness(const PolySystem& sys, const std::vector<std::uint64_t>& residues,
                                                   std::uint64_t p, const LiftOptions& options = {});

/// Rational n/d with |n| <= max_num, 0 < d <= max_den and n = u d mod q.
std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& q, const mpz_class& max_num,
                                              const mpz_class& max_den);

struct ExpressOptions {
  std::vector<std::uint64_t> primes{5, 7};
  bool groebner = true;
  GroebnerCaps caps;
  LiftOptions lift;
  std::size_t max_lift_attempts = 256;
  unsigned jobs = 0;
};

/// Decides whether the 2-dimensional ternary algebra is generated by some
/// binary algebra: finite-field sweeps with rational lifting, then a
/// Groebner run. Reports the strongest outcome with the sub-results as
/// evidence.
SolveOutcome certify_expressibility(const Msc& ternary, const ExpressOptions& options = {});

Json solve_outcome_to_json(const SolveOutcome& outcome);

}  // namespace trialg
