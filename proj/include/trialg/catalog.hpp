#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trialg/msc.hpp"

namespace trialg {

/// A named, possibly parametric, 2-dimensional algebra. Parametric
/// templates live over Q[params]; constant ones over Q.
struct FamilyEntry {
  std::string name;
  std::vector<std::string> params;
  Msc msc_template;
  std::string provenance;
};

/// All embedded entries: A1..A12, B1..B11, Cstar, Cdagger, Ex52.
const std::vector<FamilyEntry>& families();
const FamilyEntry& family(std::string_view name);

/// Symbolic template, or the rational specialization when an assignment
/// is given (it must cover every parameter).
Msc catalog_get(std::string_view name, const std::optional<Assignment>& assignment = std::nullopt);

/// Parses "a1=1,b2=-1/2" into an assignment.
Assignment parse_params(std::string_view text);

enum class ClaimKind {
  table_row,
  inexpressible,
  collision,
  non_iso,
  alternate_form,
  tot_assoc_scan,
  tot_assoc_list,
  assoc_binary_list,
  nonassoc_generators,
};

std::string to_string(ClaimKind kind);

/// One checkable statement. The payload references catalog entries by name
/// and parameters and embeds printed matrices as msc documents.
struct ClaimRecord {
  std::string id;
  ClaimKind kind;
  std::string statement;
  Json payload;
};

const std::vector<ClaimRecord>& claim_records();

enum class ClaimStatus { pass, fail, inconclusive };

std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  ClaimKind kind;
  ClaimStatus status;
  /// A failing table row whose every mismatch is a known erratum.
  bool expected_mismatch = false;
  Json evidence;
};

struct Report {
  std::vector<ClaimResult> claims;

  /// Every claim passes or is an expected mismatch.
  bool ok() const;
  Json to_json() const;
};

/// One differing entry between a generated ternary algebra and its printed
/// table row; indices are 1-based.
struct TableMismatch {
  std::string row;
  std::size_t l;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  std::string printed;
  std::string computed;
  bool documented;
};

/// Entrywise comparison of generate_nary(Ai, 3) with the printed Bi for
/// i = 1..11, and of generate_nary(A12, 3) with zero.
std::vector<TableMismatch> table1_mismatches();
Report table1_verify();

/// Grid of rationals tried for every parameter by default.
std::vector<mpq_class> default_scan_grid();

/// Grid points (lexicographic, first parameter most significant) whose
/// specialization of `family_name` is totally associative.
std::vector<Assignment> totassoc_scan(std::string_view family_name, const std::vector<std::vector<mpq_class>>& grid);
/// Same grid for every parameter.
std::vector<Assignment> totassoc_scan(std::string_view family_name, const std::vector<mpq_class>& grid);

/// Scans B2 and B4 over the default grid and compares against the
/// published parameter lists.
Report totassoc_scan_verify(unsigned jobs = 0);

/// Replays every claim record except table rows and scans.
Report claims_verify(unsigned jobs = 0);

/// table1_verify + totassoc_scan_verify + claims_verify, in that order.
Report paper_replay(unsigned jobs = 0);

/// Every family as an msc document keyed by name, plus the claim records.
Json catalog_bundle();

Json assignment_to_json(const Assignment& a);

}  // namespace trialg
