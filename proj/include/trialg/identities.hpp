#pragma once

#include <array>
#include <optional>
#include <vector>

#include "trialg/msc.hpp"

namespace trialg {

/// Residuals of the associativity identities together with the verdict.
struct AssocReport {
  std::size_t arity;
  /// Three residuals (a, b, c) for arity 3, one for arity 2.
  std::vector<Matrix> residuals;
  bool verdict;
  /// First violating basis tuple, zero-based; only filled by the enumerative
  /// oracles (field rings).
  std::optional<std::vector<std::size_t>> violating_tuple;
};

/// R_a = A(A⊗I⊗I - I⊗A⊗I), R_b = A(A⊗I⊗I - I⊗I⊗A), R_c = A(I⊗A⊗I - I⊗I⊗A).
std::array<Matrix, 3> total_assoc_residuals(const Msc& a);

bool is_totally_associative(const Msc& a);

struct OracleResult {
  bool holds;
  std::optional<std::vector<std::size_t>> violation;
};

/// Compares (uvw)xy, u(vwx)y and uv(wxy) on every basis 5-tuple using only
/// eval_product. Field rings only.
OracleResult quintuple_oracle(const Msc& a);

/// M(M⊗I) - M(I⊗M); zero iff the binary algebra is associative.
Matrix binary_assoc_residual(const Msc& m);

/// Compares (xy)z and x(yz) on every basis triple. Field rings only.
OracleResult triple_oracle(const Msc& m);

/// Residuals plus verdict; arity 2 or 3. Fills the violating tuple when the
/// ring is a field.
AssocReport assoc_report(const Msc& a);

Json assoc_report_to_json(const AssocReport& report);

}  // namespace trialg
