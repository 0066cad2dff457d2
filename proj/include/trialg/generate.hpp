#pragma once

#include <string>
#include <vector>

#include "trialg/msc.hpp"
#include "trialg/poly_system.hpp"

namespace trialg {

/// A binary algebra together with the n-algebra it generates.
struct GenerationWitness {
  Msc binary;
  Msc generated;
};

/// MSC of f(x1, ..., xn) = mu(x1, mu(x2, ..., mu(x_{n-1}, xn))) for the
/// binary product mu given by `binary`. Uses C_2 = M, C_k = M (I ⊗ C_{k-1}).
/// Works over any ring, including polynomial rings.
Msc generate_nary(const Msc& binary, std::size_t n);

/// generate_nary(binary, 3) - ternary; zero iff `binary` generates `ternary`.
Matrix expressibility_residual(const Msc& binary, const Msc& ternary);

/// Unknown names h<k><r><s> for the binary structure constants
/// mu(e_r, e_s) = sum_k h<k><r><s> e_k, ordered by k, r, s.
std::vector<std::string> expressibility_vars();

/// The 16 quadratics in the 8 unknowns whose common zeros are the binary
/// algebras generating the 2-dimensional ternary algebra `ternary`.
/// Polynomials are listed row-major over the residual matrix.
PolySystem symbolic_system(const Msc& ternary);

/// Binary MSC over `ring` from values listed in expressibility_vars() order.
Msc binary_from_unknowns(const std::vector<RingElem>& values);

}  // namespace trialg
