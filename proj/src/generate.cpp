#include "trialg/generate.hpp"

#include "trialg/error.hpp"

namespace trialg {

Msc generate_nary(const Msc& binary, std::size_t n) {
  if (binary.arity() != 2) throw Error("generation needs a binary algebra, got arity " + std::to_string(binary.arity()));
  if (n < 2) throw Error("generated arity must be at least 2, got " + std::to_string(n));
  const Matrix& m = binary.entries();
  Matrix id = Matrix::identity(binary.ring(), binary.dim());
  Matrix current = m;
  for (std::size_t k = 3; k <= n; ++k) current = m * kron(id, current);
  return Msc(binary.dim(), n, std::move(current));
}

Matrix expressibility_residual(const Msc& binary, const Msc& ternary) {
  if (ternary.arity() != 3) throw Error("expressibility residual needs a ternary algebra");
  if (binary.dim() != ternary.dim()) throw Error("binary and ternary algebras differ in dimension");
  if (!(binary.ring() == ternary.ring()))
    throw Error("ring mismatch: " + binary.ring().describe() + " vs " + ternary.ring().describe());
  return generate_nary(binary, 3).entries() - ternary.entries();
}

std::vector<std::string> expressibility_vars() {
  std::vector<std::string> vars;
  for (int k = 1; k <= 2; ++k)
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s) vars.push_back("h" + std::to_string(k) + std::to_string(r) + std::to_string(s));
  return vars;
}

Msc binary_from_unknowns(const std::vector<RingElem>& values) {
  if (values.size() != 8) throw Error("a 2-dimensional binary algebra has 8 structure constants");
  Matrix m(values.front().ring(), 2, 4);
  // values[4k + 2r + s] is the e_k coordinate of e_r e_s (zero-based).
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t rs = 0; rs < 4; ++rs) m.at(k, rs) = values[4 * k + rs];
  return Msc(2, 2, std::move(m));
}

PolySystem symbolic_system(const Msc& ternary) {
  if (ternary.dim() != 2) throw Error("symbolic expressibility systems are only built for dimension 2");
  if (ternary.arity() != 3) throw Error("symbolic expressibility system needs a ternary algebra");
  if (ternary.ring().kind() != RingKind::rationals) throw Error("symbolic expressibility system needs rational entries");
  Ring ring = Ring::polynomial(expressibility_vars());
  std::vector<RingElem> unknowns;
  for (const auto& v : ring.vars()) unknowns.push_back(RingElem::variable(ring, v));
  Msc binary = binary_from_unknowns(unknowns);
  Matrix residual = expressibility_residual(binary, embed_constants(ternary, ring));
  std::vector<Poly> polys;
  for (std::size_t r = 0; r < residual.rows(); ++r)
    for (std::size_t c = 0; c < residual.cols(); ++c) polys.push_back(residual.at(r, c).poly());
  return PolySystem(ring, std::move(polys));
}

}  // namespace trialg
