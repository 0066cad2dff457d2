#pragma once

#include <random>
#include <string>
#include <vector>

#include "trialg/msc.hpp"
#include "trialg/poly_system.hpp"

namespace test {

using namespace trialg;

inline Msc msc(const std::vector<std::vector<std::string>>& rows, const Ring& ring = Ring::rationals()) {
  Matrix m = Matrix::from_strings(ring, rows);
  std::size_t arity = 0;
  for (std::size_t c = 1; c < m.cols(); c *= m.rows()) ++arity;
  return Msc(m.rows(), arity, std::move(m));
}

inline Msc random_msc(const Ring& gf, std::size_t dim, std::size_t arity, std::mt19937& rng) {
  std::size_t cols = 1;
  for (std::size_t i = 0; i < arity; ++i) cols *= dim;
  Matrix m(gf, dim, cols);
  std::uniform_int_distribution<long> d(0, static_cast<long>(gf.prime()) - 1);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = RingElem::from_int(gf, d(rng));
  return Msc(dim, arity, std::move(m));
}

inline Matrix random_matrix(const Ring& gf, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  Matrix m(gf, rows, cols);
  std::uniform_int_distribution<long> d(0, static_cast<long>(gf.prime()) - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = RingElem::from_int(gf, d(rng));
  return m;
}

inline BasisChange random_gl(const Ring& gf, std::size_t dim, std::mt19937& rng) {
  while (true) {
    Matrix g = random_matrix(gf, dim, dim, rng);
    try {
      return BasisChange(std::move(g));
    } catch (const std::exception&) {
    }
  }
}

inline Vector random_vector(const Ring& gf, std::size_t dim, std::mt19937& rng) {
  Vector v;
  std::uniform_int_distribution<long> d(0, static_cast<long>(gf.prime()) - 1);
  for (std::size_t i = 0; i < dim; ++i) v.push_back(RingElem::from_int(gf, d(rng)));
  return v;
}

/// Every matrix of GL(2, GF(p)).
inline std::vector<BasisChange> all_gl2(const Ring& gf) {
  std::vector<BasisChange> out;
  long p = static_cast<long>(gf.prime());
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p == 0) continue;
          Matrix g(gf, 2, 2);
          g.at(0, 0) = RingElem::from_int(gf, a);
          g.at(0, 1) = RingElem::from_int(gf, b);
          g.at(1, 0) = RingElem::from_int(gf, c);
          g.at(1, 1) = RingElem::from_int(gf, d);
          out.emplace_back(std::move(g));
        }
  return out;
}

inline PolySystem system(const std::vector<std::string>& vars, const std::vector<std::string>& polys) {
  Ring ring = Ring::polynomial(vars);
  std::vector<Poly> ps;
  for (const auto& p : polys) ps.push_back(parse_scalar(p, ring).poly());
  return PolySystem(ring, std::move(ps));
}

inline Vector column(const Msc& a, std::size_t c) {
  Vector v;
  for (std::size_t r = 0; r < a.dim(); ++r) v.push_back(a.entries().at(r, c));
  return v;
}

}  // namespace test
