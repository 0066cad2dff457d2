#include "trialg/error.hpp"
#include "trialg/polysolve.hpp"

namespace trialg {

namespace {

// Target modulus for p-adic lifting; far beyond what 64-bounded
// denominators with moderate numerators need.
const mpz_class kLiftTarget = mpz_class(1) << 96;

struct PivotChoice {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Gaussian elimination mod p with full pivoting; returns the rows and
// columns of a nonsingular maximal minor.
PivotChoice choose_pivots(std::vector<std::vector<std::uint64_t>> j, std::uint64_t p) {
  PivotChoice choice;
  std::size_t nrows = j.size();
  std::size_t ncols = nrows ? j[0].size() : 0;
  std::vector<std::size_t> row_ids(nrows), col_ids(ncols);
  for (std::size_t i = 0; i < nrows; ++i) row_ids[i] = i;
  for (std::size_t i = 0; i < ncols; ++i) col_ids[i] = i;
  Ring field = Ring::prime_field(p);
  for (std::size_t step = 0; step < std::min(nrows, ncols); ++step) {
    std::size_t pr = nrows, pc = ncols;
    for (std::size_t r = step; r < nrows && pr == nrows; ++r)
      for (std::size_t c = step; c < ncols; ++c)
        if (j[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == nrows) break;
    std::swap(j[step], j[pr]);
    std::swap(row_ids[step], row_ids[pr]);
    for (auto& row : j) std::swap(row[step], row[pc]);
    std::swap(col_ids[step], col_ids[pc]);
    std::uint64_t inv = RingElem::from_int(field, static_cast<long>(j[step][step])).inv().residue();
    for (std::size_t r = step + 1; r < nrows; ++r) {
      if (j[r][step] == 0) continue;
      std::uint64_t f = j[r][step] * inv % p;
      for (std::size_t c = step; c < ncols; ++c) j[r][c] = (j[r][c] + (p - f) * j[step][c] % p) % p;
    }
    choice.rows.push_back(row_ids[step]);
    choice.cols.push_back(col_ids[step]);
  }
  return choice;
}

mpz_class balanced(std::uint64_t r, std::uint64_t p) {
  mpz_class v(static_cast<unsigned long>(r));
  if (2 * r > p) v -= static_cast<unsigned long>(p);
  return v;
}

mpz_class eval_integer(const Poly& f, const std::vector<mpz_class>& x) {
  mpz_class sum = 0;
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.get_num();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= x[i];
    sum += v;
  }
  return sum;
}

}  // namespace

std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& q, const mpz_class& max_num,
                                              const mpz_class& max_den) {
  mpz_class r0 = q, r1 = u % q;
  if (r1 < 0) r1 += q;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > max_num) {
    mpz_class quo = r0 / r1;
    mpz_class r2 = r0 - quo * r1;
    mpz_class t2 = t0 - quo * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > max_den) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

std::optional<std::vector<mpq_class>> lift_witness(const PolySystem& sys, const std::vector<std::uint64_t>& residues,
                                                   std::uint64_t p, const LiftOptions& options) {
  const std::size_t n = sys.vars().size();
  if (residues.size() != n) throw Error("witness length does not match the system");

  std::vector<mpz_class> x;
  for (auto r : residues) x.push_back(balanced(r, p));
  {
    std::vector<mpq_class> point(x.begin(), x.end());
    if (sys.vanishes_at(point)) return point;
  }

  std::vector<Poly> integral;
  for (const auto& f : sys.polys()) integral.push_back(f.primitive_part());

  const mpz_class pz(static_cast<unsigned long>(p));
  std::vector<mpz_class> xr;
  for (auto r : residues) xr.emplace_back(static_cast<unsigned long>(r));
  std::vector<std::vector<std::uint64_t>> jac(integral.size(), std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < integral.size(); ++i)
    for (std::size_t v = 0; v < n; ++v)
      jac[i][v] = integral[i].derivative(v).evaluate_mod(xr, pz).get_ui();

  PivotChoice pivots = choose_pivots(jac, p);
  std::size_t rank = pivots.rows.size();
  if (rank == 0) return std::nullopt;

  Ring field = Ring::prime_field(p);
  Matrix minor(field, rank, rank);
  for (std::size_t a = 0; a < rank; ++a)
    for (std::size_t b = 0; b < rank; ++b)
      minor.at(a, b) = RingElem::from_int(field, static_cast<long>(jac[pivots.rows[a]][pivots.cols[b]]));
  Matrix minor_inv = inverse(minor);

  mpz_class q = pz;
  while (q <= kLiftTarget) {
    std::vector<RingElem> c;
    for (std::size_t a = 0; a < rank; ++a) {
      mpz_class value = eval_integer(integral[pivots.rows[a]], x);
      if (value % q != 0) return std::nullopt;
      mpz_class digit = (value / q) % pz;
      if (digit < 0) digit += pz;
      c.push_back(RingElem::from_int(field, static_cast<long>(digit.get_ui())));
    }
    Vector delta = apply_matrix(minor_inv, c);
    for (std::size_t b = 0; b < rank; ++b) {
      // x_K <- x_K - q * J^{-1} c
      mpz_class step(static_cast<unsigned long>((-delta[b]).residue()));
      x[pivots.cols[b]] += q * step;
    }
    q *= pz;
  }

  mpz_class max_den(static_cast<unsigned long>(options.max_denominator));
  mpz_class max_num = (q - 1) / (2 * max_den);
  std::vector<mpq_class> point(n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots.cols) is_pivot[c] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_pivot[v]) {
      point[v] = x[v];
      continue;
    }
    auto r = rational_reconstruct(x[v], q, max_num, max_den);
    if (!r) return std::nullopt;
    point[v] = *r;
  }
  if (!sys.vanishes_at(point)) return std::nullopt;
  return point;
}

}  // namespace trialg
