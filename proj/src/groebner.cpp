#include <algorithm>
#include <set>

#include "trialg/error.hpp"
#include "trialg/polysolve.hpp"

namespace trialg {

namespace {

struct Element {
  Poly poly;
  std::uint32_t sugar = 0;
  std::vector<Poly> cof;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = grevlex_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

mpz_class integer_of(const mpq_class& q) { return q.get_num(); }

class Engine {
 public:
  Engine(std::size_t nvars, std::size_t ninputs, bool track) : nvars_(nvars), ninputs_(ninputs), track_(track) {}

  std::vector<Poly> unit_cofactor(std::size_t index, const mpq_class& scale) const {
    if (!track_) return {};
    std::vector<Poly> cof(ninputs_, Poly(nvars_));
    cof[index] = Poly::constant(nvars_, scale);
    return cof;
  }

  // a*x - b*m*y on polynomials and, when tracking, on cofactors.
  void combine(Poly& x, std::vector<Poly>& xcof, const mpz_class& a, const Monomial& m, const mpz_class& b,
               const Poly& y, const std::vector<Poly>& ycof) const {
    mpq_class qa(a), qb(b);
    x = x.scaled(qa) - y.mul_term(m, qb);
    if (track_)
      for (std::size_t k = 0; k < xcof.size(); ++k) xcof[k] = xcof[k].scaled(qa) - ycof[k].mul_term(m, qb);
  }

  void scale_all(Poly& x, Poly& rem, std::vector<Poly>& cof, const mpq_class& factor) const {
    x = x.scaled(factor);
    rem = rem.scaled(factor);
    if (track_)
      for (auto& c : cof) c = c.scaled(factor);
  }

  // Divides x and rem (jointly) by the gcd of all their coefficients.
  void remove_content(Poly& x, Poly& rem, std::vector<Poly>& cof) const {
    mpz_class g = 0;
    for (const auto& t : x.terms()) g = gcd(g, integer_of(t.coeff));
    for (const auto& t : rem.terms()) g = gcd(g, integer_of(t.coeff));
    if (g > 1) scale_all(x, rem, cof, mpq_class(mpz_class(1), g));
  }

  // Full fraction-free reduction of f modulo the elements listed in `by`.
  // Returns a scalar multiple of the normal form, with cofactors updated.
  Poly reduce(Poly f, std::vector<Poly>& cof, const std::vector<std::size_t>& by) const {
    Poly rem(nvars_);
    while (!f.is_zero()) {
      const Term& lt = f.leading();
      const Element* divisor = nullptr;
      for (std::size_t k : by) {
        if (elements_[k].poly.leading_monomial().divides(lt.monomial)) {
          divisor = &elements_[k];
          break;
        }
      }
      if (divisor == nullptr) {
        Term moved = lt;
        f = f - Poly::monomial(moved.monomial, moved.coeff);
        rem = rem + Poly::monomial(moved.monomial, moved.coeff);
        continue;
      }
      mpz_class cf = integer_of(lt.coeff);
      mpz_class cg = integer_of(divisor->poly.leading_coeff());
      mpz_class d = gcd(cf, cg);
      mpz_class a = cg / d;
      mpz_class b = cf / d;
      Monomial m = lt.monomial / divisor->poly.leading_monomial();
      rem = rem.scaled(mpq_class(a));
      combine(f, cof, a, m, b, divisor->poly, divisor->cof);
      remove_content(f, rem, cof);
    }
    return rem;
  }

  // Makes p primitive with positive leading coefficient, carrying cofactors.
  void normalize(Poly& p, std::vector<Poly>& cof) const {
    if (p.is_zero()) return;
    Poly prim = p.primitive_part();
    mpq_class factor = prim.leading_coeff() / p.leading_coeff();
    p = std::move(prim);
    if (track_)
      for (auto& c : cof) c = c.scaled(factor);
  }

  std::size_t add(Poly p, std::uint32_t sugar, std::vector<Poly> cof) {
    elements_.push_back({std::move(p), sugar, std::move(cof)});
    return elements_.size() - 1;
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::vector<Element>& elements() { return elements_; }
  bool tracking() const { return track_; }

 private:
  std::size_t nvars_;
  std::size_t ninputs_;
  bool track_;
  std::vector<Element> elements_;
};

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// If the basis is {x_i - c_i} covering every variable, returns the point.
std::optional<std::vector<mpq_class>> linear_point(const std::vector<Poly>& basis, std::size_t nvars) {
  std::vector<std::optional<mpq_class>> values(nvars);
  for (const auto& g : basis) {
    const Monomial& lm = g.leading_monomial();
    if (lm.degree() != 1 || g.terms().size() > 2) return std::nullopt;
    if (g.terms().size() == 2 && !g.terms()[1].monomial.is_one()) return std::nullopt;
    std::size_t var = 0;
    while (lm[var] == 0) ++var;
    values[var] = -g.constant_coeff() / g.leading_coeff();
  }
  std::vector<mpq_class> point;
  for (auto& v : values) {
    if (!v) return std::nullopt;
    point.push_back(*v);
  }
  return point;
}

}  // namespace

SolveOutcome buchberger(const PolySystem& sys, const GroebnerOptions& options) {
  const std::size_t nvars = sys.vars().size();
  const std::size_t ninputs = sys.polys().size();
  Engine engine(nvars, ninputs, options.track_cofactors);

  SolveOutcome out;
  out.method = "buchberger";
  out.vars = sys.vars();
  out.exhaustive = true;

  auto certify_one = [&](const Poly& constant, const std::vector<Poly>& cof) {
    out.status = SolveStatus::certified_empty_over_closure;
    out.basis = std::vector<Poly>{Poly::constant(nvars, 1)};
    if (options.track_cofactors) {
      mpq_class inv = 1 / constant.leading_coeff();
      std::vector<Poly> scaled;
      for (const auto& c : cof) scaled.push_back(c.scaled(inv));
      out.cofactors = std::vector<std::vector<Poly>>{std::move(scaled)};
    }
    out.effort.basis_size = 1;
    out.notes.push_back("reduced basis is {1}: no common zero over the algebraic closure");
    return out;
  };

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add_element = [&](Poly p, std::uint32_t sugar, std::vector<Poly> cof) {
    std::size_t idx = engine.add(std::move(p), sugar, std::move(cof));
    const auto& elems = engine.elements();
    for (std::size_t i = 0; i < idx; ++i) {
      Monomial l = Monomial::lcm(elems[i].poly.leading_monomial(), elems[idx].poly.leading_monomial());
      std::uint32_t si = elems[i].sugar + l.degree() - elems[i].poly.leading_monomial().degree();
      std::uint32_t sj = elems[idx].sugar + l.degree() - elems[idx].poly.leading_monomial().degree();
      pending.push_back({i, idx, std::move(l), std::max(si, sj)});
      pending_keys.insert({i, idx});
    }
  };

  for (std::size_t k = 0; k < ninputs; ++k) {
    Poly p = sys.polys()[k];
    if (p.is_zero()) continue;
    Poly prim = p.primitive_part();
    std::vector<Poly> cof = engine.unit_cofactor(k, prim.leading_coeff() / p.leading_coeff());
    if (prim.is_constant()) return certify_one(prim, cof);
    std::uint32_t deg = prim.total_degree();
    out.effort.max_degree = std::max(out.effort.max_degree, deg);
    add_element(std::move(prim), deg, std::move(cof));
  }

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_before);
    Pair pair = *best;
    pending.erase(best);
    pending_keys.erase({pair.i, pair.j});

    const auto& elems = engine.elements();
    const Poly& fi = elems[pair.i].poly;
    const Poly& fj = elems[pair.j].poly;
    if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < elems.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!elems[k].poly.leading_monomial().divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.count(key(pair.i, k)) && !pending_keys.count(key(pair.j, k));
    }
    if (chain) continue;
    if (pair.lcm.degree() > options.caps.max_degree) {
      out.effort.caps_hit = true;
      continue;
    }
    if (out.effort.pairs >= options.caps.max_pairs) {
      out.effort.caps_hit = true;
      break;
    }
    ++out.effort.pairs;
    out.effort.max_degree = std::max(out.effort.max_degree, pair.lcm.degree());

    mpz_class ci = fi.leading_coeff().get_num();
    mpz_class cj = fj.leading_coeff().get_num();
    mpz_class d = gcd(ci, cj);
    Poly s = fi;
    std::vector<Poly> cof = elems[pair.i].cof;
    if (engine.tracking())
      for (auto& c : cof) c = c.mul_term(pair.lcm / fi.leading_monomial(), mpq_class(cj / d));
    s = s.mul_term(pair.lcm / fi.leading_monomial(), mpq_class(cj / d));
    {
      Poly sj = fj.mul_term(pair.lcm / fj.leading_monomial(), mpq_class(ci / d));
      s = s - sj;
      if (engine.tracking())
        for (std::size_t k = 0; k < cof.size(); ++k)
          cof[k] = cof[k] - elems[pair.j].cof[k].mul_term(pair.lcm / fj.leading_monomial(), mpq_class(ci / d));
    }
    Poly h = engine.reduce(std::move(s), cof, all_indices(engine.elements().size()));
    if (h.is_zero()) continue;
    engine.normalize(h, cof);
    if (h.is_constant()) return certify_one(h, cof);
    add_element(std::move(h), pair.sugar, std::move(cof));
  }

  if (out.effort.caps_hit) {
    out.status = SolveStatus::inconclusive;
    out.exhaustive = false;
    out.effort.basis_size = engine.elements().size();
    out.notes.push_back("caps reached (max_pairs=" + std::to_string(options.caps.max_pairs) +
                        ", max_degree=" + std::to_string(options.caps.max_degree) + ")");
    return out;
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (ties keep the earliest).
  const auto& elems = engine.elements();
  std::vector<std::size_t> kept;
  for (std::size_t g = 0; g < elems.size(); ++g) {
    bool redundant = false;
    for (std::size_t h = 0; h < elems.size() && !redundant; ++h) {
      if (h == g) continue;
      const Monomial& lh = elems[h].poly.leading_monomial();
      const Monomial& lg = elems[g].poly.leading_monomial();
      if (lh.divides(lg) && (!(lh == lg) || h < g)) redundant = true;
    }
    if (!redundant) kept.push_back(g);
  }

  // Tail-reduce each kept element against the others, then make it monic.
  std::vector<std::pair<Poly, std::vector<Poly>>> reduced;
  for (std::size_t g : kept) {
    std::vector<std::size_t> others;
    for (std::size_t h : kept)
      if (h != g) others.push_back(h);
    std::vector<Poly> cof = elems[g].cof;
    Poly r = engine.reduce(elems[g].poly, cof, others);
    mpq_class inv = 1 / r.leading_coeff();
    r = r.scaled(inv);
    if (engine.tracking())
      for (auto& c : cof) c = c.scaled(inv);
    reduced.emplace_back(std::move(r), std::move(cof));
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return grevlex_compare(a.first.leading_monomial(), b.first.leading_monomial()) < 0;
  });

  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofs;
  for (auto& [p, c] : reduced) {
    basis.push_back(std::move(p));
    cofs.push_back(std::move(c));
  }
  out.effort.basis_size = basis.size();
  if (auto point = linear_point(basis, nvars)) {
    out.status = SolveStatus::witness;
    std::vector<RingElem> w;
    for (const auto& v : *point) w.push_back(RingElem::from_rational(Ring::rationals(), v));
    out.witness = std::move(w);
    out.notes.push_back("basis is linear in every variable; unique common zero");
  } else {
    out.status = SolveStatus::inconclusive;
    out.notes.push_back("reduced basis is not {1}: common zeros exist over the algebraic closure");
  }
  out.basis = std::move(basis);
  if (options.track_cofactors) out.cofactors = std::move(cofs);
  return out;
}

bool s_pairs_reduce_to_zero(std::span<const Poly> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace trialg
