#include "trialg/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "trialg/error.hpp"

namespace trialg {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Poly Poly::constant(std::size_t nvars, const mpq_class& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  if (c != 0) p.terms_.back().coeff.canonicalize();
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Poly p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), mpq_class(1)});
  return p;
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c) {
  Poly p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  if (c != 0) p.terms_.back().coeff.canonicalize();
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, mpq_class, GrevlexGreater> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != nvars) throw Error("monomial arity does not match polynomial ring");
    t.coeff.canonicalize();
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Poly p(nvars);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

mpq_class Poly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two descending term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, sign > 0 ? mpq_class(b[j].coeff) : mpq_class(-b[j].coeff)});
      ++j;
    } else {
      mpq_class s = sign > 0 ? mpq_class(a[i].coeff + b[j].coeff) : mpq_class(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].monomial, sign > 0 ? mpq_class(b[j].coeff) : mpq_class(-b[j].coeff)});
  return out;
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomials over different variable lists");
}

}  // namespace

Poly Poly::operator+(const Poly& other) const {
  check_same_ring(*this, other);
  Poly r(nvars_);
  r.terms_ = merge_terms(terms_, other.terms_, 1);
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  check_same_ring(*this, other);
  Poly r(nvars_);
  r.terms_ = merge_terms(terms_, other.terms_, -1);
  return r;
}

Poly Poly::operator*(const Poly& other) const {
  check_same_ring(*this, other);
  if (is_zero() || other.is_zero()) return Poly(nvars_);
  if (other.terms_.size() == 1) return mul_term(other.terms_[0].monomial, other.terms_[0].coeff);
  if (terms_.size() == 1) return other.mul_term(terms_[0].monomial, terms_[0].coeff);
  std::map<Monomial, mpq_class, GrevlexGreater> acc;
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  }
  Poly r(nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::mul_term(const Monomial& m, const mpq_class& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial[var];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = t.monomial.exponents();
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  return from_terms(nvars_, std::move(out));
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

mpq_class Poly::evaluate(std::span<const mpq_class> point) const {
  if (point.size() != nvars_) throw Error("evaluation point has wrong length");
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

mpz_class Poly::evaluate_mod(std::span<const mpz_class> point, const mpz_class& modulus) const {
  if (point.size() != nvars_) throw Error("evaluation point has wrong length");
  mpz_class sum = 0;
  for (const auto& t : terms_) {
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), t.coeff.get_den_mpz_t(), modulus.get_mpz_t()) == 0)
      throw Error("coefficient denominator not invertible modulo " + modulus.get_str());
    mpz_class v = t.coeff.get_num() * den_inv;
    v %= modulus;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) {
        v *= point[i];
        v %= modulus;
      }
    }
    sum += v;
  }
  sum %= modulus;
  if (sum < 0) sum += modulus;
  return sum;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class den = 1;
  for (const auto& t : terms_) den = lcm(den, mpz_class(t.coeff.get_den()));
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.get_num() * (den / t.coeff.get_den());
    g = gcd(g, n);
  }
  if (terms_.front().coeff < 0) g = -g;
  mpq_class factor(den, g);
  factor.canonicalize();
  return scaled(factor);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading_coeff();
  return scaled(inv);
}

std::string Poly::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpq_class mag = abs(t.coeff);
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::uint32_t e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Poly normal_form(const Poly& f, std::span<const Poly> divisors) {
  Poly remainder(f.nvars());
  Poly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.monomial)) {
        mpq_class c = lt.coeff / g.leading_coeff();
        p -= g.mul_term(lt.monomial / g.leading_monomial(), c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder += Poly::monomial(lt.monomial, lt.coeff);
      p -= Poly::monomial(lt.monomial, lt.coeff);
    }
  }
  return remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), 1 / f.leading_coeff()) -
         g.mul_term(l / g.leading_monomial(), 1 / g.leading_coeff());
}

}  // namespace trialg
