#include "trialg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "trialg/error.hpp"

namespace trialg {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);
constexpr std::uint32_t kMaxExponent = 1000;

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::uint64_t mod_reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("inversion of zero in GF(" + std::to_string(p) + ")");
  return mod_pow(a, p - 2, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::rationals() { return Ring(); }

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= kMaxPrime) throw Error("prime " + std::to_string(p) + " exceeds supported range 2^31");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  Ring r;
  r.kind_ = RingKind::prime_field;
  r.p_ = p;
  return r;
}

Ring Ring::polynomial(std::vector<std::string> vars) {
  if (vars.empty()) throw Error("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
  }
  Ring r;
  r.kind_ = RingKind::polynomial;
  r.vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
  return r;
}

const std::vector<std::string>& Ring::vars() const {
  static const std::vector<std::string> kEmpty;
  return vars_ ? *vars_ : kEmpty;
}

int Ring::var_index(std::string_view name) const {
  const auto& v = vars();
  auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::rationals:
      return "Q";
    case RingKind::prime_field:
      return "GF(" + std::to_string(p_) + ")";
    case RingKind::polynomial: {
      std::string s = "Q[";
      for (std::size_t i = 0; i < vars().size(); ++i) s += (i ? "," : "") + vars()[i];
      return s + "]";
    }
  }
  return "?";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_ || a.p_ != b.p_) return false;
  if (a.vars_ == b.vars_) return true;
  if (!a.vars_ || !b.vars_) return false;
  return *a.vars_ == *b.vars_;
}

RingElem RingElem::zero(const Ring& ring) { return from_int(ring, 0); }

RingElem RingElem::one(const Ring& ring) { return from_int(ring, 1); }

RingElem RingElem::from_int(const Ring& ring, long value) {
  return from_rational(ring, mpq_class(value));
}

RingElem RingElem::from_rational(const Ring& ring, const mpq_class& raw) {
  mpq_class value = raw;
  value.canonicalize();
  switch (ring.kind()) {
    case RingKind::rationals:
      return RingElem(ring, value);
    case RingKind::prime_field: {
      std::uint64_t p = ring.prime();
      std::uint64_t den = mod_reduce(value.get_den(), p);
      if (den == 0)
        throw Error("denominator of " + value.get_str() + " is divisible by " + std::to_string(p));
      return RingElem(ring, mod_reduce(value.get_num(), p) * mod_inverse(den, p) % p);
    }
    case RingKind::polynomial:
      return RingElem(ring, Poly::constant(ring.nvars(), value));
  }
  throw Error("unreachable ring kind");
}

RingElem RingElem::from_poly(const Ring& ring, Poly value) {
  if (ring.kind() != RingKind::polynomial) throw Error("polynomial payload needs a polynomial ring");
  if (value.nvars() != ring.nvars()) throw Error("polynomial arity does not match ring " + ring.describe());
  return RingElem(ring, std::move(value));
}

RingElem RingElem::variable(const Ring& ring, std::string_view name) {
  int idx = ring.var_index(name);
  if (idx < 0) throw Error("unknown variable '" + std::string(name) + "' in ring " + ring.describe());
  return RingElem(ring, Poly::variable(ring.nvars(), static_cast<std::size_t>(idx)));
}

bool RingElem::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::rationals:
      return rational() == 0;
    case RingKind::prime_field:
      return residue() == 0;
    case RingKind::polynomial:
      return poly().is_zero();
  }
  return false;
}

bool RingElem::is_one() const { return *this == one(ring_); }

void RingElem::check_compatible(const RingElem& other) const {
  if (!(ring_ == other.ring_))
    throw Error("ring mismatch: " + ring_.describe() + " vs " + other.ring_.describe());
}

RingElem RingElem::operator+(const RingElem& other) const {
  check_compatible(other);
  switch (ring_.kind()) {
    case RingKind::rationals:
      return RingElem(ring_, mpq_class(rational() + other.rational()));
    case RingKind::prime_field:
      return RingElem(ring_, (residue() + other.residue()) % ring_.prime());
    case RingKind::polynomial:
      return RingElem(ring_, poly() + other.poly());
  }
  throw Error("unreachable ring kind");
}

RingElem RingElem::operator-(const RingElem& other) const {
  check_compatible(other);
  switch (ring_.kind()) {
    case RingKind::rationals:
      return RingElem(ring_, mpq_class(rational() - other.rational()));
    case RingKind::prime_field:
      return RingElem(ring_, (residue() + ring_.prime() - other.residue()) % ring_.prime());
    case RingKind::polynomial:
      return RingElem(ring_, poly() - other.poly());
  }
  throw Error("unreachable ring kind");
}

RingElem RingElem::operator*(const RingElem& other) const {
  check_compatible(other);
  switch (ring_.kind()) {
    case RingKind::rationals:
      return RingElem(ring_, mpq_class(rational() * other.rational()));
    case RingKind::prime_field:
      return RingElem(ring_, residue() * other.residue() % ring_.prime());
    case RingKind::polynomial:
      return RingElem(ring_, poly() * other.poly());
  }
  throw Error("unreachable ring kind");
}

RingElem RingElem::operator-() const { return zero(ring_) - *this; }

RingElem RingElem::inv() const {
  switch (ring_.kind()) {
    case RingKind::rationals:
      if (rational() == 0) throw Error("inversion of zero in Q");
      return RingElem(ring_, mpq_class(1 / rational()));
    case RingKind::prime_field:
      return RingElem(ring_, mod_inverse(residue(), ring_.prime()));
    case RingKind::polynomial:
      throw Error("inversion is not defined in polynomial ring " + ring_.describe());
  }
  throw Error("unreachable ring kind");
}

RingElem RingElem::pow(std::uint32_t e) const {
  RingElem result = one(ring_);
  RingElem base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string RingElem::to_string() const {
  switch (ring_.kind()) {
    case RingKind::rationals:
      return rational().get_str();
    case RingKind::prime_field:
      return std::to_string(residue());
    case RingKind::polynomial:
      return poly().to_string(ring_.vars());
  }
  return "?";
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (!(a.ring_ == b.ring_)) return false;
  switch (a.ring_.kind()) {
    case RingKind::rationals:
      return a.rational() == b.rational();
    case RingKind::prime_field:
      return a.residue() == b.residue();
    case RingKind::polynomial:
      return a.poly() == b.poly();
  }
  return false;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  RingElem parse() {
    RingElem value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("cannot parse scalar \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " +
                msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  RingElem expression() {
    RingElem acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElem term() {
    RingElem acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        fail("division token in a non-rational position");
      } else {
        return acc;
      }
    }
  }

  RingElem unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RingElem power() {
    RingElem base = atom();
    if (peek('^')) {
      ++pos_;
      if (!at_digit()) fail("exponent must be a non-negative integer literal");
      mpz_class e = integer();
      if (e > kMaxExponent) fail("exponent too large");
      return base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RingElem atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElem inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (peek('/')) {
        ++pos_;
        if (!at_digit()) fail("division token in a non-rational position");
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      }
      return RingElem::from_rational(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (ring_.var_index(name) < 0) fail("unknown variable '" + std::string(name) + "'");
      return RingElem::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem parse_scalar(std::string_view text, const Ring& ring) {
  return ScalarParser(text, ring).parse();
}

mpq_class parse_rational(std::string_view text) {
  return parse_scalar(text, Ring::rationals()).rational();
}

RingElem substitute(const RingElem& elem, const Assignment& assignment) {
  const Ring& ring = elem.ring();
  if (ring.kind() == RingKind::rationals) return elem;
  if (ring.kind() != RingKind::polynomial) throw Error("substitute needs a polynomial or rational element");
  const Poly& p = elem.poly();
  std::vector<mpq_class> point(ring.nvars(), mpq_class(0));
  std::vector<bool> used(ring.nvars(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < ring.nvars(); ++i)
      if (t.monomial[i] > 0) used[i] = true;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    auto it = assignment.find(ring.vars()[i]);
    if (it != assignment.end()) {
      point[i] = it->second;
      point[i].canonicalize();
    } else if (used[i]) {
      throw Error("assignment misses variable '" + ring.vars()[i] + "'");
    }
  }
  return RingElem::from_rational(Ring::rationals(), p.evaluate(point));
}

RingElem substitute_partial(const RingElem& elem, const Assignment& assignment) {
  const Ring& ring = elem.ring();
  if (ring.kind() != RingKind::polynomial) return elem;
  std::vector<Term> out;
  for (const auto& t : elem.poly().terms()) {
    mpq_class c = t.coeff;
    std::vector<std::uint32_t> exps = t.monomial.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      auto it = assignment.find(ring.vars()[i]);
      if (it == assignment.end() || exps[i] == 0) continue;
      mpq_class v = it->second;
      v.canonicalize();
      for (std::uint32_t k = 0; k < exps[i]; ++k) c *= v;
      exps[i] = 0;
    }
    out.push_back({Monomial(std::move(exps)), c});
  }
  return RingElem::from_poly(ring, Poly::from_terms(ring.nvars(), std::move(out)));
}

RingElem reduce_mod(const RingElem& elem, const Ring& prime_field) {
  if (prime_field.kind() != RingKind::prime_field) throw Error("reduce_mod target must be a prime field");
  switch (elem.ring().kind()) {
    case RingKind::rationals:
      return RingElem::from_rational(prime_field, elem.rational());
    case RingKind::prime_field:
      if (elem.ring().prime() != prime_field.prime())
        throw Error("cannot map " + elem.ring().describe() + " into " + prime_field.describe());
      return elem;
    case RingKind::polynomial:
      throw Error("cannot reduce a polynomial element into " + prime_field.describe());
  }
  throw Error("unreachable ring kind");
}

RingElem embed_constant(const RingElem& elem, const Ring& polynomial_ring) {
  if (elem.ring() == polynomial_ring) return elem;
  if (elem.ring().kind() != RingKind::rationals || polynomial_ring.kind() != RingKind::polynomial)
    throw Error("cannot embed " + elem.ring().describe() + " into " + polynomial_ring.describe());
  return RingElem::from_rational(polynomial_ring, elem.rational());
}

}  // namespace trialg
