#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trialg/poly.hpp"

namespace trialg {

enum class RingKind { rationals, prime_field, polynomial };

/// Describes which of the three supported commutative rings a scalar
/// lives in: Q, GF(p), or Q[vars] with grevlex as canonical order.
class Ring {
 public:
  static Ring rationals();
  /// Throws unless p is a prime below 2^31.
  static Ring prime_field(std::uint64_t p);
  /// Throws on empty lists, duplicates, or names that are not identifiers.
  static Ring polynomial(std::vector<std::string> vars);

  RingKind kind() const { return kind_; }
  bool is_field() const { return kind_ != RingKind::polynomial; }
  std::uint64_t prime() const { return p_; }
  const std::vector<std::string>& vars() const;
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  /// Index of `name` in vars(), or -1.
  int var_index(std::string_view name) const;

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;
  RingKind kind_ = RingKind::rationals;
  std::uint64_t p_ = 0;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_prime(std::uint64_t n);

/// Exact scalar tagged with its ring. Immutable value type.
class RingElem {
 public:
  static RingElem zero(const Ring& ring);
  static RingElem one(const Ring& ring);
  static RingElem from_int(const Ring& ring, long value);
  /// For GF(p) throws when p divides the denominator.
  static RingElem from_rational(const Ring& ring, const mpq_class& value);
  static RingElem from_poly(const Ring& ring, Poly value);
  static RingElem variable(const Ring& ring, std::string_view name);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(payload_); }
  const Poly& poly() const { return std::get<Poly>(payload_); }

  RingElem operator+(const RingElem& other) const;
  RingElem operator-(const RingElem& other) const;
  RingElem operator*(const RingElem& other) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& other) { return *this = *this + other; }
  RingElem& operator-=(const RingElem& other) { return *this = *this - other; }
  RingElem& operator*=(const RingElem& other) { return *this = *this * other; }
  /// Multiplicative inverse; fields only, nonzero only.
  RingElem inv() const;
  RingElem pow(std::uint32_t e) const;

  /// Canonical text; parse_scalar(to_string()) reproduces the element.
  std::string to_string() const;

  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  using Payload = std::variant<mpq_class, std::uint64_t, Poly>;
  RingElem(Ring ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}
  void check_compatible(const RingElem& other) const;

  Ring ring_;
  Payload payload_;
};

using Assignment = std::map<std::string, mpq_class, std::less<>>;

/// Parses integers, fractions "a/b", and polynomial expressions built from
/// + - * ^, parentheses and declared variable names.
RingElem parse_scalar(std::string_view text, const Ring& ring);

/// Evaluates a polynomial element at rationals. Returns an element of Q;
/// rational inputs pass through unchanged.
RingElem substitute(const RingElem& elem, const Assignment& assignment);

/// Partial substitution staying inside the polynomial ring.
RingElem substitute_partial(const RingElem& elem, const Assignment& assignment);

/// Maps a rational (or already reduced) element into GF(p).
RingElem reduce_mod(const RingElem& elem, const Ring& prime_field);

/// Embeds a rational element as a constant of the polynomial ring.
RingElem embed_constant(const RingElem& elem, const Ring& polynomial_ring);

/// Parses a rational literal such as "-1/2"; a convenience for CLI and tests.
mpq_class parse_rational(std::string_view text);

}  // namespace trialg
