#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trialg {

/// Exponent vector over a fixed, ordered variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; `other` must divide `*this`.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic order, first variable largest.
/// Returns <0, 0, >0 as a is smaller, equal or larger than b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct Term {
  Monomial monomial;
  mpq_class coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// strictly descending grevlex order with no zero coefficients, so equality
/// is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const mpq_class& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(const Monomial& m, const mpq_class& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const mpq_class& leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;
  /// Constant term (zero when absent).
  mpq_class constant_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  Poly scaled(const mpq_class& c) const;
  /// this * c * m
  Poly mul_term(const Monomial& m, const mpq_class& c) const;
  Poly derivative(std::size_t var) const;
  Poly pow(std::uint32_t e) const;

  /// Exact evaluation; `point` has one value per variable.
  mpq_class evaluate(std::span<const mpq_class> point) const;
  /// Evaluation modulo `modulus`, coefficients must have invertible denominators.
  mpz_class evaluate_mod(std::span<const mpz_class> point, const mpz_class& modulus) const;

  /// Least common denominator times gcd-normalized numerators; the result
  /// has coprime integer coefficients and a positive leading coefficient.
  Poly primitive_part() const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  /// Canonical text, e.g. "-a1^2 + 1/3*a1*b2 - 1".
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Full normal form of `f` modulo `divisors` by the multivariate division
/// algorithm over the rationals. Used to check Groebner-basis properties
/// independently of the fraction-free engine.
Poly normal_form(const Poly& f, std::span<const Poly> divisors);

/// S-polynomial with rational coefficients: lcm/lt(f)*f/lc(f) - lcm/lt(g)*g/lc(g).
Poly s_polynomial(const Poly& f, const Poly& g);

}  // namespace trialg
