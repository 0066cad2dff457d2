#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "trialg/ring.hpp"

namespace trialg {

using Json = nlohmann::ordered_json;

/// Dense row-major matrix of scalars sharing one ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const Ring& ring, std::size_t n);
  /// Parses each entry with parse_scalar; all rows must have equal length.
  static Matrix from_strings(const Ring& ring, const std::vector<std::vector<std::string>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RingElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElem> data_;
};

/// Block matrix (a_ij * b).
Matrix kron(const Matrix& a, const Matrix& b);
/// a ⊗ a ⊗ ... (n factors).
Matrix kron_power(const Matrix& a, std::size_t n);
/// Exact inverse by Gaussian elimination over a field; throws if singular.
Matrix inverse(const Matrix& m);

using Vector = std::vector<RingElem>;

/// Matrix of structure constants of an m-dimensional n-ary algebra: an
/// m x m^n matrix whose column for the basis tuple (i_1, ..., i_n) holds
/// the coordinates of e_{i_1} ... e_{i_n}. Columns are ordered with the
/// first slot most significant.
class Msc {
 public:
  Msc(std::size_t dim, std::size_t arity, Matrix entries);
  static Msc zero(const Ring& ring, std::size_t dim, std::size_t arity);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const Ring& ring() const { return entries_.ring(); }
  const Matrix& entries() const { return entries_; }

  /// Zero-based column of the zero-based basis tuple.
  static std::size_t column_of(std::span<const std::size_t> tuple, std::size_t dim);
  /// Inverse of column_of.
  static std::vector<std::size_t> tuple_of(std::size_t column, std::size_t dim, std::size_t arity);

  friend bool operator==(const Msc& a, const Msc& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::size_t arity_;
  Matrix entries_;
};

/// Invertible change of basis g with its cached exact inverse.
class BasisChange {
 public:
  /// Throws if g is not square, not over a field, or singular.
  explicit BasisChange(Matrix g);
  static BasisChange identity(const Ring& ring, std::size_t dim);

  std::size_t dim() const { return g_.rows(); }
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return g_inv_; }

 private:
  Matrix g_;
  Matrix g_inv_;
};

/// Coordinates of the product of `args` (one coordinate vector per slot).
Vector eval_product(const Msc& a, std::span<const Vector> args);
/// Product of basis vectors: simply the column of the tuple.
Vector eval_basis_product(const Msc& a, std::span<const std::size_t> tuple);

/// g A (g^-1)^{⊗n}; the structure constants after the basis change g.
Msc transform(const Msc& a, const BasisChange& g);

Vector apply_matrix(const Matrix& m, const Vector& v);
Vector basis_vector(const Ring& ring, std::size_t dim, std::size_t index);

/// Entrywise maps.
Msc specialize(const Msc& a, const Assignment& assignment);
Msc reduce_mod(const Msc& a, const Ring& prime_field);
Msc embed_constants(const Msc& a, const Ring& polynomial_ring);

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& doc);
Json msc_to_json(const Msc& a);
/// Validates the schema; errors name the offending field.
Msc msc_from_json(const Json& doc);
Json matrix_to_json(const Matrix& m);

}  // namespace trialg
