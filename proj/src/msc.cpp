#include "trialg/msc.hpp"

#include "trialg/error.hpp"

namespace trialg {

namespace {

std::size_t int_pow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void check_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!(a == b)) throw Error(std::string(what) + ": ring mismatch " + a.describe() + " vs " + b.describe());
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, RingElem::zero(ring_)) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one(ring);
  return m;
}

Matrix Matrix::from_strings(const Ring& ring, const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = parse_scalar(rows[r][c], ring);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
  check_same_ring(ring_, other.ring_, "matrix product");
  if (cols_ != other.rows_)
    throw Error("matrix product shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  Matrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const RingElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const RingElem& b = other.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  check_same_ring(ring_, other.ring_, "matrix sum");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  check_same_ring(ring_, other.ring_, "matrix difference");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  check_same_ring(a.ring(), b.ring(), "kron");
  Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RingElem& s = a.at(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out.at(i * b.rows() + k, j * b.cols() + l) = s * b.at(k, l);
    }
  return out;
}

Matrix kron_power(const Matrix& a, std::size_t n) {
  if (n == 0) return Matrix::identity(a.ring(), 1);
  Matrix out = a;
  for (std::size_t i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

Matrix inverse(const Matrix& m) {
  if (!m.ring().is_field()) throw Error("matrix inverse needs a field, got " + m.ring().describe());
  if (m.rows() != m.cols()) throw Error("matrix inverse needs a square matrix");
  std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(m.ring(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    RingElem scale = work.at(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      RingElem f = work.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Msc::Msc(std::size_t dim, std::size_t arity, Matrix entries) : dim_(dim), arity_(arity), entries_(std::move(entries)) {
  if (dim_ < 1) throw Error("dim must be at least 1");
  if (arity_ < 2) throw Error("arity must be at least 2");
  if (entries_.rows() != dim_) throw Error("MSC must have dim rows");
  if (entries_.cols() != int_pow(dim_, arity_))
    throw Error("MSC of dim " + std::to_string(dim_) + " and arity " + std::to_string(arity_) + " needs " +
                std::to_string(int_pow(dim_, arity_)) + " columns, got " + std::to_string(entries_.cols()));
}

Msc Msc::zero(const Ring& ring, std::size_t dim, std::size_t arity) {
  return Msc(dim, arity, Matrix(ring, dim, int_pow(dim, arity)));
}

std::size_t Msc::column_of(std::span<const std::size_t> tuple, std::size_t dim) {
  std::size_t c = 0;
  for (std::size_t i : tuple) c = c * dim + i;
  return c;
}

std::vector<std::size_t> Msc::tuple_of(std::size_t column, std::size_t dim, std::size_t arity) {
  std::vector<std::size_t> t(arity);
  for (std::size_t k = arity; k-- > 0;) {
    t[k] = column % dim;
    column /= dim;
  }
  return t;
}

BasisChange::BasisChange(Matrix g) : g_(std::move(g)), g_inv_(trialg::inverse(g_)) {}

BasisChange BasisChange::identity(const Ring& ring, std::size_t dim) {
  return BasisChange(Matrix::identity(ring, dim));
}

Vector apply_matrix(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw Error("vector length does not match matrix");
  Vector out(m.rows(), RingElem::zero(m.ring()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

Vector basis_vector(const Ring& ring, std::size_t dim, std::size_t index) {
  Vector v(dim, RingElem::zero(ring));
  v.at(index) = RingElem::one(ring);
  return v;
}

Vector eval_product(const Msc& a, std::span<const Vector> args) {
  if (args.size() != a.arity())
    throw Error("product needs " + std::to_string(a.arity()) + " arguments, got " + std::to_string(args.size()));
  for (const auto& v : args) {
    if (v.size() != a.dim()) throw Error("argument vector has wrong length");
    for (const auto& x : v) check_same_ring(x.ring(), a.ring(), "eval_product");
  }
  // Kronecker product of the arguments, built slot by slot.
  Vector tensor{RingElem::one(a.ring())};
  for (const auto& v : args) {
    Vector next;
    next.reserve(tensor.size() * v.size());
    for (const auto& t : tensor)
      for (const auto& x : v) next.push_back(t * x);
    tensor = std::move(next);
  }
  return apply_matrix(a.entries(), tensor);
}

Vector eval_basis_product(const Msc& a, std::span<const std::size_t> tuple) {
  if (tuple.size() != a.arity()) throw Error("basis tuple has wrong length");
  std::size_t c = Msc::column_of(tuple, a.dim());
  Vector out;
  for (std::size_t l = 0; l < a.dim(); ++l) out.push_back(a.entries().at(l, c));
  return out;
}

Msc transform(const Msc& a, const BasisChange& g) {
  if (g.dim() != a.dim()) throw Error("basis change dimension does not match MSC");
  if (!a.ring().is_field()) throw Error("transform needs a field, got " + a.ring().describe());
  check_same_ring(a.ring(), g.matrix().ring(), "transform");
  Matrix right = kron_power(g.inverse(), a.arity());
  return Msc(a.dim(), a.arity(), g.matrix() * (a.entries() * right));
}

namespace {

template <class F>
Msc map_entries(const Msc& a, const Ring& target, F f) {
  Matrix out(target, a.entries().rows(), a.entries().cols());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = f(a.entries().at(r, c));
  return Msc(a.dim(), a.arity(), std::move(out));
}

}  // namespace

Msc specialize(const Msc& a, const Assignment& assignment) {
  return map_entries(a, Ring::rationals(), [&](const RingElem& e) { return substitute(e, assignment); });
}

Msc reduce_mod(const Msc& a, const Ring& prime_field) {
  return map_entries(a, prime_field, [&](const RingElem& e) { return reduce_mod(e, prime_field); });
}

Msc embed_constants(const Msc& a, const Ring& polynomial_ring) {
  return map_entries(a, polynomial_ring, [&](const RingElem& e) { return embed_constant(e, polynomial_ring); });
}

Json ring_to_json(const Ring& ring) {
  Json doc;
  switch (ring.kind()) {
    case RingKind::rationals:
      doc["kind"] = "Q";
      break;
    case RingKind::prime_field:
      doc["kind"] = "GF";
      doc["p"] = ring.prime();
      break;
    case RingKind::polynomial:
      doc["kind"] = "poly";
      doc["vars"] = ring.vars();
      break;
  }
  return doc;
}

Ring ring_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error("ring: expected an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw Error("ring.kind: expected a string");
  std::string kind = doc["kind"].get<std::string>();
  if (kind == "Q") return Ring::rationals();
  if (kind == "GF") {
    if (!doc.contains("p") || !doc["p"].is_number_unsigned()) throw Error("ring.p: expected a positive integer");
    return Ring::prime_field(doc["p"].get<std::uint64_t>());
  }
  if (kind == "poly") {
    if (!doc.contains("vars") || !doc["vars"].is_array()) throw Error("ring.vars: expected an array of strings");
    std::vector<std::string> vars;
    for (const auto& v : doc["vars"]) {
      if (!v.is_string()) throw Error("ring.vars: expected an array of strings");
      vars.push_back(v.get<std::string>());
    }
    return Ring::polynomial(std::move(vars));
  }
  throw Error("ring.kind: unknown kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

Json msc_to_json(const Msc& a) {
  Json doc;
  doc["dim"] = a.dim();
  doc["arity"] = a.arity();
  doc["ring"] = ring_to_json(a.ring());
  doc["entries"] = matrix_to_json(a.entries());
  return doc;
}

Msc msc_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error("msc: expected an object");
  for (const char* key : {"dim", "arity"}) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) throw Error(std::string(key) + ": expected an integer");
  }
  long dim = doc["dim"].get<long>();
  long arity = doc["arity"].get<long>();
  if (dim < 1) throw Error("dim: must be at least 1");
  if (arity < 2) throw Error("arity: must be at least 2");
  if (arity > 12 || dim > 64) throw Error("dim/arity: too large");
  if (!doc.contains("ring")) throw Error("ring: missing");
  Ring ring = ring_from_json(doc["ring"]);
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw Error("entries: expected an array of rows");
  const auto& rows = doc["entries"];
  std::size_t cols = int_pow(static_cast<std::size_t>(dim), static_cast<std::size_t>(arity));
  if (rows.size() != static_cast<std::size_t>(dim))
    throw Error("entries: expected " + std::to_string(dim) + " rows, got " + std::to_string(rows.size()));
  Matrix m(ring, static_cast<std::size_t>(dim), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::string where = "entries[" + std::to_string(r) + "]";
    if (!row.is_array()) throw Error(where + ": expected an array");
    if (row.size() != cols)
      throw Error(where + ": expected " + std::to_string(cols) + " columns, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string()) throw Error(where + "[" + std::to_string(c) + "]: expected a string");
      try {
        m.at(r, c) = parse_scalar(row[c].get<std::string>(), ring);
      } catch (const Error& e) {
        throw Error(where + "[" + std::to_string(c) + "]: " + e.what());
      }
    }
  }
  return Msc(static_cast<std::size_t>(dim), static_cast<std::size_t>(arity), std::move(m));
}

}  // namespace trialg
