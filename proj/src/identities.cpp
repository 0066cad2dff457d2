#include "trialg/identities.hpp"

#include "trialg/error.hpp"

namespace trialg {

namespace {

void require_arity(const Msc& a, std::size_t arity, const char* what) {
  if (a.arity() != arity)
    throw Error(std::string(what) + " needs arity " + std::to_string(arity) + ", got " + std::to_string(a.arity()));
}

bool vectors_equal(const Vector& x, const Vector& y) { return x == y; }

}  // namespace

std::array<Matrix, 3> total_assoc_residuals(const Msc& a) {
  require_arity(a, 3, "total associativity");
  const Matrix& m = a.entries();
  Matrix id = Matrix::identity(a.ring(), a.dim());
  Matrix left = kron(kron(m, id), id);
  Matrix middle = kron(kron(id, m), id);
  Matrix right = kron(kron(id, id), m);
  return {m * (left - middle), m * (left - right), m * (middle - right)};
}

bool is_totally_associative(const Msc& a) {
  for (const auto& r : total_assoc_residuals(a))
    if (!r.is_zero()) return false;
  return true;
}

OracleResult quintuple_oracle(const Msc& a) {
  require_arity(a, 3, "quintuple oracle");
  if (!a.ring().is_field()) throw Error("quintuple oracle enumerates basis tuples and needs a field");
  std::size_t m = a.dim();
  auto e = [&](std::size_t i) { return basis_vector(a.ring(), m, i); };
  auto prod = [&](const Vector& x, const Vector& y, const Vector& z) {
    std::vector<Vector> args{x, y, z};
    return eval_product(a, args);
  };
  std::size_t total = m * m * m * m * m;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> t = Msc::tuple_of(code, m, 5);
    Vector u = e(t[0]), v = e(t[1]), w = e(t[2]), x = e(t[3]), y = e(t[4]);
    Vector first = prod(prod(u, v, w), x, y);
    Vector second = prod(u, prod(v, w, x), y);
    Vector third = prod(u, v, prod(w, x, y));
    if (!vectors_equal(first, second) || !vectors_equal(first, third)) return {false, t};
  }
  return {true, std::nullopt};
}

Matrix binary_assoc_residual(const Msc& m) {
  require_arity(m, 2, "binary associativity");
  const Matrix& e = m.entries();
  Matrix id = Matrix::identity(m.ring(), m.dim());
  return e * kron(e, id) - e * kron(id, e);
}

OracleResult triple_oracle(const Msc& m) {
  require_arity(m, 2, "triple oracle");
  if (!m.ring().is_field()) throw Error("triple oracle enumerates basis tuples and needs a field");
  std::size_t d = m.dim();
  auto prod = [&](const Vector& x, const Vector& y) {
    std::vector<Vector> args{x, y};
    return eval_product(m, args);
  };
  for (std::size_t code = 0; code < d * d * d; ++code) {
    std::vector<std::size_t> t = Msc::tuple_of(code, d, 3);
    Vector x = basis_vector(m.ring(), d, t[0]);
    Vector y = basis_vector(m.ring(), d, t[1]);
    Vector z = basis_vector(m.ring(), d, t[2]);
    if (!vectors_equal(prod(prod(x, y), z), prod(x, prod(y, z)))) return {false, t};
  }
  return {true, std::nullopt};
}

AssocReport assoc_report(const Msc& a) {
  AssocReport report{a.arity(), {}, true, std::nullopt};
  if (a.arity() == 3) {
    auto r = total_assoc_residuals(a);
    report.residuals.assign(r.begin(), r.end());
  } else if (a.arity() == 2) {
    report.residuals.push_back(binary_assoc_residual(a));
  } else {
    throw Error("associativity check supports arity 2 or 3, got " + std::to_string(a.arity()));
  }
  for (const auto& r : report.residuals)
    if (!r.is_zero()) report.verdict = false;
  if (a.ring().is_field()) {
    OracleResult oracle = a.arity() == 3 ? quintuple_oracle(a) : triple_oracle(a);
    if (oracle.holds != report.verdict) throw Error("internal error: residual and basis-tuple oracle disagree");
    report.violating_tuple = oracle.violation;
  }
  return report;
}

Json assoc_report_to_json(const AssocReport& report) {
  static const char* kNames[] = {"a", "b", "c"};
  Json doc;
  doc["verdict"] = report.verdict;
  Json nonzeros = Json::array();
  for (std::size_t w = 0; w < report.residuals.size(); ++w) {
    const Matrix& r = report.residuals[w];
    for (std::size_t row = 0; row < r.rows(); ++row)
      for (std::size_t col = 0; col < r.cols(); ++col) {
        if (r.at(row, col).is_zero()) continue;
        Json entry;
        entry["which"] = kNames[w];
        entry["row"] = row + 1;
        entry["col"] = col + 1;
        entry["value"] = r.at(row, col).to_string();
        nonzeros.push_back(entry);
      }
  }
  doc["residual_nonzeros"] = nonzeros;
  if (report.violating_tuple) {
    Json t = Json::array();
    for (std::size_t i : *report.violating_tuple) t.push_back(i + 1);
    doc["violating_tuple"] = t;
  } else {
    doc["violating_tuple"] = nullptr;
  }
  return doc;
}

}  // namespace trialg
