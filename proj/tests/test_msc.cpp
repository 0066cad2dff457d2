#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trialg/catalog.hpp"
#include "trialg/error.hpp"

using namespace test;

TEST_CASE("Kronecker products") {
  Ring qr = Ring::rationals();
  CHECK(kron(Matrix::identity(qr, 2), Matrix::identity(qr, 2)) == Matrix::identity(qr, 4));
  Matrix a = Matrix::from_strings(qr, {{"1", "2"}});
  Matrix b = Matrix::from_strings(qr, {{"3"}, {"4"}});
  CHECK(kron(a, b) == Matrix::from_strings(qr, {{"3", "6"}, {"4", "8"}}));
  CHECK(kron_power(Matrix::identity(qr, 2), 3) == Matrix::identity(qr, 8));
  CHECK_THROWS_AS(kron(a, Matrix::identity(Ring::prime_field(5), 2)), Error);
}

TEST_CASE("Kronecker mixed-product property on random matrices") {
  std::mt19937 rng(11);
  Ring f5 = Ring::prime_field(5);
  for (int i = 0; i < 100; ++i) {
    Matrix a = random_matrix(f5, 2, 2, rng), b = random_matrix(f5, 2, 2, rng);
    Matrix c = random_matrix(f5, 2, 2, rng), d = random_matrix(f5, 2, 2, rng);
    REQUIRE(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("column layout puts the first slot most significant") {
  std::vector<std::size_t> t{1, 0, 1};
  CHECK(Msc::column_of(t, 2) == 5);
  CHECK(Msc::tuple_of(5, 2, 3) == t);
  std::vector<std::size_t> t3{2, 1};
  CHECK(Msc::column_of(t3, 3) == 7);
  std::mt19937 rng(5);
  Ring f5 = Ring::prime_field(5);
  for (std::size_t arity : {2u, 3u, 4u}) {
    Msc a = random_msc(f5, 2, arity, rng);
    for (std::size_t c = 0; c < a.entries().cols(); ++c) {
      auto tuple = Msc::tuple_of(c, 2, arity);
      std::vector<Vector> args;
      for (auto i : tuple) args.push_back(basis_vector(f5, 2, i));
      REQUIRE(eval_product(a, args) == column(a, c));
      REQUIRE(eval_basis_product(a, tuple) == column(a, c));
    }
  }
}

TEST_CASE("eval_product on catalog algebras") {
  Ring qr = Ring::rationals();
  Msc b11 = catalog_get("B11");
  std::vector<Vector> e111{basis_vector(qr, 2, 0), basis_vector(qr, 2, 0), basis_vector(qr, 2, 0)};
  CHECK(eval_product(b11, e111) == basis_vector(qr, 2, 0));
  Msc ex = catalog_get("Ex52");
  std::vector<Vector> e112{basis_vector(qr, 2, 0), basis_vector(qr, 2, 0), basis_vector(qr, 2, 1)};
  CHECK(eval_product(ex, e112) == basis_vector(qr, 2, 1));
  Vector zero{RingElem::zero(qr), RingElem::zero(qr)};
  Vector v{parse_scalar("2", qr), parse_scalar("-1/3", qr)};
  std::vector<Vector> with_zero{zero, v, v};
  CHECK(eval_product(b11, with_zero) == zero);
  std::vector<Vector> too_few{v, v};
  CHECK_THROWS_AS(eval_product(b11, too_few), Error);
}

TEST_CASE("basis change acts on the left") {
  Ring qr = Ring::rationals();
  Msc a4 = catalog_get("A4", Assignment{{"a1", 1}, {"b2", 0}});
  CHECK(transform(a4, BasisChange::identity(qr, 2)) == a4);
  BasisChange swap(Matrix::from_strings(qr, {{"0", "1"}, {"1", "0"}}));
  CHECK(transform(a4, swap) == msc({{"0", "0", "0", "0"}, {"0", "0", "0", "1"}}));
  CHECK_THROWS_AS(BasisChange(Matrix::from_strings(qr, {{"1", "2"}, {"2", "4"}})), Error);
  CHECK_THROWS_AS(transform(catalog_get("A4"), swap), Error);
}

TEST_CASE("group action laws over GL(2,3)") {
  Ring f3 = Ring::prime_field(3);
  std::mt19937 rng(3);
  Msc a = random_msc(f3, 2, 3, rng);
  auto group = all_gl2(f3);
  REQUIRE(group.size() == 48);
  std::vector<Msc> images;
  for (const auto& g : group) images.push_back(transform(a, g));
  CHECK(transform(a, BasisChange::identity(f3, 2)) == a);
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      BasisChange gh(group[i].matrix() * group[j].matrix());
      REQUIRE(transform(images[j], group[i]) == transform(a, gh));
    }
  }
}

TEST_CASE("transported products agree") {
  std::mt19937 rng(17);
  Ring f5 = Ring::prime_field(5);
  for (int i = 0; i < 100; ++i) {
    std::size_t arity = 2 + static_cast<std::size_t>(i % 2);
    Msc a = random_msc(f5, 2, arity, rng);
    BasisChange g = random_gl(f5, 2, rng);
    std::vector<Vector> args, moved;
    for (std::size_t s = 0; s < arity; ++s) {
      args.push_back(random_vector(f5, 2, rng));
      moved.push_back(apply_matrix(g.matrix(), args.back()));
    }
    REQUIRE(apply_matrix(g.matrix(), eval_product(a, args)) == eval_product(transform(a, g), moved));
  }
}

TEST_CASE("exact inverse") {
  Ring qr = Ring::rationals();
  Matrix m = Matrix::from_strings(qr, {{"1", "2"}, {"3", "4"}});
  CHECK(m * inverse(m) == Matrix::identity(qr, 2));
  CHECK(inverse(m) == Matrix::from_strings(qr, {{"-2", "1"}, {"3/2", "-1/2"}}));
  CHECK_THROWS_WITH(inverse(Matrix::from_strings(qr, {{"1", "1"}, {"1", "1"}})), "matrix is singular");
}

TEST_CASE("msc JSON codec") {
  Json doc = msc_to_json(catalog_get("A12"));
  CHECK(doc.dump() == R"({"dim":2,"arity":2,"ring":{"kind":"Q"},"entries":[["0","0","0","0"],["1","0","0","0"]]})");
  CHECK(msc_from_json(doc) == catalog_get("A12"));
  Json gf = msc_to_json(reduce_mod(catalog_get("B9"), Ring::prime_field(7)));
  CHECK(gf["ring"].dump() == R"({"kind":"GF","p":7})");
  CHECK(msc_from_json(gf) == reduce_mod(catalog_get("B9"), Ring::prime_field(7)));
  Json poly = msc_to_json(catalog_get("B4"));
  CHECK(poly["ring"].dump() == R"({"kind":"poly","vars":["a1","b2"]})");
  CHECK(msc_from_json(poly) == catalog_get("B4"));

  Json bad = msc_to_json(catalog_get("B9"));
  bad["entries"][0].erase(7);
  CHECK_THROWS_WITH(msc_from_json(bad), "entries[0]: expected 8 columns, got 7");
  Json bad_scalar = msc_to_json(catalog_get("B9"));
  bad_scalar["entries"][1][2] = "1/";
  CHECK_THROWS_WITH(msc_from_json(bad_scalar), doctest::Contains("entries[1][2]"));
  Json bad_ring = msc_to_json(catalog_get("B9"));
  bad_ring["ring"] = Json{{"kind", "GF"}, {"p", 6}};
  CHECK_THROWS_AS(msc_from_json(bad_ring), Error);
  CHECK_THROWS_WITH(msc_from_json(Json{{"dim", 2}}), doctest::Contains("arity"));
}

TEST_CASE("entrywise maps") {
  Msc b4 = catalog_get("B4");
  Msc half = specialize(b4, {{"a1", mpq_class(1, 2)}, {"b2", mpq_class(1, 2)}});
  CHECK(half == msc({{"1/4", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1/4", "1/4", "0", "1/4", "0", "0", "0"}}));
  Msc m5 = reduce_mod(half, Ring::prime_field(5));
  CHECK(m5.entries().at(0, 0).residue() == 4);
  Msc lifted = embed_constants(half, Ring::polynomial({"a1"}));
  CHECK(lifted.ring() == Ring::polynomial({"a1"}));
  CHECK(specialize(lifted, {{"a1", mpq_class(0)}}) == half);
}
