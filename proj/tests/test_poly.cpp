#include <vector>

#include "doctest.h"
#include "trialg/poly.hpp"
#include "trialg/ring.hpp"

using namespace trialg;

namespace {

const std::vector<std::string> kXyz{"x", "y", "z"};

Poly P(const char* s) { return parse_scalar(s, Ring::polynomial(kXyz)).poly(); }

Monomial M(std::uint32_t a, std::uint32_t b, std::uint32_t c) { return Monomial({a, b, c}); }

}  // namespace

TEST_CASE("grevlex orders by degree, then by the last variable reversed") {
  std::vector<Monomial> desc{M(2, 0, 0), M(1, 1, 0), M(0, 2, 0), M(1, 0, 1), M(0, 1, 1), M(0, 0, 2), M(1, 0, 0), M(0, 0, 0)};
  for (std::size_t i = 0; i + 1 < desc.size(); ++i) {
    CHECK(grevlex_compare(desc[i], desc[i + 1]) > 0);
    CHECK(grevlex_compare(desc[i + 1], desc[i]) < 0);
  }
  CHECK(grevlex_compare(M(1, 2, 3), M(1, 2, 3)) == 0);
  CHECK(P("z^2 + x*y + x^2").to_string(kXyz) == "x^2 + x*y + z^2");
}

TEST_CASE("monomial lattice operations") {
  CHECK(M(1, 0, 2).divides(M(1, 1, 2)));
  CHECK_FALSE(M(1, 0, 2).divides(M(0, 1, 2)));
  CHECK(Monomial::lcm(M(2, 0, 1), M(1, 3, 0)) == M(2, 3, 1));
  CHECK(M(2, 0, 0).coprime(M(0, 1, 1)));
  CHECK((M(2, 3, 1) / M(1, 3, 0)) == M(1, 0, 1));
  CHECK(M(2, 3, 1).degree() == 6);
}

TEST_CASE("polynomial arithmetic and calculus") {
  CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
  CHECK((P("x+1") - P("x+1")).is_zero());
  CHECK(P("x^2*y + 3*z").derivative(0) == P("2*x*y"));
  CHECK(P("x+y").pow(3) == P("x^3+3*x^2*y+3*x*y^2+y^3"));
  CHECK(P("6*x + 4/3*y").primitive_part() == P("9*x + 2*y"));
  CHECK(P("-2*x + 4").primitive_part() == P("x - 2"));
  CHECK(P("3*x*y + 1").monic() == P("x*y + 1/3"));
  CHECK(P("x*y - 7").total_degree() == 2);
  CHECK(P("x*y - 7").constant_coeff() == -7);
  std::vector<mpq_class> pt{mpq_class(1, 2), 3, -1};
  CHECK(P("x*y*z + x").evaluate(pt) == mpq_class(-1));
  std::vector<mpz_class> pz{4, 3, 6};
  CHECK(P("1/2*x*y + z^2").evaluate_mod(pz, 7) == mpz_class((6 + 36) % 7));
}

TEST_CASE("division remainder and S-polynomials") {
  std::vector<Poly> basis{P("x - y"), P("y^2 - 1")};
  CHECK(normal_form(P("x^2 - 1"), basis).is_zero());
  CHECK(normal_form(P("x*y - 1"), basis).is_zero());
  CHECK(normal_form(P("x + 1"), basis) == P("y + 1"));
  CHECK(s_polynomial(P("x^2 - 1"), P("x*y - 1")) == P("x - y"));
}
