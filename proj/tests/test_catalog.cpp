#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trialg/catalog.hpp"
#include "trialg/error.hpp"
#include "trialg/generate.hpp"
#include "trialg/identities.hpp"

using namespace test;

namespace {

Assignment pt(std::initializer_list<std::pair<const char*, mpq_class>> kv) {
  Assignment a;
  for (const auto& [k, v] : kv) a[k] = v;
  return a;
}

const ClaimResult& find(const Report& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return c;
  throw std::runtime_error("claim " + id + " missing");
}

struct Expected {
  const char* row;
  std::size_t l, i, j, k;
  const char* table;
  const char* computed;
  bool documented;
};

}  // namespace

TEST_CASE("catalog lookup") {
  CHECK(catalog_get("A9") == msc({{"1/3", "0", "0", "0"}, {"1", "2/3", "-1/3", "0"}}));
  CHECK(catalog_get("B4", pt({{"a1", 1}, {"b2", 1}})) ==
        msc({{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}}));
  CHECK_THROWS_WITH(catalog_get("A4", pt({{"a1", 0}})), doctest::Contains("b2"));
  CHECK_THROWS_AS(catalog_get("A13"), Error);
  CHECK_THROWS_AS(catalog_get("A4", pt({{"a1", 0}, {"b2", 0}, {"c", 1}})), Error);
  CHECK(catalog_get("A9", Assignment{}) == catalog_get("A9"));
  CHECK(family("B1").params == std::vector<std::string>{"a1", "a2", "a4", "b1"});
  CHECK(families().size() == 26);
  CHECK(parse_params("a1=1/2, b2=-1") == pt({{"a1", mpq_class(1, 2)}, {"b2", -1}}));
  CHECK(parse_params("").empty());
  CHECK_THROWS_AS(parse_params("a1"), Error);
  CHECK_THROWS_AS(parse_params("a1=1,a1=2"), Error);
  CHECK_THROWS_AS(parse_params("a1=x"), Error);
}

TEST_CASE("specialized families round-trip through JSON") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (const auto& f : families()) {
    for (int k = 0; k < 3; ++k) {
      Assignment a;
      for (const auto& p : f.params) a[p] = mpq_class(num(rng), den(rng));
      Msc m = catalog_get(f.name, a);
      REQUIRE(msc_from_json(msc_to_json(m)) == m);
    }
    REQUIRE(msc_from_json(msc_to_json(f.msc_template)) == f.msc_template);
  }
}

TEST_CASE("table comparison reports every discrepancy") {
  // Frozen from tests/oracles/table_oracle.py.
  const Expected expected[] = {
      {"B1", 1, 2, 1, 2, "a2^2 - a1*a4 - a2", "a2^2 - a1*a4 + a2", false},
      {"B7", 1, 1, 1, 2, "b1 + 1", "1", false},
      {"B7", 2, 1, 1, 2, "1", "b1 + 1", false},
      {"B8", 1, 2, 1, 1, "a1^2", "0", true},
      {"B8", 2, 2, 1, 1, "0", "-a1^2", false},
      {"B11", 1, 2, 1, 1, "-1", "0", false},
      {"B11", 2, 2, 1, 1, "0", "-1", false},
  };
  auto got = table1_mismatches();
  REQUIRE(got.size() == std::size(expected));
  for (std::size_t n = 0; n < got.size(); ++n) {
    CAPTURE(n);
    CHECK(got[n].row == expected[n].row);
    CHECK(got[n].l == expected[n].l);
    CHECK(got[n].i == expected[n].i);
    CHECK(got[n].j == expected[n].j);
    CHECK(got[n].k == expected[n].k);
    CHECK(got[n].printed == expected[n].table);
    CHECK(got[n].computed == expected[n].computed);
    CHECK(got[n].documented == expected[n].documented);
  }

  Report r = table1_verify();
  REQUIRE(r.claims.size() == 12);
  for (const char* id : {"T-A2", "T-A3", "T-A4", "T-A5", "T-A6", "T-A9", "T-A10", "T-A12"})
    CHECK(find(r, id).status == ClaimStatus::pass);
  for (const char* id : {"T-A1", "T-A7", "T-A8", "T-A11"}) CHECK(find(r, id).status == ClaimStatus::fail);
  const ClaimResult& b8 = find(r, "T-A8");
  CHECK(b8.evidence["mismatches"][0]["documented"] == true);
  CHECK_FALSE(b8.expected_mismatch);
  CHECK_FALSE(r.ok());
}

TEST_CASE("matching rows agree with direct generation") {
  std::vector<std::string> mismatched;
  for (const auto& m : table1_mismatches()) mismatched.push_back(m.row);
  for (int i = 1; i <= 11; ++i) {
    std::string b = "B" + std::to_string(i);
    bool bad = std::find(mismatched.begin(), mismatched.end(), b) != mismatched.end();
    CHECK((generate_nary(catalog_get("A" + std::to_string(i)), 3) == catalog_get(b)) == !bad);
  }
}

TEST_CASE("total associativity scans") {
  auto b4 = totassoc_scan("B4", default_scan_grid());
  std::vector<Assignment> want4{
      pt({{"a1", 0}, {"b2", 0}}),
      pt({{"a1", mpq_class(1, 2)}, {"b2", mpq_class(-1, 2)}}),
      pt({{"a1", mpq_class(1, 2)}, {"b2", 0}}),
      pt({{"a1", mpq_class(1, 2)}, {"b2", mpq_class(1, 2)}}),
      pt({{"a1", 1}, {"b2", -1}}),
      pt({{"a1", 1}, {"b2", 0}}),
      pt({{"a1", 1}, {"b2", 1}}),
  };
  CHECK(b4 == want4);

  std::vector<Assignment> want2{pt({{"a1", 0}, {"b1", 0}, {"b2", 0}}),
                                pt({{"a1", mpq_class(1, 2)}, {"b1", 0}, {"b2", mpq_class(-1, 2)}}),
                                pt({{"a1", mpq_class(1, 2)}, {"b1", 0}, {"b2", mpq_class(1, 2)}})};
  std::vector<std::vector<mpq_class>> small{{0, mpq_class(1, 2)}, {0}, {mpq_class(-1, 2), 0, mpq_class(1, 2)}};
  CHECK(totassoc_scan("B2", small) == want2);
  CHECK(totassoc_scan("B2", default_scan_grid()) == want2);

  CHECK(totassoc_scan("B4", std::vector<mpq_class>{}).empty());
  CHECK_THROWS_AS(totassoc_scan("A4", default_scan_grid()), Error);
  CHECK_THROWS_AS(totassoc_scan("B4", small), Error);
}

TEST_CASE("scan results survive grid enlargement") {
  std::vector<mpq_class> small{mpq_class(-1), mpq_class(0), mpq_class(1, 2), mpq_class(1)};
  std::vector<mpq_class> large = default_scan_grid();
  large.push_back(mpq_class(2));
  large.push_back(mpq_class(-1, 3));
  for (const char* fam : {"B4", "B5", "B8"}) {
    auto a = totassoc_scan(fam, small);
    auto b = totassoc_scan(fam, large);
    for (const auto& x : a) REQUIRE(std::find(b.begin(), b.end(), x) != b.end());
  }
}

TEST_CASE("claim records decode and carry payloads") {
  const auto& recs = claim_records();
  CHECK(recs.size() >= 20);
  for (const auto& r : recs) {
    if (r.payload.contains("printed")) REQUIRE_NOTHROW(msc_from_json(r.payload["printed"]));
    if (r.payload.contains("target") && r.payload["target"].is_object())
      REQUIRE_NOTHROW(msc_from_json(r.payload["target"]));
  }
  Json bundle = catalog_bundle();
  CHECK(bundle["families"].size() == 26);
  CHECK(msc_from_json(bundle["families"]["B8"]["msc"]) == catalog_get("B8"));
  CHECK(bundle["claims"].size() == recs.size());
}

TEST_CASE("claims replay") {
  Report r = claims_verify(4);
  CHECK(find(r, "NA-4").status == ClaimStatus::pass);
  CHECK(find(r, "COL-Cdagger").status == ClaimStatus::pass);
  CHECK(find(r, "COL-A4-1").status == ClaimStatus::pass);
  CHECK(find(r, "TA-viii").status == ClaimStatus::pass);
  CHECK(find(r, "ALT-A2").status == ClaimStatus::pass);
  CHECK(find(r, "INX-Cstar").status == ClaimStatus::pass);
  const ClaimResult& ii = find(r, "TA-ii");
  CHECK(ii.status == ClaimStatus::fail);
  CHECK(ii.evidence["printed"]["verdict"] == false);
  CHECK(ii.evidence["named"][0]["totally_associative"] == true);
  CHECK(ii.evidence["named"][0]["matches_printed"] == false);
  for (const auto& c : r.claims) {
    if (c.id == "TA-ii") continue;
    CAPTURE(c.id);
    CHECK(c.status == ClaimStatus::pass);
  }
}

TEST_CASE("full replay is deterministic") {
  Report a = paper_replay(1);
  Report b = paper_replay(4);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.claims.size() >= 20);
  Json doc = a.to_json();
  CHECK(doc["summary"]["total"] == a.claims.size());
  CHECK(doc["summary"]["ok"] == false);
  CHECK(doc["claims"][7]["id"] == "T-A8");
}
