#include "trialg/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "trialg/error.hpp"
#include "trialg/generate.hpp"
#include "trialg/identities.hpp"
#include "trialg/iso.hpp"
#include "trialg/parallel.hpp"
#include "trialg/polysolve.hpp"

namespace trialg {

namespace {

using Rows = std::vector<std::vector<std::string>>;

struct FamilySource {
  const char* name;
  std::vector<std::string> params;
  const char* provenance;
  Rows rows;
};

Msc build_template(const std::vector<std::string>& params, const Rows& rows) {
  Ring ring = params.empty() ? Ring::rationals() : Ring::polynomial(params);
  Matrix m = Matrix::from_strings(ring, rows);
  std::size_t arity = m.cols() == 4 ? 2 : 3;
  return Msc(2, arity, std::move(m));
}

std::vector<FamilySource> family_sources() {
  return {
      {"A1", {"a1", "a2", "a4", "b1"}, "binary classification",
       {{"a1", "a2", "a2+1", "a4"}, {"b1", "-a1", "-a1+1", "-a2"}}},
      {"A2", {"a1", "b1", "b2"}, "binary classification", {{"a1", "0", "0", "1"}, {"b1", "b2", "1-a1", "0"}}},
      {"A3", {"b1", "b2"}, "binary classification", {{"0", "1", "1", "0"}, {"b1", "b2", "1", "-1"}}},
      {"A4", {"a1", "b2"}, "binary classification", {{"a1", "0", "0", "0"}, {"0", "b2", "1-a1", "0"}}},
      {"A5", {"a1"}, "binary classification", {{"a1", "0", "0", "0"}, {"1", "2*a1-1", "1-a1", "0"}}},
      {"A6", {"a1", "b1"}, "binary classification", {{"a1", "0", "0", "1"}, {"b1", "1-a1", "-a1", "0"}}},
      {"A7", {"b1"}, "binary classification", {{"0", "1", "1", "0"}, {"b1", "1", "0", "-1"}}},
      {"A8", {"a1"}, "binary classification", {{"a1", "0", "0", "0"}, {"0", "1-a1", "-a1", "0"}}},
      {"A9", {}, "binary classification", {{"1/3", "0", "0", "0"}, {"1", "2/3", "-1/3", "0"}}},
      {"A10", {}, "binary classification", {{"0", "1", "1", "0"}, {"0", "0", "0", "-1"}}},
      {"A11", {}, "binary classification", {{"0", "1", "1", "0"}, {"1", "0", "0", "-1"}}},
      {"A12", {}, "binary classification", {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}}},
      {"B1",
       {"a1", "a2", "a4", "b1"},
       "generated table",
       {{"a2*b1+a1^2", "0", "a1+a2", "a1*a4-a2^2", "a4*b1+a2*a1+a1", "a2^2-a2-a1*a4", "a2^2+2*a2-a1*a4+a4+1", "a4"},
        {"0", "a2*b1+a1^2", "a2*b1+a1^2-a1+b1", "a4*b1+a1*a2", "-a2*b1-a1^2+a1", "a2", "1-a1", "a2^2-a1*a4+a4"}}},
      {"B2",
       {"a1", "b1", "b2"},
       "generated table",
       {{"a1^2", "0", "0", "a1", "b1", "b2", "1-a1", "0"},
        {"a1*b1+b2*b1", "b2^2", "(1-a1)*b2", "b1", "a1*(1-a1)", "0", "0", "1-a1"}}},
      {"B3",
       {"b1", "b2"},
       "generated table",
       {{"b1", "b2", "1", "-1", "0", "1", "1", "0"}, {"b1*b2", "b2^2+b1", "b1+b2", "-b2", "-b1", "1-b2", "0", "1"}}},
      {"B4",
       {"a1", "b2"},
       "generated table",
       {{"a1^2", "0", "0", "0", "0", "0", "0", "0"}, {"0", "b2^2", "(1-a1)*b2", "0", "a1*(1-a1)", "0", "0", "0"}}},
      {"B5",
       {"a1"},
       "generated table",
       {{"a1^2", "0", "0", "0", "0", "0", "0", "0"},
        {"3*a1-1", "(2*a1-1)^2", "(2*a1-1)*(1-a1)", "0", "a1*(1-a1)", "0", "0", "0"}}},
      {"B6",
       {"a1", "b1"},
       "generated table",
       {{"a1^2", "0", "0", "a1", "b1", "1-a1", "-a1", "0"},
        {"b1", "(1-a1)^2", "-a1*(1-a1)", "b1", "-a1^2", "0", "0", "-a1"}}},
      {"B7",
       {"b1"},
       "generated table",
       {{"b1", "b1+1", "0", "-1", "0", "1", "1", "0"}, {"b1", "1", "b1", "-1", "-b1", "-1", "0", "1"}}},
      {"B8",
       {"a1"},
       "generated table",
       {{"a1^2", "0", "0", "0", "a1^2", "0", "0", "0"}, {"0", "(1-a1)^2", "-a1*(1-a1)", "0", "0", "0", "0", "0"}}},
      {"B9", {}, "generated table", {{"1/9", "0", "0", "0", "0", "0", "0", "0"}, {"1", "4/9", "-2/9", "0", "-1/9", "0", "0", "0"}}},
      {"B10", {}, "generated table", {{"0", "0", "0", "-1", "0", "1", "1", "0"}, {"0", "0", "0", "0", "0", "0", "0", "1"}}},
      {"B11", {}, "generated table", {{"1", "0", "0", "-1", "-1", "1", "1", "0"}, {"0", "1", "1", "0", "0", "0", "0", "1"}}},
      {"Cstar", {}, "inexpressible example", {{"1", "0", "0", "1", "0", "1", "-1", "0"}, {"0", "-1", "1", "0", "1", "0", "0", "1"}}},
      {"Cdagger", {}, "collision example", {{"1/9", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1/9", "-2/9", "0", "2/9", "0", "0", "0"}}},
      {"Ex52", {}, "totally associative example", {{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}}},
  };
}

// Entries of the printed table that are known to disagree with direct
// generation: (row, l, i, j, k), 1-based.
struct Erratum {
  const char* row;
  std::size_t l, i, j, k;
};
constexpr Erratum kDocumentedErrata[] = {{"B8", 1, 2, 1, 1}};

bool is_documented(const std::string& row, std::size_t l, std::size_t i, std::size_t j, std::size_t k) {
  return std::any_of(std::begin(kDocumentedErrata), std::end(kDocumentedErrata), [&](const Erratum& e) {
    return row == e.row && l == e.l && i == e.i && j == e.j && k == e.k;
  });
}

Json rational_json(const mpq_class& q) { return q.get_str(); }

Json point(std::initializer_list<std::pair<const char*, const char*>> kv) {
  Json out = Json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

Json named(const char* name, Json params) { return Json{{"name", name}, {"params", std::move(params)}}; }

Json printed(const Rows& rows) {
  return msc_to_json(build_template({}, rows));
}

Assignment assignment_from_json(const Json& doc) {
  Assignment a;
  for (const auto& [k, v] : doc.items()) a[k] = parse_rational(v.get<std::string>());
  return a;
}

Msc named_msc(const Json& ref) {
  return catalog_get(ref.at("name").get<std::string>(), assignment_from_json(ref.at("params")));
}

std::string label(const Json& ref) {
  std::string out = ref.at("name").get<std::string>();
  if (ref.at("params").empty()) return out;
  out += "(";
  bool first = true;
  for (const auto& [k, v] : ref.at("params").items()) {
    if (!first) out += ",";
    first = false;
    out += v.get<std::string>();
  }
  return out + ")";
}

Json samples_for(const FamilyEntry& f) {
  Json out = Json::array();
  if (f.params.empty()) {
    out.push_back(Json::object());
    return out;
  }
  for (const char* v : {"1", "-1", "1/2"}) {
    Json p = Json::object();
    for (const auto& name : f.params) p[name] = v;
    out.push_back(p);
  }
  return out;
}

std::vector<ClaimRecord> build_claims() {
  std::vector<ClaimRecord> out;
  const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};

  for (int i = 1; i <= 12; ++i) {
    std::string a = "A" + std::to_string(i);
    Json target = i == 12 ? Json("trivial") : Json("B" + std::to_string(i));
    out.push_back({"T-" + a, ClaimKind::table_row, a + " generates " + (i == 12 ? "the zero 3-algebra" : "B" + std::to_string(i)),
                   Json{{"source", a}, {"target", target}}});
  }

  out.push_back({"SCAN-B2", ClaimKind::tot_assoc_scan, "B2 is totally associative on the default grid exactly at the listed points",
                 Json{{"family", "B2"},
                      {"expected",
                       {point({{"a1", "0"}, {"b1", "0"}, {"b2", "0"}}), point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "-1/2"}}),
                        point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "1/2"}})}}}});
  out.push_back({"SCAN-B4", ClaimKind::tot_assoc_scan, "B4 is totally associative on the default grid exactly at the listed points",
                 Json{{"family", "B4"},
                      {"expected",
                       {point({{"a1", "0"}, {"b2", "0"}}), point({{"a1", "1/2"}, {"b2", "-1/2"}}),
                        point({{"a1", "1/2"}, {"b2", "0"}}), point({{"a1", "1/2"}, {"b2", "1/2"}}),
                        point({{"a1", "1"}, {"b2", "-1"}}), point({{"a1", "1"}, {"b2", "0"}}),
                        point({{"a1", "1"}, {"b2", "1"}})}}}});

  out.push_back({"INX-Cstar", ClaimKind::inexpressible, "Cstar is not generated by any binary algebra",
                 Json{{"target", "Cstar"}, {"primes", {5, 7}}}});

  for (int i = 1; i <= 11; ++i) {
    std::string b = "B" + std::to_string(i);
    std::string a = "A" + std::to_string(i);
    out.push_back({"NI-Cstar-" + b, ClaimKind::non_iso, "Cstar is not isomorphic to " + b,
                   Json{{"source", "Cstar"}, {"family", b}, {"generator", a}, {"samples", samples_for(family(b))},
                        {"primes", {5, 7}}}});
  }

  out.push_back({"COL-Cdagger", ClaimKind::collision,
                 "A4(1/3,-1/3) and A5(1/3) are not isomorphic but both generate Cdagger",
                 Json{{"generators", {named("A4", point({{"a1", "1/3"}, {"b2", "-1/3"}})), named("A5", point({{"a1", "1/3"}}))}},
                      {"target", printed({{"1/9", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1/9", "-2/9", "0", "2/9", "0", "0", "0"}})},
                      {"primes", {5, 7, 11}}}});
  out.push_back({"COL-A4-1", ClaimKind::collision, "A4(1,-1) and A4(1,1) are not isomorphic but generate the same 3-algebra",
                 Json{{"generators", {named("A4", point({{"a1", "1"}, {"b2", "-1"}})), named("A4", point({{"a1", "1"}, {"b2", "1"}}))}},
                      {"target", printed({{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}})},
                      {"primes", {5, 7, 11}}}});

  Msc a2_alt = build_template({"a1", "b1", "b2"}, {{"a1", "0", "0", "1"}, {"-b1", "b2", "1-a1", "0"}});
  Msc a6_alt = build_template({"a1", "b1"}, {{"a1", "0", "0", "1"}, {"-b1", "1-a1", "-a1", "0"}});
  out.push_back({"ALT-A2", ClaimKind::alternate_form, "A2 is isomorphic to its form with b1 negated",
                 Json{{"family", "A2"}, {"alternate", msc_to_json(a2_alt)}, {"samples", samples_for(family("A2"))},
                      {"primes", {5, 7}}}});
  out.push_back({"ALT-A6", ClaimKind::alternate_form, "A6 is isomorphic to its form with b1 negated",
                 Json{{"family", "A6"}, {"alternate", msc_to_json(a6_alt)}, {"samples", samples_for(family("A6"))},
                      {"primes", {5, 7}}}});

  const Rows ta_rows[] = {
      {{"0", "0", "0", "0", "0", "0", "1", "0"}, {"0", "0", "0", "0", "0", "0", "0", "1"}},
      {{"1/4", "0", "0", "1/2", "0", "-1/2", "1/2", "0"}, {"0", "1/4", "1/4", "0", "1/4", "0", "0", "1/2"}},
      {{"1/4", "0", "0", "1/2", "0", "1/2", "1/2", "0"}, {"0", "1/4", "1/4", "0", "1/4", "0", "0", "1/2"}},
      {{"1/4", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1/4", "-1/4", "0", "1/4", "0", "0", "0"}},
      {{"1/4", "0", "0", "0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "1/4", "0", "0", "0"}},
      {{"1/4", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1/4", "1/4", "0", "1/4", "0", "0", "0"}},
      {{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}},
      {{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0", "0", "0", "0"}},
  };
  const std::vector<Json> ta_names[] = {
      {named("B2", point({{"a1", "0"}, {"b1", "0"}, {"b2", "0"}}))},
      {named("B2", point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "-1/2"}}))},
      {named("B2", point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "1/2"}}))},
      {named("B4", point({{"a1", "1/2"}, {"b2", "-1/2"}}))},
      {named("B4", point({{"a1", "1/2"}, {"b2", "0"}}))},
      {named("B4", point({{"a1", "1/2"}, {"b2", "1/2"}}))},
      {named("B4", point({{"a1", "1"}, {"b2", "-1"}})), named("B4", point({{"a1", "1"}, {"b2", "1"}}))},
      {named("B4", point({{"a1", "1"}, {"b2", "0"}}))},
  };
  for (std::size_t t = 0; t < 8; ++t) {
    std::string names;
    for (const auto& n : ta_names[t]) names += (names.empty() ? "" : " = ") + label(n);
    out.push_back({std::string("TA-") + roman[t], ClaimKind::tot_assoc_list, names + " is totally associative",
                   Json{{"named", ta_names[t]}, {"printed", printed(ta_rows[t])}}});
  }

  struct Binary {
    Json ref;
    Rows rows;
  };
  const Binary as_list[] = {
      {named("A2", point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "1/2"}})), {{"1/2", "0", "0", "1"}, {"0", "1/2", "1/2", "0"}}},
      {named("A4", point({{"a1", "1"}, {"b2", "0"}})), {{"1", "0", "0", "0"}, {"0", "0", "0", "0"}}},
      {named("A4", point({{"a1", "1/2"}, {"b2", "1/2"}})), {{"1/2", "0", "0", "0"}, {"0", "1/2", "1/2", "0"}}},
      {named("A4", point({{"a1", "1"}, {"b2", "1"}})), {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}}},
      {named("A4", point({{"a1", "1/2"}, {"b2", "0"}})), {{"1/2", "0", "0", "0"}, {"0", "0", "1/2", "0"}}},
      {named("A12", Json::object()), {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}}},
  };
  for (std::size_t t = 0; t < 6; ++t) {
    out.push_back({std::string("AS-") + roman[t], ClaimKind::assoc_binary_list, label(as_list[t].ref) + " is associative",
                   Json{{"named", as_list[t].ref}, {"printed", printed(as_list[t].rows)}}});
  }

  const std::pair<Json, Json> na_list[] = {
      {named("A2", point({{"a1", "0"}, {"b1", "0"}, {"b2", "0"}})), named("B2", point({{"a1", "0"}, {"b1", "0"}, {"b2", "0"}}))},
      {named("A2", point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "-1/2"}})),
       named("B2", point({{"a1", "1/2"}, {"b1", "0"}, {"b2", "-1/2"}}))},
      {named("A4", point({{"a1", "1/2"}, {"b2", "-1/2"}})), named("B4", point({{"a1", "1/2"}, {"b2", "-1/2"}}))},
      {named("A4", point({{"a1", "1"}, {"b2", "-1"}})), named("B4", point({{"a1", "1"}, {"b2", "-1"}}))},
  };
  for (std::size_t t = 0; t < 4; ++t) {
    out.push_back({"NA-" + std::to_string(t + 1), ClaimKind::nonassoc_generators,
                   label(na_list[t].second) + " is totally associative and generated by the non-associative " +
                       label(na_list[t].first),
                   Json{{"generator", na_list[t].first}, {"generated", na_list[t].second}}});
  }
  return out;
}

ClaimResult make_result(const ClaimRecord& rec, bool pass, Json evidence) {
  return {rec.id, rec.kind, pass ? ClaimStatus::pass : ClaimStatus::fail, false, std::move(evidence)};
}

ClaimResult verify_table_row(const ClaimRecord& rec, const std::vector<TableMismatch>& all) {
  std::string source = rec.payload.at("source");
  std::string target = rec.payload.at("target");
  std::string row = target == "trivial" ? source : target;
  Json mism = Json::array();
  bool all_documented = true;
  for (const auto& m : all) {
    if (m.row != row) continue;
    all_documented = all_documented && m.documented;
    mism.push_back(Json{{"l", m.l}, {"i", m.i}, {"j", m.j}, {"k", m.k}, {"table", m.printed}, {"computed", m.computed},
                        {"documented", m.documented}});
  }
  Json ev{{"source", source}, {"target", target}, {"mismatches", mism}};
  ClaimResult r = make_result(rec, mism.empty(), std::move(ev));
  r.expected_mismatch = !mism.empty() && all_documented;
  return r;
}

Json assignment_list_json(const std::vector<Assignment>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(assignment_to_json(p));
  return out;
}

ClaimResult verify_scan(const ClaimRecord& rec) {
  std::string fam = rec.payload.at("family");
  std::vector<Assignment> expected;
  for (const auto& p : rec.payload.at("expected")) expected.push_back(assignment_from_json(p));
  auto got = totassoc_scan(fam, default_scan_grid());
  Json grid = Json::array();
  for (const auto& g : default_scan_grid()) grid.push_back(rational_json(g));
  return make_result(rec, got == expected,
                     Json{{"family", fam}, {"grid", grid}, {"found", assignment_list_json(got)},
                          {"expected", assignment_list_json(expected)}});
}

ClaimResult verify_inexpressible(const ClaimRecord& rec, unsigned jobs) {
  ExpressOptions opts;
  opts.primes.clear();
  for (const auto& p : rec.payload.at("primes")) opts.primes.push_back(p.get<std::uint64_t>());
  opts.jobs = jobs;
  SolveOutcome out = certify_expressibility(catalog_get(rec.payload.at("target").get<std::string>()), opts);
  ClaimResult r = make_result(rec, false, solve_outcome_to_json(out));
  switch (out.status) {
    case SolveStatus::witness: r.status = ClaimStatus::fail; break;
    case SolveStatus::no_solution_mod_p:
    case SolveStatus::certified_empty_over_closure: r.status = ClaimStatus::pass; break;
    case SolveStatus::inconclusive: r.status = ClaimStatus::inconclusive; break;
  }
  return r;
}

Json iso_summary(const IsoSearchResult& res) {
  Json out = iso_result_to_json(res);
  out["candidates"] = res.candidates;
  return out;
}

ClaimResult verify_non_iso(const ClaimRecord& rec, unsigned jobs) {
  Msc source = catalog_get(rec.payload.at("source").get<std::string>());
  std::string fam = rec.payload.at("family");
  std::string gen = rec.payload.at("generator");
  bool pass = true;
  Json checks = Json::array();
  for (const auto& s : rec.payload.at("samples")) {
    Assignment a = assignment_from_json(s);
    Msc printed_b = catalog_get(fam, a);
    Msc generated = generate_nary(catalog_get(gen, a), 3);
    for (const auto& pj : rec.payload.at("primes")) {
      auto p = pj.get<std::uint64_t>();
      IsoSearchOptions o{false, jobs};
      auto r1 = iso_search(source, printed_b, p, o);
      auto r2 = iso_search(source, generated, p, o);
      pass = pass && r1.witnesses.empty() && r2.witnesses.empty();
      checks.push_back(Json{{"params", s},
                            {"prime", p},
                            {"table_witnesses", r1.witnesses.size()},
                            {"generated_witnesses", r2.witnesses.size()},
                            {"generated_matches_table", printed_b == generated}});
    }
  }
  return make_result(rec, pass, Json{{"source", rec.payload.at("source")}, {"family", fam}, {"checks", checks}});
}

ClaimResult verify_collision(const ClaimRecord& rec, unsigned jobs) {
  const auto& gens = rec.payload.at("generators");
  Msc g0 = named_msc(gens.at(0));
  Msc g1 = named_msc(gens.at(1));
  Msc target = msc_from_json(rec.payload.at("target"));
  bool r0 = expressibility_residual(g0, target).is_zero();
  bool r1 = expressibility_residual(g1, target).is_zero();
  bool pass = r0 && r1;
  Json searches = Json::array();
  for (const auto& pj : rec.payload.at("primes")) {
    auto p = pj.get<std::uint64_t>();
    auto res = iso_search(g0, g1, p, IsoSearchOptions{false, jobs});
    pass = pass && res.witnesses.empty();
    searches.push_back(iso_summary(res));
  }
  return make_result(rec, pass,
                     Json{{"generators", {label(gens.at(0)), label(gens.at(1))}},
                          {"residual_zero", {r0, r1}},
                          {"iso_searches", searches}});
}

ClaimResult verify_alternate(const ClaimRecord& rec, unsigned jobs) {
  std::string fam = rec.payload.at("family");
  Msc alt = msc_from_json(rec.payload.at("alternate"));
  bool pass = true;
  Json checks = Json::array();
  for (const auto& s : rec.payload.at("samples")) {
    Assignment a = assignment_from_json(s);
    Msc lhs = catalog_get(fam, a);
    Msc rhs = specialize(alt, a);
    for (const auto& pj : rec.payload.at("primes")) {
      auto p = pj.get<std::uint64_t>();
      auto res = iso_search(lhs, rhs, p, IsoSearchOptions{false, jobs});
      pass = pass && !res.witnesses.empty();
      Json c{{"params", s}, {"prime", p}, {"found", !res.witnesses.empty()}};
      if (!res.witnesses.empty()) c["g"] = matrix_to_json(res.witnesses.front().g.matrix());
      checks.push_back(c);
    }
  }
  return make_result(rec, pass, Json{{"family", fam}, {"checks", checks}});
}

ClaimResult verify_tot_assoc_list(const ClaimRecord& rec) {
  Msc shown = msc_from_json(rec.payload.at("printed"));
  AssocReport rep = assoc_report(shown);
  bool pass = rep.verdict;
  Json named_ev = Json::array();
  for (const auto& ref : rec.payload.at("named")) {
    Msc spec = named_msc(ref);
    bool same = spec == shown;
    bool ta = is_totally_associative(spec);
    pass = pass && same;
    named_ev.push_back(Json{{"algebra", label(ref)}, {"matches_printed", same}, {"totally_associative", ta}});
  }
  return make_result(rec, pass, Json{{"printed", assoc_report_to_json(rep)}, {"named", named_ev}});
}

ClaimResult verify_assoc_binary(const ClaimRecord& rec) {
  Msc shown = msc_from_json(rec.payload.at("printed"));
  Msc spec = named_msc(rec.payload.at("named"));
  AssocReport rep = assoc_report(shown);
  bool same = spec == shown;
  return make_result(rec, rep.verdict && same,
                     Json{{"algebra", label(rec.payload.at("named"))}, {"matches_printed", same},
                          {"printed", assoc_report_to_json(rep)}});
}

ClaimResult verify_nonassoc(const ClaimRecord& rec) {
  Msc gen = named_msc(rec.payload.at("generator"));
  Msc expected = named_msc(rec.payload.at("generated"));
  AssocReport bin = assoc_report(gen);
  Msc t = generate_nary(gen, 3);
  bool same = t == expected;
  AssocReport ter = assoc_report(t);
  return make_result(rec, !bin.verdict && same && ter.verdict,
                     Json{{"generator", label(rec.payload.at("generator"))},
                          {"generator_assoc", assoc_report_to_json(bin)},
                          {"generated", label(rec.payload.at("generated"))},
                          {"generated_matches", same},
                          {"generated_assoc", assoc_report_to_json(ter)}});
}

ClaimResult verify_claim(const ClaimRecord& rec, unsigned jobs, const std::vector<TableMismatch>* table) {
  switch (rec.kind) {
    case ClaimKind::table_row: return verify_table_row(rec, table ? *table : table1_mismatches());
    case ClaimKind::tot_assoc_scan: return verify_scan(rec);
    case ClaimKind::inexpressible: return verify_inexpressible(rec, jobs);
    case ClaimKind::non_iso: return verify_non_iso(rec, jobs);
    case ClaimKind::collision: return verify_collision(rec, jobs);
    case ClaimKind::alternate_form: return verify_alternate(rec, jobs);
    case ClaimKind::tot_assoc_list: return verify_tot_assoc_list(rec);
    case ClaimKind::assoc_binary_list: return verify_assoc_binary(rec);
    case ClaimKind::nonassoc_generators: return verify_nonassoc(rec);
  }
  throw Error("unknown claim kind");
}

template <class Pred>
Report run_claims(Pred select, unsigned jobs) {
  std::vector<const ClaimRecord*> picked;
  for (const auto& rec : claim_records())
    if (select(rec)) picked.push_back(&rec);
  unsigned workers = resolve_jobs(jobs);
  std::vector<TableMismatch> table;
  bool need_table = std::any_of(picked.begin(), picked.end(), [](auto* r) { return r->kind == ClaimKind::table_row; });
  if (need_table) table = table1_mismatches();
  // The outer fan-out already saturates the workers, so inner searches run
  // single-threaded unless only one claim is being checked.
  unsigned inner = picked.size() == 1 ? workers : 1;
  std::vector<std::optional<ClaimResult>> results(picked.size());
  parallel_for(picked.size(), workers,
               [&](std::size_t i) { results[i] = verify_claim(*picked[i], inner, need_table ? &table : nullptr); });
  Report rep;
  for (auto& r : results) rep.claims.push_back(std::move(*r));
  return rep;
}

}  // namespace

const std::vector<FamilyEntry>& families() {
  static const std::vector<FamilyEntry> entries = [] {
    std::vector<FamilyEntry> out;
    for (auto& s : family_sources())
      out.push_back({s.name, s.params, build_template(s.params, s.rows), s.provenance});
    return out;
  }();
  return entries;
}

const FamilyEntry& family(std::string_view name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

Msc catalog_get(std::string_view name, const std::optional<Assignment>& assignment) {
  const FamilyEntry& f = family(name);
  if (!assignment) return f.msc_template;
  for (const auto& [k, v] : *assignment) {
    if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
      throw Error(f.name + " has no parameter '" + k + "'");
  }
  for (const auto& p : f.params) {
    if (!assignment->contains(p)) throw Error(f.name + ": missing value for parameter '" + p + "'");
  }
  if (f.params.empty()) return f.msc_template;
  return specialize(f.msc_template, *assignment);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Assignment parse_params(std::string_view text) {
  Assignment out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.empty()) {
      if (comma == std::string_view::npos && pos == 0) break;
      throw Error("params: empty item");
    }
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw Error("params: expected name=value, got '" + std::string(item) + "'");
    std::string key(trim(item.substr(0, eq)));
    if (key.empty()) throw Error("params: expected name=value, got '" + std::string(item) + "'");
    if (out.contains(key)) throw Error("params: '" + key + "' given twice");
    RingElem v = parse_scalar(item.substr(eq + 1), Ring::rationals());
    out[key] = v.rational();
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::table_row: return "table_row";
    case ClaimKind::inexpressible: return "inexpressible";
    case ClaimKind::collision: return "collision";
    case ClaimKind::non_iso: return "non_iso";
    case ClaimKind::alternate_form: return "alternate_form";
    case ClaimKind::tot_assoc_scan: return "tot_assoc_scan";
    case ClaimKind::tot_assoc_list: return "tot_assoc_list";
    case ClaimKind::assoc_binary_list: return "assoc_binary_list";
    case ClaimKind::nonassoc_generators: return "nonassoc_generators";
  }
  return "unknown";
}

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

const std::vector<ClaimRecord>& claim_records() {
  static const std::vector<ClaimRecord> records = build_claims();
  return records;
}

bool Report::ok() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.status == ClaimStatus::pass || c.expected_mismatch; });
}

Json Report::to_json() const {
  Json list = Json::array();
  std::size_t pass = 0, fail = 0, inconclusive = 0, expected = 0;
  for (const auto& c : claims) {
    list.push_back(Json{{"id", c.id},
                        {"kind", to_string(c.kind)},
                        {"status", to_string(c.status)},
                        {"expected_mismatch", c.expected_mismatch},
                        {"evidence", c.evidence}});
    if (c.status == ClaimStatus::pass) ++pass;
    if (c.status == ClaimStatus::fail) ++fail;
    if (c.status == ClaimStatus::inconclusive) ++inconclusive;
    if (c.expected_mismatch) ++expected;
  }
  return Json{{"claims", list},
              {"summary",
               {{"total", claims.size()},
                {"pass", pass},
                {"fail", fail},
                {"inconclusive", inconclusive},
                {"expected_mismatches", expected},
                {"ok", ok()}}}};
}

std::vector<TableMismatch> table1_mismatches() {
  std::vector<TableMismatch> out;
  for (int n = 1; n <= 12; ++n) {
    const FamilyEntry& a = family("A" + std::to_string(n));
    Msc gen = generate_nary(a.msc_template, 3);
    std::string row = n == 12 ? a.name : "B" + std::to_string(n);
    Msc expected = n == 12 ? Msc::zero(gen.ring(), 2, 3) : family(row).msc_template;
    for (std::size_t l = 0; l < 2; ++l) {
      for (std::size_t c = 0; c < 8; ++c) {
        const RingElem& x = gen.entries().at(l, c);
        const RingElem& y = expected.entries().at(l, c);
        if (x == y) continue;
        auto t = Msc::tuple_of(c, 2, 3);
        TableMismatch m{row, l + 1, t[0] + 1, t[1] + 1, t[2] + 1, y.to_string(), x.to_string(), false};
        m.documented = is_documented(row, m.l, m.i, m.j, m.k);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

Report table1_verify() {
  return run_claims([](const ClaimRecord& r) { return r.kind == ClaimKind::table_row; }, 1);
}

std::vector<mpq_class> default_scan_grid() {
  return {mpq_class(-1), mpq_class(-1, 2), mpq_class(0), mpq_class(1, 3), mpq_class(1, 2), mpq_class(1)};
}

std::vector<Assignment> totassoc_scan(std::string_view family_name, const std::vector<std::vector<mpq_class>>& grid) {
  const FamilyEntry& f = family(family_name);
  if (grid.size() != f.params.size())
    throw Error(f.name + ": grid has " + std::to_string(grid.size()) + " axes, expected " + std::to_string(f.params.size()));
  if (f.msc_template.arity() != 3) throw Error(f.name + " is not a 3-algebra");
  std::vector<RingElem> residual;
  for (const auto& r : total_assoc_residuals(f.msc_template)) {
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (!r.at(i, j).is_zero()) residual.push_back(r.at(i, j));
  }
  std::vector<Assignment> out;
  for (const auto& axis : grid)
    if (axis.empty()) return out;
  std::vector<std::size_t> idx(grid.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t k = 0; k < grid.size(); ++k) a[f.params[k]] = grid[k][idx[k]];
    bool ok = std::all_of(residual.begin(), residual.end(),
                          [&](const RingElem& e) { return substitute(e, a).is_zero(); });
    if (ok) out.push_back(std::move(a));
    std::size_t k = grid.size();
    while (k > 0 && ++idx[k - 1] == grid[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<Assignment> totassoc_scan(std::string_view family_name, const std::vector<mpq_class>& grid) {
  return totassoc_scan(family_name, std::vector<std::vector<mpq_class>>(family(family_name).params.size(), grid));
}

Report totassoc_scan_verify(unsigned jobs) {
  return run_claims([](const ClaimRecord& r) { return r.kind == ClaimKind::tot_assoc_scan; }, jobs);
}

Report claims_verify(unsigned jobs) {
  return run_claims(
      [](const ClaimRecord& r) { return r.kind != ClaimKind::table_row && r.kind != ClaimKind::tot_assoc_scan; }, jobs);
}

Report paper_replay(unsigned jobs) {
  return run_claims([](const ClaimRecord&) { return true; }, jobs);
}

Json catalog_bundle() {
  Json fams = Json::object();
  for (const auto& f : families()) {
    fams[f.name] = Json{{"params", f.params}, {"provenance", f.provenance}, {"msc", msc_to_json(f.msc_template)}};
  }
  Json claims = Json::array();
  for (const auto& c : claim_records()) {
    claims.push_back(Json{{"id", c.id}, {"kind", to_string(c.kind)}, {"statement", c.statement}, {"payload", c.payload}});
  }
  return Json{{"families", fams}, {"claims", claims}};
}

Json assignment_to_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [k, v] : a) out[k] = rational_json(v);
  return out;
}

}  // namespace trialg
