#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "json.hpp"
#include "test_util.hpp"
#include "typecalc/classification.hpp"

using namespace typecalc;
using testutil::T;

namespace {

const PrimitiveCatalogue& catalogue() {
  static const PrimitiveCatalogue cat = primitives_up_to_weight(Rational(1));
  return cat;
}

bool has_kind(const std::vector<Strategy>& set, StrategyKind kind) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Strategy& s) { return s.kind == kind; });
}

Strategy power_strategy(i64 k, int target) {
  Strategy s;
  s.kind = StrategyKind::power;
  s.k = k;
  s.target = target;
  return s;
}

Strategy mult_one_strategy(i64 n) {
  Strategy s;
  s.kind = StrategyKind::mult_one;
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("decompose finds exact covers by catalogue primitives") {
  const auto unique_a8a2 = decompose(T("1/6, 1/6, 1/6, 1/6, 1/3"), catalogue());
  REQUIRE(unique_a8a2.size() == 1);
  CHECK(unique_a8a2.front() == Monomial::parse("a2*a8^4"));

  const auto cube = decompose(T("1/3, 2/3"), catalogue());
  REQUIRE(cube.size() == 1);
  CHECK(cube.front() == Monomial::parse("a2*a3"));

  const auto empty = decompose(AutType{}, catalogue());
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().is_unit());

  // zeros cannot be covered by any catalogue primitive
  CHECK(decompose(T("0, 1/3, 2/3"), catalogue()).empty());

  // round trip: factors sum back to the input
  const GradedSeries series(catalogue());
  for (const char* lit : {"1/2, 1/2", "1/6, 1/6, 2/6, 2/6", "1/8, 1/8, 3/8, 3/8",
                          "1/10, 2/10, 3/10, 4/10", "1/15, 2/15, 4/15, 8/15"}) {
    const AutType t = T(lit);
    const auto decs = decompose(t, catalogue());
    CHECK(!decs.empty());
    for (const auto& m : decs) CHECK(series.monomial_to_type(m) == t);
  }
}

TEST_CASE("classification of the base rows") {
  const auto kummer = classify(T("1/2, 1/2"), catalogue());
  REQUIRE(kummer.size() == 1);
  CHECK(kummer.front().kind == StrategyKind::kummer);

  const auto thirds = classify(T("1/3, 1/3, 1/3"), catalogue());
  CHECK(has_kind(thirds, StrategyKind::thirds));
  CHECK(has_kind(thirds, StrategyKind::small_factor));

  const auto cube = classify(T("1/3, 2/3"), catalogue());
  CHECK(has_kind(cube, StrategyKind::cube));
}

TEST_CASE("power reduction reports the smallest exponent") {
  const auto row13 = classify(T("1/6, 1/6, 2/6, 2/6"), catalogue());
  CHECK(std::count(row13.begin(), row13.end(), power_strategy(3, 1)) == 1);

  const auto row19 = classify(T("1/10, 2/10, 3/10, 4/10"), catalogue());
  CHECK(std::count(row19.begin(), row19.end(), power_strategy(5, 1)) == 1);
  CHECK(std::count(row19.begin(), row19.end(), mult_one_strategy(10)) == 1);

  // 1/6, 5/6 doubles to the cube base before it triples to the half base
  const auto row11 = classify(T("1/6, 5/6"), catalogue());
  CHECK(std::count(row11.begin(), row11.end(), power_strategy(2, 3)) == 1);

  const auto row9 = classify(T("1/6, 1/6, 1/6, 3/6"), catalogue());
  CHECK(std::count(row9.begin(), row9.end(), power_strategy(2, 2)) == 1);
}

TEST_CASE("named strategies") {
  const auto seven = classify(T("1/7, 2/7, 4/7"), catalogue());
  REQUIRE(seven.size() == 1);
  CHECK(seven.front().kind == StrategyKind::klein_seven);

  const auto fifteen = classify(T("1/15, 2/15, 4/15, 8/15"), catalogue());
  REQUIRE(fifteen.size() == 1);
  CHECK(fifteen.front().kind == StrategyKind::fifteen);

  const auto sixteen = classify(T("1/16, 3/16, 5/16, 7/16"), catalogue());
  REQUIRE(sixteen.size() == 1);
  CHECK(sixteen.front() == mult_one_strategy(16));
}

TEST_CASE("classification preconditions") {
  CHECK_THROWS_AS(classify(T("1/2"), catalogue()), InvalidInput);    // weight 1/2
  CHECK_THROWS_AS(classify(T("1/3, 1/3"), catalogue()), InvalidInput);  // weight 2/3
  // unreduced input is reduced first
  const auto padded = classify(T("0, 0, 1/2, 1/2"), catalogue());
  CHECK(has_kind(padded, StrategyKind::kummer));
}

TEST_CASE("age-one catalogue matches the reference rows") {
  const auto cat = enumerate_age_one(Fixtures::builtin());
  REQUIRE(cat.rows.size() == 35);
  for (std::size_t i = 0; i < cat.rows.size(); ++i) {
    const auto& row = cat.rows[i];
    CHECK(row.index == static_cast<int>(i) + 1);
    CHECK(weight(row.type) == Rational(1));
    CHECK(is_reduced(row.type));
    CHECK(denominator(row.type) == row.n);
    CHECK(!row.applicable.empty());
  }
  CHECK(cat.rows[13].type == T("1/7, 2/7, 4/7"));                 // row 14
  CHECK(cat.rows[34].type == T("4/24, 4/24, 4/24, 3/24, 9/24"));  // row 35
  CHECK(cat.rows[34].type == T("1/8, 1/6, 1/6, 1/6, 3/8"));
}

TEST_CASE("the noted strategy applies wherever a strategy is named") {
  const auto cat = enumerate_age_one(Fixtures::builtin());
  for (const auto& row : cat.rows) {
    Strategy wanted;
    switch (row.note.kind) {
      case NoteTag::Kind::power: continue;  // replayed in verify_notes with the stated k
      case NoteTag::Kind::kummer: wanted.kind = StrategyKind::kummer; break;
      case NoteTag::Kind::cube: wanted.kind = StrategyKind::cube; break;
      case NoteTag::Kind::small_factor: wanted.kind = StrategyKind::small_factor; break;
      case NoteTag::Kind::seven: wanted.kind = StrategyKind::klein_seven; break;
      case NoteTag::Kind::fifteen: wanted.kind = StrategyKind::fifteen; break;
      case NoteTag::Kind::mult_one:
        wanted.kind = StrategyKind::mult_one;
        wanted.n = row.n;
        break;
    }
    CHECK(std::find(row.applicable.begin(), row.applicable.end(), wanted) !=
          row.applicable.end());
  }
}

TEST_CASE("small-factor rows are disjoint from their inverses with small factors only") {
  const auto& fixtures = Fixtures::builtin();
  const std::vector<int> expected_rows = {2, 4, 7, 8, 17, 25};
  std::vector<int> found_rows;
  for (const auto& row : fixtures.table2) {
    if (row.note.kind != NoteTag::Kind::small_factor) continue;
    found_rows.push_back(row.index);
    CHECK(is_disjoint(row.type, inverse(row.type)));
    const auto decs = decompose(row.type, catalogue());
    CHECK(!decs.empty());
    for (const auto& m : decs)
      for (const auto& [index, mult] : m.exponents())
        CHECK(catalogue().row(index).wt < Rational(1));
  }
  CHECK(found_rows == expected_rows);
}

TEST_CASE("mult-one rows use the hyperelliptic spectra of n = 16, 20, 24") {
  const auto& fixtures = Fixtures::builtin();
  std::vector<std::pair<int, i64>> rows;  // (row, n)
  for (const auto& row : fixtures.table2)
    if (row.note.kind == NoteTag::Kind::mult_one) rows.emplace_back(row.index, row.n);
  CHECK(rows == std::vector<std::pair<int, i64>>{{30, 16}, {31, 20}, {32, 24}});
  for (const auto& [index, n] : rows) {
    const auto& t = fixtures.table2[static_cast<std::size_t>(index) - 1].type;
    const i64 m = (n + 1) / 2 - 1;
    std::vector<FracQZ> spectrum;
    for (i64 a = 1; a <= m; ++a) spectrum.push_back(frac_canon(a, n));
    CHECK(is_contained(t, AutType::validated(std::move(spectrum))));
  }
}

TEST_CASE("power notes replay on spot-checked rows") {
  const auto& rows = Fixtures::builtin().table2;
  // row 33 with k = 12 lands on the half base
  CHECK(reduce(power(rows[32].type, 12)) == T("1/2, 1/2"));
  // row 23 with k = 4 lands on the cube base
  CHECK(reduce(power(rows[22].type, 4)) == T("1/3, 2/3"));
  // row 9 with k = 2 lands on the thirds base
  CHECK(reduce(power(rows[8].type, 2)) == T("1/3, 1/3, 1/3"));
}

TEST_CASE("verification reports pass on the builtin reference data") {
  CHECK(verify_table1(Fixtures::builtin()).passed());
  CHECK(verify_table2(Fixtures::builtin()).passed());
  CHECK(verify_series(Fixtures::builtin()).passed());
  CHECK(verify_notes(Fixtures::builtin()).passed());
}

TEST_CASE("verification reports carry counts and the scale note") {
  const auto t1 = verify_table1(Fixtures::builtin());
  CHECK(t1.expected_count == 28);
  CHECK(t1.found_count == 28);
  const auto t2 = verify_table2(Fixtures::builtin());
  CHECK(t2.expected_count == 35);
  CHECK(t2.found_count == 35);
  const auto series = verify_series(Fixtures::builtin());
  bool lcm_note = false;
  for (const auto& note : series.notes)
    if (note.find("1260") != std::string::npos) lcm_note = true;
  CHECK(lcm_note);
}

TEST_CASE("a tampered fixture is caught with one mismatch") {
  auto doc = nlohmann::json::parse(builtin_fixture_json());
  doc["table1"][2]["weight"] = "1/3";  // row 3 really has weight 2/3
  const auto tampered = Fixtures::from_json_text(doc.dump());
  const auto rep = verify_table1(tampered);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.mismatches.size() == 1);
  CHECK(rep.mismatches.front().row == 3);
}

TEST_CASE("a tampered age-one row is caught") {
  auto doc = nlohmann::json::parse(builtin_fixture_json());
  doc["table2"][13]["type"] = "1/7, 2/7, 3/7";  // row 14 should be 1/7, 2/7, 4/7
  const auto tampered = Fixtures::from_json_text(doc.dump());
  CHECK_FALSE(verify_table2(tampered).passed());
}

TEST_CASE("a tampered polynomial is caught") {
  auto doc = nlohmann::json::parse(builtin_fixture_json());
  doc["polynomial"][0] = "a1^3";
  const auto tampered = Fixtures::from_json_text(doc.dump());
  CHECK_FALSE(verify_series(tampered).passed());
}
