#pragma once

#include <string>
#include <vector>

#include "typecalc/graded_series.hpp"
#include "typecalc/type_algebra.hpp"

namespace typecalc {

/// Tag of the notes column of the age-one table.
struct NoteTag {
  enum class Kind { kummer, cube, small_factor, seven, fifteen, mult_one, power };
  Kind kind = Kind::kummer;
  i64 k = 0;      // power only: the exponent
  int target = 0;  // power only: base row 1..3

  std::string str() const;
  friend bool operator==(const NoteTag& a, const NoteTag& b) = default;
};

struct Table1Fixture {
  int index = 0;
  i64 n = 0;
  std::string display;  // entry list as printed, possibly unreduced
  AutType type;         // canonical form of display
  Rational wt;
};

struct Table2Fixture {
  int index = 0;
  i64 n = 0;
  std::string display;
  AutType type;
  NoteTag note;
};

/// Golden reference data: the two tables and the grade-5040 polynomial.
/// Embedded by default; loadable from JSON for fault-injection runs.
struct Fixtures {
  std::vector<Table1Fixture> table1;
  std::vector<Table2Fixture> table2;
  std::vector<Monomial> polynomial;

  static const Fixtures& builtin();
  static Fixtures from_json_text(const std::string& text);
  static Fixtures from_file(const std::string& path);
};

/// The embedded fixture document, also the schema reference for overrides.
const char* builtin_fixture_json();

}  // namespace typecalc
