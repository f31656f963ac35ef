#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "typecalc/fixtures.hpp"
#include "typecalc/graded_series.hpp"
#include "typecalc/report.hpp"

namespace typecalc {

enum class StrategyKind {
  kummer,        // the base type 1/2, 1/2
  thirds,        // the base type 1/3, 1/3, 1/3
  cube,          // the base type 1/3, 2/3
  power,         // reduce(power(t, k)) is one of the three base types
  mult_one,      // contained in the multiplicity-one spectrum 1/n .. m/n
  fifteen,       // contained in 1/15, 2/15, 3/15, 4/15, 8/15, 9/15
  klein_seven,   // exactly 1/7, 2/7, 4/7
  small_factor,  // disjoint from its inverse, some factor of weight < 1
};

struct Strategy {
  StrategyKind kind = StrategyKind::kummer;
  i64 k = 0;                        // power: smallest working exponent
  int target = 0;                   // power: base row 1..3
  i64 n = 0;                        // mult_one: the order
  std::optional<Monomial> witness;  // small_factor: a qualifying decomposition

  std::string str() const;

  /// Witnesses are evidence, not identity.
  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.kind == b.kind && a.k == b.k && a.target == b.target && a.n == b.n;
  }
  friend bool operator<(const Strategy& a, const Strategy& b) {
    return std::tie(a.kind, a.k, a.target, a.n) < std::tie(b.kind, b.k, b.target, b.n);
  }
};

/// The base types reachable by power reduction: 1 -> {1/2,1/2},
/// 2 -> {1/3,1/3,1/3}, 3 -> {1/3,2/3}.
const AutType& base_row_type(int j);

/// All multisets of catalogue primitives summing to t exactly.  The search is
/// grouped by entry denominator since primitive types are
/// denominator-homogeneous.  Empty when no decomposition exists (in
/// particular whenever t has zero entries, which no catalogue primitive can
/// supply).
std::vector<Monomial> decompose(const AutType& t, const PrimitiveCatalogue& catalogue);

/// Every applicable strategy for a reduced type of weight exactly 1.  Unreduced
/// input is reduced first; weight != 1 is out of scope.  An empty result would
/// contradict the case analysis and throws ClassificationError.
std::vector<Strategy> classify(const AutType& t, const PrimitiveCatalogue& catalogue);

struct AgeOneRow {
  int index = 0;
  i64 n = 1;
  AutType type;
  std::string display;               // as printed in the reference table
  NoteTag note;                      // the reference table's resolution
  std::vector<Strategy> applicable;  // every strategy that applies
};

/// The 35 reduced age-1 types, in reference-table order.
struct AgeOneCatalogue {
  std::vector<AgeOneRow> rows;
};

enum class SliceMethod { series, knapsack, both };

/// Reduced age-1 types from the grade-5040 slice, deduplicated and sorted
/// canonically (by denominator, then entries).
std::vector<AutType> compute_age_one_types(SliceMethod method, const PrimitiveCatalogue& catalogue);

/// Full catalogue: computed types aligned with the reference rows, each with
/// its note and the complete applicable-strategy set.  Throws
/// ConsistencyError if the computation and the reference disagree.
AgeOneCatalogue enumerate_age_one(const Fixtures& fixtures, SliceMethod method = SliceMethod::both);

VerificationReport verify_table1(const Fixtures& fixtures);
VerificationReport verify_table2(const Fixtures& fixtures, SliceMethod method = SliceMethod::both);
/// Power notes are replayed with the stated exponents (including the
/// 20/1/1 split over the three base rows); every other note's strategy must
/// appear in the computed applicable set.
VerificationReport verify_notes(const Fixtures& fixtures);
/// Series route vs knapsack route at every grade <= 5040, the grade-5040
/// slice against the reference polynomial, unit coefficients, injectivity of
/// monomial_to_type on the slice, and weight 1 of every image.
VerificationReport verify_series(const Fixtures& fixtures);

}  // namespace typecalc
