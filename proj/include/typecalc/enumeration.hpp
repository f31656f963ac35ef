#pragma once

#include <vector>

#include "typecalc/report.hpp"
#include "typecalc/type_algebra.hpp"

namespace typecalc {

struct CatalogueRow {
  int index = 0;  // 1-based position, doubles as the series variable index
  i64 n = 1;
  PrimitiveType prim;
  Rational wt;
};

/// The primitive types of weight <= wmax, ordered by (denominator, weight).
struct PrimitiveCatalogue {
  std::vector<CatalogueRow> rows;

  const CatalogueRow& row(int index) const;
  std::vector<const CatalogueRow*> rows_for_denominator(i64 n) const;
};

/// All primitive types of denominator n: the singleton 1/2 for n = 2, and the
/// 2^(phi(n)/2) one-per-conjugate-pair choice multisets for n >= 3.
std::vector<PrimitiveType> primitives_for_n(i64 n);

enum class PrimSearch {
  exhaustive,    // enumerate every choice multiset, then filter by weight
  largest_flip,  // weight <= 1 forces any flipped pair to be the largest unit below n/2
};

/// Catalogue of primitive types with weight <= wmax, 0 < wmax <= 1.  Searches
/// denominators 2..90; larger n cannot reach weight <= 1 because the unit
/// min-sum bound pushes every candidate's weight above 1, and the same bound
/// prunes denominators within range.
PrimitiveCatalogue primitives_up_to_weight(const Rational& wmax,
                                           PrimSearch method = PrimSearch::exhaustive);

/// sum_min_units(n) / (2n): a lower bound for the weight of any primitive type
/// of denominator n >= 3.
Rational lower_bound_weight(i64 n);

/// Sweeps n <= n_max for: the min-sum inequality whenever phi(n) > 24, the
/// maximality of 90 among n with phi(n) <= 24, and agreement of the two
/// sum-of-squares routes.  Requires n_max >= 91 so the maximality claim is
/// actually exercised.
VerificationReport verify_lemmas(i64 n_max);

}  // namespace typecalc
