#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "typecalc/enumeration.hpp"

namespace typecalc {

/// One decomposition shape: catalogue index -> multiplicity, no zeros stored.
/// The empty map is the unit monomial.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return {}; }
  /// Parses "a2*a8^4" (any factor order); "1" is the unit monomial.
  static Monomial parse(std::string_view text);

  Monomial& multiply(int index, int mult = 1);
  const std::map<int, int>& exponents() const { return exps_; }
  int total_degree() const;
  bool is_unit() const { return exps_.empty(); }

  /// Normalized display, factors in ascending index: "a2*a8^4".
  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::map<int, int> exps_;
};

/// Weights are measured in integer units of 1/5040.
inline constexpr i64 kGradeScale = 5040;

struct GradedSlice {
  i64 grade = 0;
  std::map<Monomial, i64> terms;

  friend bool operator==(const GradedSlice& a, const GradedSlice& b) = default;
};

/// The product of the geometric series 1/(1 - a_i y^(w_i * 5040)) over the
/// catalogue, handled one graded slice at a time.
class GradedSeries {
 public:
  explicit GradedSeries(const PrimitiveCatalogue& catalogue);

  /// Sum of mult * scaled weight over the monomial's factors.
  i64 grade_of(const Monomial& m) const;
  /// Slice of the full product at target_grade, by iterated graded
  /// multiplication of the factors.
  GradedSlice series_slice(i64 target_grade) const;
  /// Same contract, computed independently by depth-first enumeration of
  /// exponent vectors in non-increasing index order.
  GradedSlice knapsack_slice(i64 target_grade) const;
  /// All slices 0..max_grade, one pass per route.
  std::vector<GradedSlice> series_table(i64 max_grade) const;
  std::vector<GradedSlice> knapsack_table(i64 max_grade) const;

  /// Multiset sum of the catalogue primitives with the monomial's
  /// multiplicities.
  AutType monomial_to_type(const Monomial& m) const;

  i64 scaled_weight(int index) const;
  /// Minimal common multiple of the catalogue weight denominators.
  i64 weight_denominator_lcm() const { return weight_lcm_; }

 private:
  const PrimitiveCatalogue& catalogue_;
  std::vector<i64> scaled_;  // scaled_[i] = weight(row i+1) * kGradeScale
  i64 weight_lcm_ = 1;
};

}  // namespace typecalc
