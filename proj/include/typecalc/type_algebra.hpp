#pragma once

#include <optional>
#include <vector>

#include "typecalc/qz.hpp"

namespace typecalc {

/// A multiset of elements of Q/Z, stable under conjugation: for every order d
/// met by the support, F(x) = mult(x) + mult(-x) takes the same value on all x
/// of order d.  Entries are kept sorted ascending, so equality of types is
/// equality of the entry lists.
class AutType {
 public:
  AutType() = default;  // the empty type, weight 0

  /// Canonicalizes and checks stability; throws StabilityError with the
  /// offending order class otherwise.
  static AutType validated(std::vector<FracQZ> entries);

  const std::vector<FracQZ>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const AutType& a, const AutType& b) = default;
  friend bool operator<(const AutType& a, const AutType& b) { return a.entries_ < b.entries_; }

 private:
  struct AlreadyValid {};
  AutType(std::vector<FracQZ> sorted_entries, AlreadyValid) : entries_(std::move(sorted_entries)) {}

  std::vector<FracQZ> entries_;
};

AutType validate_type(std::vector<FracQZ> entries);
/// Non-throwing stability check on an arbitrary multiset.
bool is_stable(std::vector<FracQZ> entries);

/// Exact sum of the entries (the age of an automorphism of this type).
Rational weight(const AutType& t);
/// Entry-wise negation mod 1.
AutType inverse(const AutType& t);
/// Entry-wise multiplication by k, k >= 1.  Stability of the result is
/// re-checked and a failure is an internal error.
AutType power(const AutType& t, i64 k);
/// The type with all zero entries discarded.
AutType reduce(const AutType& t);
bool is_reduced(const AutType& t);
/// Multiset union.
AutType sum(const AutType& a, const AutType& b);
/// Empty multiset intersection.
bool is_disjoint(const AutType& a, const AutType& b);
/// Multiset containment, multiplicities respected.
bool is_contained(const AutType& inner, const AutType& outer);
/// lcm of the entry orders; 1 for the empty type.
i64 denominator(const AutType& t);
/// Number of entries.
int dimension(const AutType& t);

/// A type that is not the sum of two non-empty types.  All entries share one
/// denominator n and appear with multiplicity one; for n >= 3 exactly one of
/// a/n and (n-a)/n is present for each a in S_n below n/2.
struct PrimitiveType {
  AutType base;
  i64 n = 1;
  std::optional<int> index;  // position in the weight-<=-1 catalogue, if any

  static PrimitiveType validated(AutType base, std::optional<int> index = std::nullopt);
};

/// True if some proper non-empty sub-multiset of t is itself a stable type.
/// Exhaustive over all sub-multisets; meant for small types.
bool has_stable_proper_submultiset(const AutType& t);

/// Primitivity by exhaustive search: t is non-empty and admits no split into
/// two non-empty stable halves.
bool is_primitive(const AutType& t);

}  // namespace typecalc
