#pragma once

// Shared property suites over fixture types and randomly generated valid
// types of denominator <= 48.  Each suite returns how many cases it ran and
// the descriptions of any failures, so both the unit runner and the
// acceptance runner can report them.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "typecalc/classification.hpp"
#include "typecalc/fixtures.hpp"
#include "typecalc/io.hpp"

namespace propcheck {

using namespace typecalc;

struct SuiteResult {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 0xC0FFEE123;

/// A random stable multiset: pick a few order classes d <= 48, a constant
/// F-value per class, and split each conjugate pair's F-value at random.
inline AutType random_type(Rng& rng) {
  std::uniform_int_distribution<i64> den_dist(1, 48);
  std::uniform_int_distribution<int> class_count_dist(1, 3);
  std::uniform_int_distribution<int> f_dist(1, 2);
  std::set<i64> dens;
  const int classes = class_count_dist(rng);
  while (static_cast<int>(dens.size()) < classes) dens.insert(den_dist(rng));
  std::vector<FracQZ> entries;
  for (i64 d : dens) {
    const int f_const = f_dist(rng);
    if (d == 1) {
      for (int c = 0; c < f_const; ++c) entries.push_back(FracQZ{0, 1});
      continue;
    }
    if (d == 2) {
      for (int c = 0; c < f_const; ++c) entries.push_back(FracQZ{1, 2});
      continue;
    }
    for_each_unit(d, [&](i64 a) {
      if (2 * a >= d) return;
      std::uniform_int_distribution<int> split(0, f_const);
      const int low = split(rng);
      for (int c = 0; c < low; ++c) entries.push_back(FracQZ{a, d});
      for (int c = low; c < f_const; ++c) entries.push_back(FracQZ{d - a, d});
    });
  }
  return AutType::validated(std::move(entries));
}

inline std::vector<AutType> case_pool(int random_cases) {
  std::vector<AutType> pool;
  for (const auto& row : Fixtures::builtin().table1) pool.push_back(row.type);
  for (const auto& row : Fixtures::builtin().table2) pool.push_back(row.type);
  Rng rng(kSeed);
  for (int i = 0; i < random_cases; ++i) pool.push_back(random_type(rng));
  return pool;
}

inline SuiteResult check_inverse_weight_pairing(int random_cases = 100) {
  SuiteResult r{"weight(t) + weight(inverse(t)) = #nonzero entries", 0, {}};
  for (const auto& t : case_pool(random_cases)) {
    ++r.cases;
    i64 nonzero = 0;
    for (const auto& e : t.entries())
      if (e.num != 0) ++nonzero;
    if (!(weight(t) + weight(inverse(t)) == Rational(nonzero)))
      r.failures.push_back("pairing failed for {" + type_str(t) + "}");
  }
  return r;
}

inline SuiteResult check_power_by_denominator_vanishes(int random_cases = 100) {
  SuiteResult r{"power(t, denominator(t)) reduces to the empty type", 0, {}};
  for (const auto& t : case_pool(random_cases)) {
    ++r.cases;
    const AutType p = power(t, denominator(t));
    if (!reduce(p).empty() || p.size() != t.size())
      r.failures.push_back("non-vanishing power for {" + type_str(t) + "}");
  }
  return r;
}

inline SuiteResult check_stability_closure(int random_cases = 100) {
  SuiteResult r{"stability closure under sum, power and inverse", 0, {}};
  const auto pool = case_pool(random_cases);
  Rng rng(kSeed ^ 0x5eed);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& t = pool[i];
    ++r.cases;
    try {
      (void)inverse(t);  // validated on construction
      const i64 den = denominator(t);
      for (i64 k = 1; k <= den; ++k) (void)power(t, k);
      const auto& other = pool[rng() % pool.size()];
      (void)sum(t, other);
    } catch (const Error& e) {
      r.failures.push_back(std::string("closure failed for {") + type_str(t) + "}: " + e.what());
    }
  }
  return r;
}

inline SuiteResult check_catalogue_primitivity(int random_cases = 100) {
  SuiteResult r{"primitivity of catalogue rows by exhaustive sub-multiset search", 0, {}};
  const auto catalogue = primitives_up_to_weight(Rational(1));
  for (const auto& row : catalogue.rows) {
    ++r.cases;
    if (!is_primitive(row.prim.base))
      r.failures.push_back("catalogue row " + std::to_string(row.index) + " is not primitive");
    if (has_stable_proper_submultiset(row.prim.base))
      r.failures.push_back("catalogue row " + std::to_string(row.index) +
                           " has a stable proper sub-multiset");
  }
  // beyond the catalogue: random choice multisets are primitive as well
  Rng rng(kSeed ^ 0xabcdef);
  const std::vector<i64> dens = {3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16};
  while (r.cases < 28 + random_cases) {
    const i64 n = dens[rng() % dens.size()];
    const auto prims = primitives_for_n(n);
    const auto& p = prims[rng() % prims.size()];
    ++r.cases;
    if (!is_primitive(p.base))
      r.failures.push_back("choice multiset {" + type_str(p.base) + "} is not primitive");
  }
  return r;
}

inline SuiteResult check_decompose_round_trip(int random_cases = 100) {
  SuiteResult r{"decompose round trip", 0, {}};
  const auto catalogue = primitives_up_to_weight(Rational(1));
  const GradedSeries series(catalogue);
  // all reference age-1 rows
  for (const auto& row : Fixtures::builtin().table2) {
    ++r.cases;
    const auto decs = decompose(row.type, catalogue);
    if (decs.empty()) {
      r.failures.push_back("row " + std::to_string(row.index) + " has no decomposition");
      continue;
    }
    for (const auto& m : decs)
      if (!(series.monomial_to_type(m) == row.type))
        r.failures.push_back("row " + std::to_string(row.index) + ": " + m.str() +
                             " does not sum back");
  }
  // random sums of catalogue primitives decompose back to themselves
  Rng rng(kSeed ^ 0x90210);
  for (int i = 0; i < random_cases; ++i) {
    ++r.cases;
    Monomial built;
    AutType t;
    const int factors = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f) {
      const int index = 1 + static_cast<int>(rng() % catalogue.rows.size());
      built.multiply(index);
      t = sum(t, catalogue.row(index).prim.base);
    }
    const auto decs = decompose(t, catalogue);
    if (std::find(decs.begin(), decs.end(), built) == decs.end()) {
      r.failures.push_back("random sum " + built.str() + " not among its own decompositions");
      continue;
    }
    for (const auto& m : decs)
      if (!(series.monomial_to_type(m) == t))
        r.failures.push_back("random sum " + built.str() + ": " + m.str() +
                             " does not sum back");
  }
  return r;
}

inline SuiteResult check_disjoint_inverse_characterization(int random_cases = 100) {
  SuiteResult r{"disjoint-from-inverse iff no 0, no 1/2 and no conjugate pair", 0, {}};
  for (const auto& t : case_pool(random_cases)) {
    ++r.cases;
    bool has_bad = false;
    for (const auto& e : t.entries()) {
      if (e.num == 0 || (e.num == 1 && e.den == 2)) has_bad = true;
      for (const auto& other : t.entries())
        if (frac_add(e, other) == FracQZ{0, 1} && e.num != 0) has_bad = true;
    }
    if (is_disjoint(t, inverse(t)) != !has_bad)
      r.failures.push_back("characterization failed for {" + type_str(t) + "}");
  }
  return r;
}

inline std::vector<SuiteResult> run_all_property_suites() {
  return {check_inverse_weight_pairing(),       check_power_by_denominator_vanishes(),
          check_stability_closure(),            check_catalogue_primitivity(),
          check_decompose_round_trip(),         check_disjoint_inverse_characterization()};
}

}  // namespace propcheck
