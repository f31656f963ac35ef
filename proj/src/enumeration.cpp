#include "typecalc/enumeration.hpp"

#include <algorithm>

namespace typecalc {

const CatalogueRow& PrimitiveCatalogue::row(int index) const {
  if (index < 1 || index > static_cast<int>(rows.size()))
    throw InvalidInput("catalogue index " + std::to_string(index) + " out of range 1.." +
                       std::to_string(rows.size()));
  return rows[static_cast<std::size_t>(index) - 1];
}

std::vector<const CatalogueRow*> PrimitiveCatalogue::rows_for_denominator(i64 n) const {
  std::vector<const CatalogueRow*> out;
  for (const auto& r : rows)
    if (r.n == n) out.push_back(&r);
  return out;
}

namespace {

std::vector<i64> small_units(i64 n) {
  std::vector<i64> out;
  for_each_unit(n, [&](i64 a) {
    if (2 * a < n) out.push_back(a);
  });
  return out;
}

PrimitiveType choice_multiset(i64 n, const std::vector<i64>& small, std::uint64_t flip_mask) {
  std::vector<FracQZ> entries;
  entries.reserve(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    const i64 a = (flip_mask >> i) & 1 ? n - small[i] : small[i];
    entries.push_back(FracQZ{a, n});
  }
  return PrimitiveType::validated(AutType::validated(std::move(entries)));
}

}  // namespace

std::vector<PrimitiveType> primitives_for_n(i64 n) {
  if (n < 2) throw InvalidInput("primitives_for_n: n must be at least 2");
  if (n == 2) return {PrimitiveType::validated(AutType::validated({FracQZ{1, 2}}))};
  const auto small = small_units(n);
  if (small.size() > 24)
    throw InvalidInput("primitives_for_n: 2^" + std::to_string(small.size()) +
                       " candidates is too many to enumerate");
  std::vector<PrimitiveType> out;
  out.reserve(std::size_t{1} << small.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << small.size()); ++mask)
    out.push_back(choice_multiset(n, small, mask));
  return out;
}

Rational lower_bound_weight(i64 n) {
  if (n < 3) throw InvalidInput("lower_bound_weight: n must be at least 3");
  return {sum_min_units(n), 2 * n};
}

namespace {

std::vector<PrimitiveType> largest_flip_candidates(i64 n) {
  if (n == 2) return primitives_for_n(2);
  const auto small = small_units(n);
  // Flipping any pair below the largest admissible one already overshoots
  // weight 1, so only the all-small multiset and the single largest flip can
  // qualify.
  std::vector<PrimitiveType> out;
  out.push_back(choice_multiset(n, small, 0));
  if (!small.empty())
    out.push_back(choice_multiset(n, small, std::uint64_t{1} << (small.size() - 1)));
  return out;
}

}  // namespace

PrimitiveCatalogue primitives_up_to_weight(const Rational& wmax, PrimSearch method) {
  if (!(Rational(0) < wmax && wmax <= Rational(1)))
    throw InvalidInput("primitives_up_to_weight: supported range is 0 < wmax <= 1; got " +
                       wmax.str());
  struct Item {
    i64 n;
    Rational wt;
    PrimitiveType prim;
  };
  std::vector<Item> items;
  for (i64 n = 2; n <= 90; ++n) {
    if (n >= 3 && wmax < lower_bound_weight(n)) continue;
    auto cands = method == PrimSearch::exhaustive ? primitives_for_n(n)
                                                  : largest_flip_candidates(n);
    for (auto& p : cands) {
      Rational w = weight(p.base);
      if (wmax < w) continue;
      items.push_back(Item{n, w, std::move(p)});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.wt != b.wt) return a.wt < b.wt;
    return a.prim.base < b.prim.base;
  });
  PrimitiveCatalogue cat;
  for (std::size_t i = 0; i < items.size(); ++i) {
    CatalogueRow row;
    row.index = static_cast<int>(i + 1);
    row.n = items[i].n;
    row.prim = std::move(items[i].prim);
    row.prim.index = row.index;
    row.wt = items[i].wt;
    cat.rows.push_back(std::move(row));
  }
  return cat;
}

VerificationReport verify_lemmas(i64 n_max) {
  if (n_max < 91)
    throw InvalidInput("verify_lemmas: n_max must be at least 91 to witness the bound at 90");
  VerificationReport rep;
  rep.subject = "lemmas";
  i64 checked_ineq = 0;
  i64 last_small_phi = 0;
  for (i64 n = 2; n <= n_max; ++n) {
    const i64 phi = totient(n);
    if (phi > 24) {
      ++checked_ineq;
      const i64 s = sum_min_units(n);
      if (!(s > 2 * n))
        rep.mismatches.push_back({n, "sum of min(x, n-x) > " + std::to_string(2 * n),
                                  std::to_string(s)});
    } else {
      last_small_phi = n;
    }
    const i64 brute = sum_squares_units(n, SumSquaresMethod::brute);
    const i64 closed = sum_squares_units(n, SumSquaresMethod::closed);
    if (brute != closed)
      rep.mismatches.push_back(
          {n, "sum of squares " + std::to_string(brute), "closed form " + std::to_string(closed)});
  }
  const i64 computed_max = max_n_with_phi_le(24);
  if (computed_max != 90)
    rep.mismatches.push_back({0, "max n with phi(n) <= 24 is 90", std::to_string(computed_max)});
  if (last_small_phi != 90)
    rep.mismatches.push_back(
        {last_small_phi, "no n in (90, n_max] with phi(n) <= 24", std::to_string(last_small_phi)});
  rep.expected_count = n_max - 1;  // every n in 2..n_max is checked
  rep.found_count = n_max - 1;
  rep.notes.push_back("min-sum inequality checked for " + std::to_string(checked_ineq) +
                      " values of n with phi(n) > 24, n <= " + std::to_string(n_max));
  rep.notes.push_back("sum-of-squares closed form compared against brute force for 2 <= n <= " +
                      std::to_string(n_max));
  return rep;
}

}  // namespace typecalc
