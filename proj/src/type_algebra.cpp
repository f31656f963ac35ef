#include "typecalc/type_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace typecalc {

namespace {

struct ClassViolation {
  i64 order = 0;
  std::vector<std::pair<i64, int>> counts;  // (residue, F) over the whole class
};

/// Checks F-constancy on every order class met by the support.  The scan runs
/// over all of S_d for each represented d, so a missing orbit member is caught
/// even when no entry witnesses it.
std::optional<ClassViolation> find_violation(const std::vector<FracQZ>& sorted_entries) {
  std::map<FracQZ, int> mult;
  std::set<i64> orders;
  for (const auto& e : sorted_entries) {
    ++mult[e];
    orders.insert(e.den);
  }
  const auto count = [&](FracQZ x) {
    auto it = mult.find(x);
    return it == mult.end() ? 0 : it->second;
  };
  for (i64 d : orders) {
    if (d <= 2) continue;  // order classes of 0 and 1/2 are singletons
    std::vector<std::pair<i64, int>> counts;
    bool constant = true;
    for_each_unit(d, [&](i64 a) {
      const int f = count(FracQZ{a, d}) + count(FracQZ{d - a, d});
      if (!counts.empty() && f != counts.front().second) constant = false;
      counts.emplace_back(a, f);
    });
    if (!constant) return ClassViolation{d, std::move(counts)};
  }
  return std::nullopt;
}

std::vector<FracQZ> canonicalize(std::vector<FracQZ> entries) {
  for (auto& e : entries) e = frac_canon(e.num, e.den);
  std::sort(entries.begin(), entries.end());
  return entries;
}

}  // namespace

AutType AutType::validated(std::vector<FracQZ> entries) {
  entries = canonicalize(std::move(entries));
  if (auto v = find_violation(entries)) {
    std::string msg = "multiset is not conjugation-stable on the order-" +
                      std::to_string(v->order) + " class; F values:";
    for (const auto& [a, f] : v->counts)
      msg += " F(" + std::to_string(a) + "/" + std::to_string(v->order) +
             ")=" + std::to_string(f);
    throw StabilityError(msg, v->order, v->counts);
  }
  return AutType(std::move(entries), AlreadyValid{});
}

AutType validate_type(std::vector<FracQZ> entries) { return AutType::validated(std::move(entries)); }

bool is_stable(std::vector<FracQZ> entries) {
  return !find_violation(canonicalize(std::move(entries))).has_value();
}

Rational weight(const AutType& t) {
  Rational acc(0);
  for (const auto& e : t.entries()) acc = acc + to_rational(e);
  return acc;
}

AutType inverse(const AutType& t) {
  std::vector<FracQZ> out;
  out.reserve(t.size());
  for (const auto& e : t.entries()) out.push_back(frac_neg(e));
  return AutType::validated(std::move(out));
}

AutType power(const AutType& t, i64 k) {
  if (k < 1) throw InvalidInput("power: exponent must be a positive integer");
  std::vector<FracQZ> out;
  out.reserve(t.size());
  for (const auto& e : t.entries()) out.push_back(frac_scale(e, k));
  try {
    return AutType::validated(std::move(out));
  } catch (const StabilityError& e) {
    throw ConsistencyError(std::string("power: scaling broke stability: ") + e.what());
  }
}

AutType reduce(const AutType& t) {
  std::vector<FracQZ> out;
  for (const auto& e : t.entries())
    if (e.num != 0) out.push_back(e);
  return AutType::validated(std::move(out));
}

bool is_reduced(const AutType& t) {
  return t.empty() || t.entries().front().num != 0;
}

AutType sum(const AutType& a, const AutType& b) {
  std::vector<FracQZ> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.entries().begin(), a.entries().end());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  try {
    return AutType::validated(std::move(out));
  } catch (const StabilityError& e) {
    throw ConsistencyError(std::string("sum: union broke stability: ") + e.what());
  }
}

bool is_disjoint(const AutType& a, const AutType& b) {
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

bool is_contained(const AutType& inner, const AutType& outer) {
  auto j = outer.entries().begin();
  for (const auto& e : inner.entries()) {
    while (j != outer.entries().end() && *j < e) ++j;
    if (j == outer.entries().end() || !(*j == e)) return false;
    ++j;
  }
  return true;
}

i64 denominator(const AutType& t) {
  i64 l = 1;
  for (const auto& e : t.entries()) l = checked_lcm(l, e.den);
  return l;
}

int dimension(const AutType& t) { return static_cast<int>(t.size()); }

PrimitiveType PrimitiveType::validated(AutType base, std::optional<int> index) {
  if (base.empty()) throw InvalidInput("primitive type: must be non-empty");
  const i64 n = base.entries().front().den;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base.entries()[i].den != n)
      throw InvalidInput("primitive type: entries must share one denominator");
    if (i > 0 && base.entries()[i] == base.entries()[i - 1])
      throw InvalidInput("primitive type: entries must have multiplicity one");
  }
  if (n >= 3) {
    // exactly one of a/n and (n-a)/n for each a in S_n below n/2
    std::set<i64> present;
    for (const auto& e : base.entries()) present.insert(e.num);
    bool ok = 2 * static_cast<i64>(base.size()) == totient(n);
    for_each_unit(n, [&](i64 a) {
      if (2 * a < n && present.count(a) == present.count(n - a)) ok = false;
    });
    if (!ok)
      throw InvalidInput(
          "primitive type: must pick exactly one of a/n and (n-a)/n per conjugate pair");
  } else if (!(base.size() == 1 && (n == 1 || base.entries().front().num == 1))) {
    throw InvalidInput("primitive type: denominator " + std::to_string(n) +
                       " admits only a singleton");
  }
  PrimitiveType p;
  p.base = std::move(base);
  p.n = n;
  p.index = index;
  return p;
}

// Sub-multiset searches enumerate multiplicity vectors of the distinct entries.
namespace {

struct DistinctEntries {
  std::vector<FracQZ> values;
  std::vector<int> mults;
};

DistinctEntries distinct(const AutType& t) {
  DistinctEntries d;
  for (const auto& e : t.entries()) {
    if (!d.values.empty() && d.values.back() == e) {
      ++d.mults.back();
    } else {
      d.values.push_back(e);
      d.mults.push_back(1);
    }
  }
  return d;
}

bool any_proper_submultiset_impl(const AutType& t, bool (*pred)(const std::vector<FracQZ>&,
                                                                const std::vector<FracQZ>&)) {
  const auto d = distinct(t);
  std::vector<int> pick(d.values.size(), 0);
  const auto total = t.size();
  while (true) {
    // advance the mixed-radix counter
    std::size_t i = 0;
    while (i < pick.size() && pick[i] == d.mults[i]) pick[i++] = 0;
    if (i == pick.size()) return false;
    ++pick[i];
    std::vector<FracQZ> sub, rest;
    for (std::size_t j = 0; j < pick.size(); ++j) {
      for (int c = 0; c < pick[j]; ++c) sub.push_back(d.values[j]);
      for (int c = pick[j]; c < d.mults[j]; ++c) rest.push_back(d.values[j]);
    }
    if (sub.size() == total) continue;  // not proper
    if (pred(sub, rest)) return true;
  }
}

}  // namespace

bool has_stable_proper_submultiset(const AutType& t) {
  return any_proper_submultiset_impl(
      t, [](const std::vector<FracQZ>& sub, const std::vector<FracQZ>&) { return is_stable(sub); });
}

bool is_primitive(const AutType& t) {
  if (t.empty()) return false;
  return !any_proper_submultiset_impl(t, [](const std::vector<FracQZ>& sub,
                                            const std::vector<FracQZ>& rest) {
    return is_stable(sub) && is_stable(rest);
  });
}

}  // namespace typecalc
