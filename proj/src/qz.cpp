#include "typecalc/qz.hpp"

#include <algorithm>

namespace typecalc {

Rational::Rational(i64 n, i64 d) {
  if (d == 0) throw InvalidInput("rational: zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  const i64 g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

FracQZ frac_canon(i64 num, i64 den) {
  if (den <= 0) throw InvalidInput("frac_canon: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const i64 g = std::gcd(num, den);
  return FracQZ{num / g, den / g};
}

FracQZ frac_neg(FracQZ x) { return frac_canon(x.den - x.num, x.den); }

FracQZ frac_add(FracQZ x, FracQZ y) {
  return frac_canon(checked_add(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
                    checked_mul(x.den, y.den));
}

FracQZ frac_scale(FracQZ x, i64 k) {
  k %= x.den;  // the scaled value only depends on k mod den
  return frac_canon(checked_mul(x.num, k), x.den);
}

i64 order(FracQZ x) { return x.den; }

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw InvalidInput("factorize: n must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 totient(i64 n) {
  if (n < 1) throw InvalidInput("totient: n must be positive");
  i64 phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    i64 pe = 1;
    for (int i = 1; i < e; ++i) pe = checked_mul(pe, p);
    phi = checked_mul(phi, checked_mul(pe, p - 1));
  }
  return phi;
}

i64 radical(i64 n) {
  if (n < 1) throw InvalidInput("radical: n must be positive");
  i64 r = 1;
  for (const auto& [p, e] : factorize(n)) r = checked_mul(r, p);
  return r;
}

int omega(i64 n) {
  if (n < 1) throw InvalidInput("omega: n must be positive");
  return static_cast<int>(factorize(n).size());
}

UnitsSet units(i64 n) {
  UnitsSet s;
  s.n = n;
  for_each_unit(n, [&](i64 x) { s.elements.push_back(x); });
  return s;
}

i64 sum_min_units(i64 n) {
  if (n < 2) throw InvalidInput("sum_min_units: n must be at least 2");
  i64 acc = 0;
  for_each_unit(n, [&](i64 x) { acc = checked_add(acc, std::min(x, n - x)); });
  return acc;
}

i64 sum_squares_units(i64 n, SumSquaresMethod method) {
  if (n < 2) throw InvalidInput("sum_squares_units: n must be at least 2");
  if (method == SumSquaresMethod::brute) {
    i64 acc = 0;
    for_each_unit(n, [&](i64 x) { acc = checked_add(acc, checked_mul(x, x)); });
    return acc;
  }
  const Rational sign = (omega(n) % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational value = Rational(totient(n)) * Rational(n) * Rational(n) / Rational(3) +
                         sign * Rational(totient(radical(n))) * Rational(n) / Rational(6);
  if (!value.is_integer())
    throw ConsistencyError("sum_squares_units: closed form gave the non-integer " + value.str() +
                           " for n = " + std::to_string(n));
  return value.num;
}

namespace {

void phi_candidates_dfs(const std::vector<i64>& primes, std::size_t from, i64 n, i64 phi, i64 bound,
                        i64& best) {
  best = std::max(best, n);
  for (std::size_t j = from; j < primes.size(); ++j) {
    const i64 p = primes[j];
    i64 phi_part = p - 1;  // phi(p^e) = p^(e-1)(p-1)
    i64 p_pow = p;
    while (phi_part <= bound / phi) {  // equivalent to phi*phi_part <= bound, overflow-free
      phi_candidates_dfs(primes, j + 1, checked_mul(n, p_pow), phi * phi_part, bound, best);
      phi_part = checked_mul(phi_part, p);
      p_pow = checked_mul(p_pow, p);
    }
  }
}

}  // namespace

i64 max_n_with_phi_le(i64 bound) {
  if (bound < 1) throw InvalidInput("max_n_with_phi_le: bound must be at least 1");
  // Any prime factor p of an admissible n satisfies phi(p) = p-1 <= bound.
  std::vector<i64> primes;
  for (i64 p = 2; p <= bound + 1; ++p) {
    bool prime = p >= 2;
    for (i64 q = 2; q * q <= p; ++q) {
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(p);
  }
  i64 best = 1;
  phi_candidates_dfs(primes, 0, 1, 1, bound, best);
  return best;
}

}  // namespace typecalc
