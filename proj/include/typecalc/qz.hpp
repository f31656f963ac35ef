#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "typecalc/errors.hpp"

namespace typecalc {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline i64 checked_neg(i64 a) {
  i64 r;
  if (__builtin_sub_overflow(i64{0}, a, &r)) throw OverflowError("integer overflow in negation");
  return r;
}

inline i64 checked_lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

/// Exact signed rational, always in lowest terms with a positive denominator.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 v) : num(v) {}  // NOLINT: implicit from integers is intended
  Rational(i64 n, i64 d);

  bool is_integer() const { return den == 1; }
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
            checked_mul(a.den, b.den)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(checked_neg(b.num), b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw InvalidInput("rational division by zero");
    return {checked_mul(a.num, b.den), checked_mul(a.den, b.num)};
  }
};

/// Element of Q/Z stored as the canonical fraction num/den in [0, 1),
/// gcd(num, den) = 1.  Zero is 0/1.
struct FracQZ {
  i64 num = 0;
  i64 den = 1;

  friend bool operator==(const FracQZ& a, const FracQZ& b) = default;
  friend bool operator<(const FracQZ& a, const FracQZ& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

/// Canonical representative of num/den mod 1.  den must be positive.
FracQZ frac_canon(i64 num, i64 den);
FracQZ frac_neg(FracQZ x);
FracQZ frac_add(FracQZ x, FracQZ y);
/// Canonical form of k*x in Q/Z; any integer k is accepted.
FracQZ frac_scale(FracQZ x, i64 k);
/// Order of x in Q/Z; order(0) = 1.
i64 order(FracQZ x);

inline Rational to_rational(FracQZ x) { return {x.num, x.den}; }

/// S_n: the positive integers below n and coprime to n.  Empty for n = 1.
struct UnitsSet {
  i64 n = 1;
  std::vector<i64> elements;
};

std::vector<std::pair<i64, int>> factorize(i64 n);
i64 totient(i64 n);
/// Largest squarefree divisor of n;  radical(1) = 1.
i64 radical(i64 n);
/// Number of distinct prime divisors;  omega(1) = 0.
int omega(i64 n);
UnitsSet units(i64 n);

/// Calls fn(x) for every x in S_n, in increasing order.
template <typename F>
void for_each_unit(i64 n, F&& fn) {
  if (n < 1) throw InvalidInput("for_each_unit: n must be positive");
  const auto fac = factorize(n);
  for (i64 x = 1; x < n; ++x) {
    bool coprime = true;
    for (const auto& [p, e] : fac) {
      if (x % p == 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) fn(x);
  }
}

/// Sum of min(x, n-x) over S_n, by direct summation.  Requires n >= 2.
i64 sum_min_units(i64 n);

enum class SumSquaresMethod { brute, closed };

/// Sum of x^2 over S_n.  `brute` sums directly; `closed` evaluates
/// phi(n)n^2/3 + (-1)^omega(n) phi(radical(n)) n/6 in exact rationals
/// and fails loudly if the result is not an integer.
i64 sum_squares_units(i64 n, SumSquaresMethod method);

/// Largest n with phi(n) <= bound.  Enumerates the finite candidate set of
/// products of admissible prime powers (p-1 <= bound caps the primes,
/// phi(p^e) <= bound caps each exponent) and takes the maximum.
i64 max_n_with_phi_le(i64 bound);

}  // namespace typecalc
