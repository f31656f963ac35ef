#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "typecalc/qz.hpp"

using namespace typecalc;

namespace {

// independent of the library's prime-filter route
i64 phi_by_gcd(i64 n) {
  i64 count = 0;
  for (i64 x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("frac_canon canonicalizes into [0,1)") {
  CHECK(frac_canon(5, 15) == FracQZ{1, 3});
  CHECK(frac_canon(9, 2) == FracQZ{1, 2});
  CHECK(frac_canon(-1, 3) == FracQZ{2, 3});
  CHECK(frac_canon(0, 7) == FracQZ{0, 1});
  CHECK(frac_canon(21, 7) == FracQZ{0, 1});
  CHECK_THROWS_AS(frac_canon(1, 0), InvalidInput);
  CHECK_THROWS_AS(frac_canon(1, -3), InvalidInput);
}

TEST_CASE("frac_canon is idempotent") {
  for (i64 den = 1; den <= 40; ++den) {
    for (i64 num = -80; num <= 80; ++num) {
      const FracQZ once = frac_canon(num, den);
      CHECK(frac_canon(once.num, once.den) == once);
    }
  }
}

TEST_CASE("group operations in Q/Z") {
  CHECK(frac_neg(frac_canon(1, 3)) == FracQZ{2, 3});
  CHECK(frac_neg(FracQZ{0, 1}) == FracQZ{0, 1});
  CHECK(frac_add(frac_canon(1, 2), frac_canon(1, 2)) == FracQZ{0, 1});
  CHECK(frac_add(frac_canon(1, 6), frac_canon(1, 3)) == FracQZ{1, 2});
  CHECK(frac_scale(frac_canon(5, 6), 3) == FracQZ{1, 2});
  CHECK(frac_scale(frac_canon(1, 7), 2) == FracQZ{2, 7});
  for (i64 den = 1; den <= 24; ++den) {
    for (i64 num = 0; num < den; ++num) {
      const FracQZ x = frac_canon(num, den);
      if (!(x == FracQZ{num, den})) continue;  // only canonical representatives
      CHECK(frac_add(x, frac_neg(x)) == FracQZ{0, 1});
      for (i64 a = -5; a <= 5; ++a)
        for (i64 b = -5; b <= 5; ++b)
          CHECK(frac_scale(frac_scale(x, a), b) == frac_scale(x, a * b));
    }
  }
}

TEST_CASE("order of an element") {
  CHECK(order(FracQZ{0, 1}) == 1);
  CHECK(order(frac_canon(1, 2)) == 2);
  CHECK(order(frac_canon(7, 12)) == 12);
  for (i64 den = 1; den <= 30; ++den) {
    for (i64 num = 0; num < den; ++num) {
      const FracQZ x = frac_canon(num, den);
      for (i64 k = 1; k <= 12; ++k)
        CHECK(order(frac_scale(x, k)) == order(x) / std::gcd(order(x), k));
    }
  }
}

TEST_CASE("elementary functions") {
  CHECK(totient(90) == 24);
  CHECK(totient(1) == 1);
  CHECK(radical(12) == 6);
  CHECK(radical(1) == 1);
  CHECK(omega(12) == 2);
  CHECK(omega(1) == 0);
  CHECK(units(7).elements == std::vector<i64>{1, 2, 3, 4, 5, 6});
  CHECK(units(1).elements.empty());
  CHECK_THROWS_AS(totient(0), InvalidInput);
  CHECK_THROWS_AS(radical(0), InvalidInput);
  CHECK_THROWS_AS(omega(0), InvalidInput);
  for (i64 n = 1; n <= 300; ++n) CHECK(totient(n) == phi_by_gcd(n));
  for (i64 n = 2; n <= 300; ++n)
    CHECK(static_cast<i64>(units(n).elements.size()) == totient(n));
}

TEST_CASE("sum of min(x, n-x) over the units") {
  CHECK(sum_min_units(7) == 12);  // 1+2+3+3+2+1
  CHECK(sum_min_units(2) == 1);
  CHECK_THROWS_AS(sum_min_units(1), InvalidInput);
  // the inequality that powers the denominator cutoff, on a sample range
  for (i64 n = 2; n <= 500; ++n)
    if (totient(n) > 24) CHECK(sum_min_units(n) > 2 * n);
}

TEST_CASE("sum of squares over the units, two routes") {
  CHECK(sum_squares_units(12, SumSquaresMethod::brute) == 196);  // 1+25+49+121
  CHECK(sum_squares_units(12, SumSquaresMethod::closed) == 196);
  CHECK(sum_squares_units(2, SumSquaresMethod::brute) == 1);
  CHECK(sum_squares_units(2, SumSquaresMethod::closed) == 1);
  for (i64 n = 2; n <= 2000; ++n)
    CHECK(sum_squares_units(n, SumSquaresMethod::brute) ==
          sum_squares_units(n, SumSquaresMethod::closed));
}

TEST_CASE("largest n with phi(n) <= bound") {
  CHECK(max_n_with_phi_le(24) == 90);
  CHECK(max_n_with_phi_le(1) == 2);
  CHECK(max_n_with_phi_le(2) == 6);
  CHECK_THROWS_AS(max_n_with_phi_le(0), InvalidInput);
  // oracle: scan up to 2*bound^2 + 4, enough since phi(n) >= sqrt(n/2)
  for (i64 bound = 1; bound <= 40; ++bound) {
    i64 best = 1;
    for (i64 n = 1; n <= 2 * bound * bound + 4; ++n)
      if (phi_by_gcd(n) <= bound) best = n;
    CHECK(max_n_with_phi_le(bound) == best);
  }
}

TEST_CASE("rational arithmetic is exact and checked") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1) - Rational(13, 18)) == Rational(5, 18));
  CHECK(Rational(7, 1).is_integer());
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), InvalidInput);
  const i64 big = (i64{1} << 62);
  CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
  CHECK_THROWS_AS(checked_add(big, big), OverflowError);
}
