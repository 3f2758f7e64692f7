#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hv/numeric.hpp"

using namespace hv;

TEST_CASE("pbinom evaluates the falling-factorial product") {
  CHECK(pbinom(7, 4) == 35);
  CHECK(pbinom(2, 4) == 0);
  CHECK(pbinom(-1, 3) == -1);  // (-1)(-2)(-3)/6
  CHECK(pbinom(5, 0) == 1);
  CHECK(pbinom(-3, 2) == 6);   // (-3)(-4)/2
  CHECK_THROWS_AS(pbinom(3, -1), std::invalid_argument);
}

TEST_CASE("pbinom satisfies the Pascal recurrence at negative arguments") {
  for (Int s = -50; s <= 50; ++s)
    for (Int r = 1; r <= 10; ++r)
      CHECK(pbinom(s, r) == pbinom(s - 1, r - 1) + pbinom(s - 1, r));
}

TEST_CASE("pbinom is exact at thousand-bit operands") {
  // C(2000,1000) has ~2000 bits; the Pascal split is an independent route.
  BigInt direct = pbinom(2000, 1000);
  CHECK(direct == pbinom(1999, 999) + pbinom(1999, 1000));
  CHECK(direct > BigInt(1) << 1990);
}

TEST_CASE("binom clamps combinatorially") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(1, 4) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(4, 4) == 1);
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  BigRational r = make_rational(2, -4);
  CHECK(numerator(r) == -1);
  CHECK(denominator(r) == 2);
  CHECK(rational_str(r) == "-1/2");
  CHECK(rational_str(parse_rational("6/4")) == "3/2");
  CHECK(parse_rational("-7") == BigRational(-7));
  // exact threshold comparisons, no rounding
  CHECK(parse_rational("7/2") > BigRational(3));
  CHECK_FALSE(parse_rational("7/2") >= BigRational(4));
}

TEST_CASE("floor and ceiling division handle negatives") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(1, 3) == 1);
  CHECK(ceil_div(-1, 5) == 0);
  CHECK(ceil_div(6, 3) == 2);
}

TEST_CASE("series_pow_ratio expands (1 + ... + t^(d-2))^(n+1)") {
  auto s = series_pow_ratio(3, 3, 4);
  CHECK(s.coeffs == std::vector<BigInt>{1, 4, 6, 4, 1});

  auto flat = series_pow_ratio(2, 4, 3);
  CHECK(flat.coeffs == std::vector<BigInt>{1, 0, 0, 0});

  // inclusion-exclusion oracle for the quintic coefficient; series
  // coefficients of (1-t)^(-5) vanish at negative degree, hence the clamp
  auto quintic = series_pow_ratio(5, 4, 5);
  BigInt expected = 0;
  for (Int j = 0; j <= 5; ++j) {
    BigInt term = binom(5, j) * binom(5 - 4 * j + 4, 4);
    expected += (j % 2 == 0) ? term : -term;
  }
  CHECK(expected == 101);
  CHECK(quintic.at(5) == 101);
}

TEST_CASE("truncated series arithmetic") {
  auto rand_series = [](std::mt19937& g, Int cap) {
    TruncatedSeries s(cap);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (Int k = 0; k <= cap; ++k) s[k] = dist(g);
    return s;
  };
  std::mt19937 gen(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    Int cap = 1 + trial % 7;
    auto a = rand_series(gen, cap), b = rand_series(gen, cap), c = rand_series(gen, cap);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(static_cast<Int>((a * b).coeffs.size()) == cap + 1);
  }
  // multiplication truncates at the cap
  TruncatedSeries t(2);
  t[0] = 0; t[1] = 1; t[2] = 0;
  auto sq = t * t;
  CHECK(sq.coeffs == std::vector<BigInt>{0, 0, 1});
  auto cube = sq * t;
  CHECK(cube.coeffs == std::vector<BigInt>{0, 0, 0});
}
