#include <doctest.h>

#include "f1zeta/multivariate.hpp"

using namespace f1zeta;

TEST_CASE("cone series expands to the geometric series") {
  // u / (1 - u)
  auto r = MultiRational::cone_series(1, {{1}}, {{1}});
  auto s = r.expand(6);
  for (int k = 0; k <= 6; ++k) CHECK(s.coefficient({k}) == (k >= 1 ? 1 : 0));

  // u1 u2 / ((1 - u1)(1 - u2))
  auto r2 = MultiRational::cone_series(2, {{1, 1}}, {{1, 0}, {0, 1}});
  auto s2 = r2.expand(5);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b) CHECK(s2.coefficient({a, b}) == (a >= 1 && b >= 1 ? 1 : 0));
}

TEST_CASE("sums with different denominators") {
  auto a = MultiRational::cone_series(1, {{0}}, {{2}});  // 1/(1-u^2)
  auto b = MultiRational::cone_series(1, {{1}}, {{3}});  // u/(1-u^3)
  auto s = (a + b).expand(12);
  for (int k = 0; k <= 12; ++k) {
    int expected = (k % 2 == 0) + (k % 3 == 1);
    CHECK(s.coefficient({k}) == expected);
  }
  auto twice = (a * mpz_class(2)).expand(4);
  CHECK(twice.coefficient({4}) == 2);
}

TEST_CASE("zero exponent generator diverges") {
  CHECK_THROWS(MultiRational::cone_series(2, {{0, 0}}, {{0, 0}}));
}

TEST_CASE("series truncation and equality") {
  MultiSeries s(2, 3);
  s.add({1, 1}, 5);
  s.add({3, 1}, 7);  // above the cutoff
  CHECK(s.coefficient({1, 1}) == 5);
  CHECK(s.coefficient({3, 1}) == 0);
  CHECK(s.truncated(1).coefficient({1, 1}) == 0);
  MultiSeries t(2, 3);
  t.add({1, 1}, 5);
  CHECK(s == t);
}
